// Layered placement for quiver documents.  Grid quivers (v/h tags) get
// true grid coordinates walked out from the unique source; other acyclic
// quivers get longest-path layers; anything cyclic falls back to a circle.

import { QuiverDoc, Subset, subsetKey } from "./types.js";
import { Point } from "./geometry.js";

export interface Placement {
  positions: Map<string, Point>;
  kind: "grid" | "layered" | "circular";
}

const GAP = 110;

function nonWrap(doc: QuiverDoc) {
  return doc.arrows.filter((a) => a.tag !== "wrap");
}

function sourcesOf(doc: QuiverDoc): Subset[] {
  const targets = new Set(nonWrap(doc).map((a) => subsetKey(a.to)));
  return doc.vertices.filter((v) => !targets.has(subsetKey(v)));
}

function gridWalk(doc: QuiverDoc): Map<string, Point> | null {
  const arrows = nonWrap(doc);
  if (!arrows.every((a) => a.tag.startsWith("v_") || a.tag.startsWith("h_"))) {
    return null;
  }
  const sources = sourcesOf(doc);
  if (sources.length !== 1) return null;
  const pos = new Map<string, Point>();
  pos.set(subsetKey(sources[0]!), { x: 0, y: 0 });
  const queue = [sources[0]!];
  while (queue.length) {
    const v = queue.shift()!;
    const at = pos.get(subsetKey(v))!;
    for (const a of arrows) {
      if (subsetKey(a.from) !== subsetKey(v)) continue;
      const step = a.tag.startsWith("h_") ? { x: at.x + 1, y: at.y } : { x: at.x, y: at.y + 1 };
      const key = subsetKey(a.to);
      const existing = pos.get(key);
      if (existing === undefined) {
        pos.set(key, step);
        queue.push(a.to);
      } else if (existing.x !== step.x || existing.y !== step.y) {
        return null; // inconsistent grid coordinates; use the generic layout
      }
    }
  }
  if (pos.size !== doc.vertices.length) return null;
  return pos;
}

function longestPathLayers(doc: QuiverDoc): Map<string, number> | null {
  const arrows = nonWrap(doc);
  const layer = new Map<string, number>(doc.vertices.map((v) => [subsetKey(v), 0]));
  // Bellman-Ford style relaxation; |V| rounds without change means done,
  // a change on round |V| means a cycle.
  for (let round = 0; round <= doc.vertices.length; round += 1) {
    let changed = false;
    for (const a of arrows) {
      const from = layer.get(subsetKey(a.from))!;
      const to = layer.get(subsetKey(a.to))!;
      if (from + 1 > to) {
        layer.set(subsetKey(a.to), from + 1);
        changed = true;
      }
    }
    if (!changed) return layer;
  }
  return null;
}

export function place(doc: QuiverDoc): Placement {
  const grid = gridWalk(doc);
  if (grid) {
    const positions = new Map<string, Point>();
    for (const [key, p] of grid) {
      positions.set(key, { x: 60 + p.x * GAP, y: 420 - p.y * GAP });
    }
    return { positions, kind: "grid" };
  }
  const layers = longestPathLayers(doc);
  if (layers) {
    const byLayer = new Map<number, string[]>();
    for (const v of doc.vertices) {
      const key = subsetKey(v);
      const l = layers.get(key)!;
      byLayer.set(l, [...(byLayer.get(l) ?? []), key]);
    }
    const positions = new Map<string, Point>();
    for (const [l, keys] of byLayer) {
      keys.sort();
      keys.forEach((key, i) => {
        positions.set(key, { x: 60 + l * GAP, y: 60 + i * 70 });
      });
    }
    return { positions, kind: "layered" };
  }
  const positions = new Map<string, Point>();
  const m = doc.vertices.length;
  doc.vertices.forEach((v, i) => {
    const a = -Math.PI / 2 + (2 * Math.PI * i) / m;
    positions.set(subsetKey(v), {
      x: 300 + 220 * Math.cos(a),
      y: 260 + 220 * Math.sin(a),
    });
  });
  return { positions, kind: "circular" };
}
