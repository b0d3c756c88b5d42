// SVG string builders.  Pure functions of parsed service documents plus
// selection state; no DOM access, which keeps them testable in node.

import { arcPath, pointOnCircle, visualRuns } from "./geometry.js";
import { place } from "./layout.js";
import { CollectionDoc, QuiverDoc, Subset, subsetKey } from "./types.js";

const CENTER = { x: 260, y: 260 };
const NODE_RADIUS = 210;
const PALETTE = [
  "#1b6ca8", "#c43d4b", "#2e8540", "#8a4f9e", "#c77f1a",
  "#148f8f", "#7a5230", "#5567c4", "#99103d", "#4a7a12",
  "#914ac2", "#0f7f5a",
];

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderCollectionSvg(
  doc: CollectionDoc,
  selected: Subset | null,
  highlightPair: Subset[] | null = null,
): string {
  const out: string[] = [];
  out.push(
    '<svg viewBox="0 0 520 520" xmlns="http://www.w3.org/2000/svg" class="collection-view">',
  );
  out.push(
    `<circle cx="${CENTER.x}" cy="${CENTER.y}" r="${NODE_RADIUS}" fill="none" stroke="#ccc"/>`,
  );
  for (let e = 1; e <= doc.n; e += 1) {
    const p = pointOnCircle(e, doc.n, NODE_RADIUS, CENTER);
    const lp = pointOnCircle(e, doc.n, NODE_RADIUS + 18, CENTER);
    out.push(`<circle cx="${p.x.toFixed(2)}" cy="${p.y.toFixed(2)}" r="3" fill="#444"/>`);
    out.push(
      `<text x="${lp.x.toFixed(2)}" y="${lp.y.toFixed(2)}" text-anchor="middle" ` +
        `dominant-baseline="middle" font-size="14">${e}</text>`,
    );
  }
  const flash = new Set((highlightPair ?? []).map(subsetKey));
  doc.members.forEach((member, index) => {
    const key = subsetKey(member);
    const radius = NODE_RADIUS - 14 - index * 11;
    const color = PALETTE[index % PALETTE.length]!;
    const isSelected = selected !== null && subsetKey(selected) === key;
    const classes = [
      "member",
      isSelected ? "selected" : "",
      flash.has(key) ? "blocking" : "",
    ]
      .filter(Boolean)
      .join(" ");
    out.push(
      `<g class="${classes}" data-member="${key}" stroke="${color}" ` +
        `stroke-width="${isSelected ? 6 : 3.5}" fill="none">`,
    );
    for (const run of visualRuns(member, doc.n)) {
      out.push(`<path d="${arcPath(run, doc.n, radius, CENTER)}"/>`);
    }
    out.push(
      `<title>${esc(key)}</title>`,
    );
    out.push("</g>");
  });
  out.push("</svg>");
  return out.join("");
}

export function renderQuiverSvg(doc: QuiverDoc, emphasize: Subset | null = null): string {
  const { positions } = place(doc);
  let maxX = 0;
  let maxY = 0;
  for (const p of positions.values()) {
    maxX = Math.max(maxX, p.x);
    maxY = Math.max(maxY, p.y);
  }
  const out: string[] = [];
  out.push(
    `<svg viewBox="0 0 ${maxX + 80} ${maxY + 60}" xmlns="http://www.w3.org/2000/svg" class="quiver-view">`,
  );
  out.push(
    '<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="3" orient="auto">' +
      '<path d="M0,0 L7,3 L0,6 z" fill="#333"/></marker></defs>',
  );
  for (const arrow of doc.arrows) {
    const from = positions.get(subsetKey(arrow.from))!;
    const to = positions.get(subsetKey(arrow.to))!;
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const len = Math.hypot(dx, dy) || 1;
    const trim = 26;
    const sx = from.x + (dx / len) * trim;
    const sy = from.y + (dy / len) * trim;
    const tx = to.x - (dx / len) * trim;
    const ty = to.y - (dy / len) * trim;
    if (arrow.tag === "wrap") {
      const mx = (sx + tx) / 2 - (ty - sy) * 0.35;
      const my = (sy + ty) / 2 + (tx - sx) * 0.35;
      out.push(
        `<path class="arrow wrap" data-tag="wrap" d="M ${sx.toFixed(1)} ${sy.toFixed(1)} ` +
          `Q ${mx.toFixed(1)} ${my.toFixed(1)} ${tx.toFixed(1)} ${ty.toFixed(1)}" ` +
          'fill="none" stroke="#c43d4b" stroke-dasharray="6 3" marker-end="url(#arrowhead)"/>',
      );
    } else {
      out.push(
        `<line class="arrow" data-tag="${esc(arrow.tag)}" x1="${sx.toFixed(1)}" y1="${sy.toFixed(1)}" ` +
          `x2="${tx.toFixed(1)}" y2="${ty.toFixed(1)}" stroke="#333" marker-end="url(#arrowhead)"/>`,
      );
    }
  }
  for (const vertex of doc.vertices) {
    const key = subsetKey(vertex);
    const p = positions.get(key)!;
    const hot = emphasize !== null && subsetKey(emphasize) === key;
    out.push(
      `<g class="vertex${hot ? " mutated" : ""}" data-vertex="${key}">` +
        `<rect x="${(p.x - 26).toFixed(1)}" y="${(p.y - 14).toFixed(1)}" width="52" height="28" rx="6" ` +
        `fill="${hot ? "#ffe9a8" : "#f2f2f2"}" stroke="#555"/>` +
        `<text x="${p.x.toFixed(1)}" y="${p.y.toFixed(1)}" text-anchor="middle" dominant-baseline="middle" ` +
        `font-size="13">${vertex.join("")}</text></g>`,
    );
  }
  out.push("</svg>");
  return out.join("");
}
