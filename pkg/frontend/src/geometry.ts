// Circle-layout helpers for drawing subsets of [n] as arcs.  *Drawing
// only*: grouping consecutive elements into visual runs never feeds back
// into any decision; legality always comes from the service.

import { Subset } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export function angleOf(element: number, n: number): number {
  // element 1 at twelve o'clock, increasing clockwise
  return -Math.PI / 2 + ((element - 1) * 2 * Math.PI) / n;
}

export function pointOnCircle(element: number, n: number, radius: number, c: Point): Point {
  const a = angleOf(element, n);
  return { x: c.x + radius * Math.cos(a), y: c.y + radius * Math.sin(a) };
}

export interface VisualRun {
  start: number;
  end: number;
}

/** Group a subset into maximal cyclically-consecutive stretches. */
export function visualRuns(subset: Subset, n: number): VisualRun[] {
  const sorted = [...subset].sort((a, b) => a - b);
  if (sorted.length === n) return [{ start: 1, end: n }];
  const runs: VisualRun[] = [];
  let start = sorted[0]!;
  let prev = sorted[0]!;
  for (const x of sorted.slice(1)) {
    if (x === prev + 1) {
      prev = x;
    } else {
      runs.push({ start, end: prev });
      start = prev = x;
    }
  }
  runs.push({ start, end: prev });
  if (runs.length > 1 && sorted[0] === 1 && sorted[sorted.length - 1] === n) {
    const last = runs.pop()!;
    const first = runs.shift()!;
    runs.unshift({ start: last.start, end: first.end });
  }
  return runs;
}

/** SVG path for the arc of the circle from run.start to run.end (clockwise). */
export function arcPath(run: VisualRun, n: number, radius: number, c: Point): string {
  const from = pointOnCircle(run.start, n, radius, c);
  if (run.start === run.end) {
    // a single element: draw a small tick instead of a zero-length arc
    const out = pointOnCircle(run.start, n, radius + 4, c);
    return `M ${from.x.toFixed(2)} ${from.y.toFixed(2)} L ${out.x.toFixed(2)} ${out.y.toFixed(2)}`;
  }
  const to = pointOnCircle(run.end, n, radius, c);
  const span = ((run.end - run.start + n) % n) / n;
  const large = span > 0.5 ? 1 : 0;
  return (
    `M ${from.x.toFixed(2)} ${from.y.toFixed(2)} ` +
    `A ${radius} ${radius} 0 ${large} 1 ${to.x.toFixed(2)} ${to.y.toFixed(2)}`
  );
}
