// Client-rendered SVG download of a walk bundle.  Rendering uses the
// service-provided points verbatim; only the screen transform is local.

import type { WalkResponse } from "./types";

export const TRACE_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

function fmt(value: number): string {
  const v = value === 0 ? 0 : value;
  return String(Number(v.toPrecision(12)));
}

export function walksToSvg(walks: WalkResponse[], width = 800): string {
  if (walks.length === 0) throw new Error("nothing to render");
  let minX = Infinity, minY = Infinity, maxX = -Infinity, maxY = -Infinity;
  for (const walk of walks) {
    minX = Math.min(minX, walk.bbox.min[0]);
    minY = Math.min(minY, walk.bbox.min[1]);
    maxX = Math.max(maxX, walk.bbox.max[0]);
    maxY = Math.max(maxY, walk.bbox.max[1]);
  }
  const span = Math.max(maxX - minX, maxY - minY);
  const pad = span > 0 ? span * 0.05 : 1;
  const scale = width / (maxX - minX + 2 * pad);
  const height = (maxY - minY + 2 * pad) * scale;
  const sx = (x: number) => (x - minX + pad) * scale;
  const sy = (y: number) => (maxY + pad - y) * scale;

  const parts = [
    `<?xml version="1.0" encoding="UTF-8"?>`,
    `<svg xmlns="http://www.w3.org/2000/svg" width="${fmt(width)}" ` +
      `height="${fmt(height)}" viewBox="0 0 ${fmt(width)} ${fmt(height)}">`,
  ];
  walks.forEach((walk, i) => {
    const attr = walk.points.map(([x, y]) => `${fmt(sx(x))},${fmt(sy(y))}`).join(" ");
    parts.push(
      `<polyline fill="none" stroke="${TRACE_COLORS[i % TRACE_COLORS.length]}" ` +
        `stroke-width="1.5" points="${attr}"/>`,
    );
  });
  const [ox, oy] = walks[0].points[0];
  parts.push(`<circle cx="${fmt(sx(ox))}" cy="${fmt(sy(oy))}" r="3" fill="#111111"/>`);
  parts.push(`</svg>`);
  return parts.join("\n") + "\n";
}
