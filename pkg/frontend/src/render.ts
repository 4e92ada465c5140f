// Canvas rendering: walk traces up to the animation cursor, period-block
// coloring as blocks complete, and the draggable vector-map editor.

import type { ExplorerState, Viewport } from "./state";
import { pointAtCursor } from "./state";
import type { EditableMap, Point, WalkResponse } from "./types";
import { TRACE_COLORS } from "./svg";

const BAND_COLORS = ["#9ecae1", "#fcae91", "#a1d99b", "#bcbddc", "#fdd0a2", "#d9d9d9"];

export function worldToScreen(
  viewport: Viewport, width: number, height: number, p: Point,
): Point {
  const unit = Math.min(width, height) * viewport.scale;
  return [
    width / 2 + (p[0] - viewport.centerX) * unit,
    height / 2 - (p[1] - viewport.centerY) * unit,
  ];
}

export function screenToWorld(
  viewport: Viewport, width: number, height: number, p: Point,
): Point {
  const unit = Math.min(width, height) * viewport.scale;
  return [
    viewport.centerX + (p[0] - width / 2) / unit,
    viewport.centerY - (p[1] - height / 2) / unit,
  ];
}

function drawTrace(
  ctx: CanvasRenderingContext2D, state: ExplorerState,
  width: number, height: number, walk: WalkResponse, index: number,
): void {
  const upto = Math.min(state.cursor, walk.points.length - 1);
  const toScreen = (p: Point) => worldToScreen(state.viewport, width, height, p);

  ctx.lineWidth = 1.5;
  ctx.strokeStyle = TRACE_COLORS[index % TRACE_COLORS.length];
  ctx.beginPath();
  let [x, y] = toScreen(walk.points[0]);
  ctx.moveTo(x, y);
  for (let k = 1; k <= upto; k++) {
    [x, y] = toScreen(walk.points[k]);
    ctx.lineTo(x, y);
  }
  ctx.stroke();

  // completed period blocks get colored overlays
  if (walk.classification.kind === "periodic") {
    const { preperiod, lag } = walk.classification;
    let block = 0;
    for (let start = preperiod; start + lag <= upto; start += lag, block++) {
      ctx.strokeStyle = BAND_COLORS[block % BAND_COLORS.length];
      ctx.beginPath();
      [x, y] = toScreen(walk.points[start]);
      ctx.moveTo(x, y);
      for (let k = start + 1; k <= start + lag; k++) {
        [x, y] = toScreen(walk.points[k]);
        ctx.lineTo(x, y);
      }
      ctx.stroke();
    }
  }

  // cursor marker at the walk's current point (service geometry, verbatim)
  const [cx, cy] = toScreen(pointAtCursor(walk, state.cursor));
  ctx.fillStyle = TRACE_COLORS[index % TRACE_COLORS.length];
  ctx.beginPath();
  ctx.arc(cx, cy, 4, 0, 2 * Math.PI);
  ctx.fill();
}

export function drawScene(
  ctx: CanvasRenderingContext2D, state: ExplorerState, width: number, height: number,
): void {
  ctx.clearRect(0, 0, width, height);
  if (state.walks.length === 0) {
    ctx.fillStyle = "#8a8f98";
    ctx.font = "14px sans-serif";
    ctx.fillText("load a number to draw its trace", 16, 28);
    return;
  }
  const [ox, oy] = worldToScreen(state.viewport, width, height, state.walks[0].points[0]);
  ctx.fillStyle = "#111";
  ctx.beginPath();
  ctx.arc(ox, oy, 3, 0, 2 * Math.PI);
  ctx.fill();
  state.walks.forEach((walk, i) => drawTrace(ctx, state, width, height, walk, i));
}

// --------------------------------------------------------------------------
// vector-map editor: ten vectors from a shared origin, tips draggable
// --------------------------------------------------------------------------

export interface EditorLayout {
  cx: number;
  cy: number;
  unit: number; // pixels per world unit
}

export function editorLayout(width: number, height: number): EditorLayout {
  return { cx: width / 2, cy: height / 2, unit: Math.min(width, height) / 5.2 };
}

export function vectorTip(layout: EditorLayout, v: Point): Point {
  return [layout.cx + v[0] * layout.unit, layout.cy - v[1] * layout.unit];
}

export function tipToVector(layout: EditorLayout, screen: Point): Point {
  return [
    (screen[0] - layout.cx) / layout.unit,
    (layout.cy - screen[1]) / layout.unit,
  ];
}

/** Digit whose vector tip sits within `radius` px of the pointer, or -1. */
export function hitTip(layout: EditorLayout, map: EditableMap, p: Point, radius = 10): number {
  let best = -1;
  let bestDist = radius;
  map.vectors.forEach((v, d) => {
    const [tx, ty] = vectorTip(layout, v);
    const dist = Math.hypot(tx - p[0], ty - p[1]);
    if (dist <= bestDist) {
      best = d;
      bestDist = dist;
    }
  });
  return best;
}

export function drawEditor(
  ctx: CanvasRenderingContext2D, map: EditableMap, width: number, height: number,
  activeDigit = -1,
): void {
  const layout = editorLayout(width, height);
  ctx.clearRect(0, 0, width, height);
  ctx.strokeStyle = "#e3e6ea";
  ctx.beginPath();
  ctx.moveTo(0, layout.cy);
  ctx.lineTo(width, layout.cy);
  ctx.moveTo(layout.cx, 0);
  ctx.lineTo(layout.cx, height);
  ctx.stroke();

  ctx.font = "11px sans-serif";
  map.vectors.forEach((v, d) => {
    const [tx, ty] = vectorTip(layout, v);
    ctx.strokeStyle = d === activeDigit ? "#d62728" : "#4a5568";
    ctx.beginPath();
    ctx.moveTo(layout.cx, layout.cy);
    ctx.lineTo(tx, ty);
    ctx.stroke();
    ctx.fillStyle = d === activeDigit ? "#d62728" : "#1f77b4";
    ctx.beginPath();
    ctx.arc(tx, ty, 5, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillStyle = "#21262c";
    ctx.fillText(String(d), tx + 7, ty - 7);
  });
}
