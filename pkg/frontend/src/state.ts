// Explorer state and the pure operations over it.
//
// Geometry is never recomputed here: the point at cursor k IS the service's
// points[k].  The only client-side arithmetic is the screen transform and
// the editable map the user is shaping.

import type { Classification, EditableMap, Point, WalkResponse } from "./types";

export const MAX_WALKS = 4;

export interface Viewport {
  scale: number;
  // world coordinates of the viewport center
  centerX: number;
  centerY: number;
}

export interface ExplorerState {
  walks: WalkResponse[];
  map: EditableMap;
  cursor: number;
  speed: number; // steps per second
  playing: boolean;
  viewport: Viewport;
}

export function decagonMap(): EditableMap {
  const half: Point[] = [];
  for (let d = 0; d < 5; d++) {
    half.push([Math.cos((Math.PI * d) / 5), Math.sin((Math.PI * d) / 5)]);
  }
  const vectors = half.concat(
    half.map(([x, y]): Point => [x === 0 ? 0 : -x, y === 0 ? 0 : -y]),
  );
  return { name: "decagon", mode: "float", vectors };
}

export function initialState(): ExplorerState {
  return {
    walks: [],
    map: decagonMap(),
    cursor: 0,
    speed: 20,
    playing: false,
    viewport: { scale: 40, centerX: 0, centerY: 0 },
  };
}

// --------------------------------------------------------------------------
// walks
// --------------------------------------------------------------------------

export function maxCursor(state: ExplorerState): number {
  let longest = 0;
  for (const walk of state.walks) {
    longest = Math.max(longest, walk.points.length - 1);
  }
  return longest;
}

export function clampCursor(state: ExplorerState, cursor: number): number {
  return Math.max(0, Math.min(Math.floor(cursor), maxCursor(state)));
}

/** The rendered point of a walk at the animation cursor: exactly the
 * service-provided points[k], clamped to the walk's own length. */
export function pointAtCursor(walk: WalkResponse, cursor: number): Point {
  const k = Math.max(0, Math.min(cursor, walk.points.length - 1));
  return walk.points[k];
}

export function addWalk(state: ExplorerState, walk: WalkResponse): ExplorerState {
  if (state.walks.length >= MAX_WALKS) {
    throw new Error(`at most ${MAX_WALKS} walks can be overlaid`);
  }
  const next = { ...state, walks: [...state.walks, walk] };
  next.viewport = fitViewport(next.walks, state.viewport);
  next.cursor = clampCursor(next, state.cursor === 0 ? maxCursor(next) : state.cursor);
  return next;
}

export function removeWalk(state: ExplorerState, index: number): ExplorerState {
  const walks = state.walks.filter((_, i) => i !== index);
  const next = { ...state, walks };
  next.cursor = clampCursor(next, state.cursor);
  return next;
}

export function replaceWalks(state: ExplorerState, walks: WalkResponse[]): ExplorerState {
  const next = { ...state, walks };
  next.viewport = fitViewport(walks, state.viewport);
  next.cursor = clampCursor(next, state.cursor);
  return next;
}

// --------------------------------------------------------------------------
// animation
// --------------------------------------------------------------------------

export function stepCursor(state: ExplorerState, delta: number): ExplorerState {
  const cursor = clampCursor(state, state.cursor + delta);
  // the walk halts at its last point: stepping past the end just pauses
  const playing = state.playing && cursor < maxCursor(state);
  return { ...state, cursor, playing };
}

export function setPlaying(state: ExplorerState, playing: boolean): ExplorerState {
  if (playing && state.cursor >= maxCursor(state)) {
    return { ...state, cursor: 0, playing: true };
  }
  return { ...state, playing };
}

export function setSpeed(state: ExplorerState, speed: number): ExplorerState {
  return { ...state, speed: Math.max(1, Math.min(speed, 1000)) };
}

// --------------------------------------------------------------------------
// map editing
// --------------------------------------------------------------------------

export function editVector(state: ExplorerState, digit: number, vector: Point): ExplorerState {
  if (digit < 0 || digit > 9) {
    throw new Error(`digit out of range: ${digit}`);
  }
  const vectors = state.map.vectors.map((v, d): Point => (d === digit ? [...vector] : v));
  return { ...state, map: { ...state.map, name: "custom", vectors } };
}

export function exportMap(map: EditableMap): string {
  return JSON.stringify({ name: map.name, mode: map.mode, vectors: map.vectors });
}

export function importMap(text: string): EditableMap {
  const doc = JSON.parse(text) as EditableMap;
  if (doc.mode !== "float" || !Array.isArray(doc.vectors) || doc.vectors.length !== 10) {
    throw new Error("map must be float-mode with exactly 10 vectors");
  }
  const vectors = doc.vectors.map(([x, y]): Point => {
    if (typeof x !== "number" || typeof y !== "number" || !isFinite(x) || !isFinite(y)) {
      throw new Error("map coordinates must be finite numbers");
    }
    return [x, y];
  });
  return { name: String(doc.name ?? "custom"), mode: "float", vectors };
}

// --------------------------------------------------------------------------
// viewport
// --------------------------------------------------------------------------

export function fitViewport(walks: WalkResponse[], previous: Viewport): Viewport {
  if (walks.length === 0) return previous;
  let minX = Infinity, minY = Infinity, maxX = -Infinity, maxY = -Infinity;
  for (const walk of walks) {
    minX = Math.min(minX, walk.bbox.min[0]);
    minY = Math.min(minY, walk.bbox.min[1]);
    maxX = Math.max(maxX, walk.bbox.max[0]);
    maxY = Math.max(maxY, walk.bbox.max[1]);
  }
  const span = Math.max(maxX - minX, maxY - minY, 1e-9);
  return {
    scale: 1 / (span * 1.1), // normalized: render.ts multiplies by canvas size
    centerX: (minX + maxX) / 2,
    centerY: (minY + maxY) / 2,
  };
}

// --------------------------------------------------------------------------
// badges
// --------------------------------------------------------------------------

function short(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toPrecision(6);
}

export function badgeText(cls: Classification): string {
  switch (cls.kind) {
    case "terminating":
      return `terminating · ${cls.steps} steps`;
    case "periodic": {
      const base = `periodic · lag ${cls.lag}`;
      return cls.closed
        ? `${base} · closed`
        : `${base} · drift (${short(cls.drift[0])}, ${short(cls.drift[1])})`;
    }
    case "no_period_found":
      return `no period found ≤ ${cls.horizon}`;
  }
}
