import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import {
  MAX_WALKS, addWalk, badgeText, clampCursor, decagonMap, editVector,
  exportMap, fitViewport, importMap, initialState, maxCursor, pointAtCursor,
  removeWalk, replaceWalks, setPlaying, setSpeed, stepCursor,
} from "../src/state";
import type { WalkResponse } from "../src/types";

function fixture(name: string): WalkResponse {
  const url = new URL(`./fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf8")) as WalkResponse;
}

const walk114 = fixture("walk_1_14_lattice");
const walk18 = fixture("walk_1_8_decagon");
const walkPi = fixture("walk_pi_decagon");
const walk599 = fixture("walk_5_99_edited");

describe("badges", () => {
  it("1/14 shows periodic · lag 6 · closed", () => {
    const text = badgeText(walk114.classification);
    expect(text.startsWith("periodic · lag 6")).toBe(true);
    expect(text).toContain("closed");
  });

  it("1/8 shows terminating with 3 steps", () => {
    expect(badgeText(walk18.classification)).toBe("terminating · 3 steps");
  });

  it("pi shows no period found with its horizon", () => {
    expect(badgeText(walkPi.classification)).toBe("no period found ≤ 400");
  });

  it("an open drift is spelled out", () => {
    expect(badgeText({
      kind: "periodic", preperiod: 0, lag: 1, drift: [-1, 2], closed: false,
    })).toBe("periodic · lag 1 · drift (-1, 2)");
  });
});

describe("cursor geometry", () => {
  it("rendered point at cursor k is the service points[k], bitwise", () => {
    for (let k = 0; k < walk114.points.length; k++) {
      // identity, not recomputation
      expect(pointAtCursor(walk114, k)).toBe(walk114.points[k]);
    }
  });

  it("stepping 1/8 stops after exactly 3 segments", () => {
    let state = addWalk(initialState(), walk18);
    state = { ...state, cursor: 0, playing: true };
    expect(maxCursor(state)).toBe(3); // 4 points, 3 segments
    for (let i = 0; i < 10; i++) state = stepCursor(state, 1);
    expect(state.cursor).toBe(3);
    expect(state.playing).toBe(false); // halted at the end
    expect(pointAtCursor(walk18, state.cursor)).toBe(walk18.points[3]);
  });

  it("cursor clamps into [0, points-1]", () => {
    const state = addWalk(initialState(), walk114);
    expect(clampCursor(state, -5)).toBe(0);
    expect(clampCursor(state, 10_000)).toBe(600);
    expect(clampCursor({ ...state, walks: [] }, 7)).toBe(0);
  });

  it("a shorter walk freezes at its last point while a longer one runs", () => {
    let state = addWalk(initialState(), walk18);
    state = addWalk(state, walk114);
    state = { ...state, cursor: 200 };
    expect(pointAtCursor(walk18, state.cursor)).toBe(walk18.points[3]);
    expect(pointAtCursor(walk114, state.cursor)).toBe(walk114.points[200]);
  });
});

describe("edited map walk (v5 dragged onto -v0)", () => {
  it("5/99 under the edited map is a closed orbit", () => {
    const cls = walk599.classification;
    expect(cls.kind).toBe("periodic");
    if (cls.kind === "periodic") {
      expect(cls.closed).toBe(true);
      expect(cls.lag).toBe(2);
      expect(cls.drift).toEqual([0, 0]);
    }
    expect(badgeText(cls)).toBe("periodic · lag 2 · closed");
  });

  it("editVector replaces exactly one vector", () => {
    const state = initialState();
    const edited = editVector(state, 5, [-1, 0]);
    expect(edited.map.vectors[5]).toEqual([-1, 0]);
    for (let d = 0; d < 10; d++) {
      if (d !== 5) expect(edited.map.vectors[d]).toEqual(state.map.vectors[d]);
    }
    expect(state.map.vectors[5]).toEqual(decagonMap().vectors[5]); // original untouched
    expect(() => editVector(state, 10, [0, 0])).toThrow();
  });
});

describe("walk slots", () => {
  it("holds at most four walks", () => {
    let state = initialState();
    for (const walk of [walk114, walk18, walkPi, walk599]) {
      state = addWalk(state, walk);
    }
    expect(state.walks.length).toBe(MAX_WALKS);
    expect(() => addWalk(state, walk114)).toThrow();
  });

  it("removing a walk never mutates the remaining bundles", () => {
    let state = addWalk(addWalk(initialState(), walk114), walk18);
    const keptBefore = state.walks[1];
    const pointsBefore = JSON.stringify(keptBefore.points);
    state = removeWalk(state, 0);
    expect(state.walks.length).toBe(1);
    expect(state.walks[0]).toBe(keptBefore); // same object, untouched
    expect(JSON.stringify(state.walks[0].points)).toBe(pointsBefore);
  });

  it("replaceWalks refits the viewport and clamps the cursor", () => {
    let state = addWalk(initialState(), walk114);
    state = { ...state, cursor: 600 };
    state = replaceWalks(state, [walk18]);
    expect(state.cursor).toBe(3);
  });
});

describe("map import/export", () => {
  it("round-trips identical vectors", () => {
    const state = editVector(initialState(), 3, [0.125, -2.5]);
    const imported = importMap(exportMap(state.map));
    expect(imported.vectors).toEqual(state.map.vectors);
    expect(imported.name).toBe(state.map.name);
  });

  it("rejects malformed maps", () => {
    expect(() => importMap("{}")).toThrow();
    expect(() => importMap(JSON.stringify({
      name: "x", mode: "float", vectors: [[0, 0]],
    }))).toThrow();
    expect(() => importMap(JSON.stringify({
      name: "x", mode: "float",
      vectors: Array.from({ length: 10 }, () => ["a", 0]),
    }))).toThrow();
  });
});

describe("viewport and animation controls", () => {
  it("fits the union bounding box", () => {
    const vp = fitViewport([walk114, walk18], initialState().viewport);
    const minX = Math.min(walk114.bbox.min[0], walk18.bbox.min[0]);
    const maxX = Math.max(walk114.bbox.max[0], walk18.bbox.max[0]);
    expect(vp.centerX).toBeCloseTo((minX + maxX) / 2, 12);
    expect(vp.scale).toBeGreaterThan(0);
  });

  it("play from the end restarts at zero", () => {
    let state = addWalk(initialState(), walk18);
    state = { ...state, cursor: maxCursor(state), playing: false };
    state = setPlaying(state, true);
    expect(state.cursor).toBe(0);
    expect(state.playing).toBe(true);
  });

  it("speed is bounded", () => {
    const state = initialState();
    expect(setSpeed(state, 0).speed).toBe(1);
    expect(setSpeed(state, 99999).speed).toBe(1000);
  });
});
