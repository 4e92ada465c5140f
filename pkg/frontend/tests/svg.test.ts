import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { walksToSvg } from "../src/svg";
import { editorLayout, hitTip, screenToWorld, tipToVector, vectorTip,
         worldToScreen } from "../src/render";
import { decagonMap, initialState } from "../src/state";
import type { WalkResponse } from "../src/types";

function fixture(name: string): WalkResponse {
  const url = new URL(`./fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf8")) as WalkResponse;
}

const walk114 = fixture("walk_1_14_lattice");
const walk18 = fixture("walk_1_8_decagon");

describe("client-rendered svg", () => {
  it("draws one polyline per walk with every point", () => {
    const svg = walksToSvg([walk114, walk18]);
    const polylines = svg.match(/<polyline/g) ?? [];
    expect(polylines.length).toBe(2);
    const first = svg.match(/points="([^"]*)"/)![1];
    expect(first.split(" ").length).toBe(walk114.points.length);
    expect(svg).toContain("<circle"); // origin marker
  });

  it("is deterministic", () => {
    expect(walksToSvg([walk114])).toBe(walksToSvg([walk114]));
  });

  it("rejects an empty overlay", () => {
    expect(() => walksToSvg([])).toThrow();
  });

  it("all screen coordinates sit inside the declared viewport", () => {
    const svg = walksToSvg([walk114], 640);
    const [, w, h] = svg.match(/width="([^"]+)" height="([^"]+)"/)!;
    for (const match of svg.matchAll(/points="([^"]*)"/g)) {
      for (const pair of match[1].split(" ")) {
        const [x, y] = pair.split(",").map(Number);
        expect(x).toBeGreaterThanOrEqual(-1e-9);
        expect(x).toBeLessThanOrEqual(Number(w) + 1e-9);
        expect(y).toBeGreaterThanOrEqual(-1e-9);
        expect(y).toBeLessThanOrEqual(Number(h) + 1e-9);
      }
    }
  });
});

describe("screen transforms", () => {
  it("worldToScreen and screenToWorld are inverses", () => {
    const viewport = { scale: 0.07, centerX: 1.5, centerY: -2 };
    const p: [number, number] = [3.25, -4.5];
    const screen = worldToScreen(viewport, 860, 640, p);
    const back = screenToWorld(viewport, 860, 640, screen);
    expect(back[0]).toBeCloseTo(p[0], 10);
    expect(back[1]).toBeCloseTo(p[1], 10);
  });

  it("vector tips hit-test and convert back to vectors", () => {
    const layout = editorLayout(300, 300);
    const map = initialState().map;
    const tip5 = vectorTip(layout, map.vectors[5]);
    expect(hitTip(layout, map, tip5)).toBe(5);
    expect(hitTip(layout, map, [tip5[0] + 50, tip5[1] + 50])).toBe(-1);
    const v = tipToVector(layout, tip5);
    expect(v[0]).toBeCloseTo(map.vectors[5][0], 10);
    expect(v[1]).toBeCloseTo(map.vectors[5][1], 10);
  });

  it("decagon editor starts with opposite pairs", () => {
    const map = decagonMap();
    for (let d = 0; d < 5; d++) {
      expect(map.vectors[d + 5][0]).toBeCloseTo(-map.vectors[d][0], 15);
      expect(map.vectors[d + 5][1]).toBeCloseTo(-map.vectors[d][1], 15);
    }
  });
});
