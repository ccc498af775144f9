import { describe, expect, it } from "vitest";

import {
  chordsCross,
  distanceToSegment,
  edgeAtPoint,
  edgeKey,
  parseEdgeKey,
  vertexPositions,
} from "../src/geometry.js";

describe("vertexPositions", () => {
  it("places n points on the circle, index 0 on top", () => {
    const pts = vertexPositions(8, 100, 0, 0);
    expect(pts).toHaveLength(8);
    expect(pts[0].x).toBeCloseTo(0, 6);
    expect(pts[0].y).toBeCloseTo(-100, 6);
    for (const p of pts) {
      expect(Math.hypot(p.x, p.y)).toBeCloseTo(100, 6);
    }
  });

  it("spaces points evenly", () => {
    const pts = vertexPositions(6, 1, 0, 0);
    const d01 = Math.hypot(pts[0].x - pts[1].x, pts[0].y - pts[1].y);
    const d12 = Math.hypot(pts[1].x - pts[2].x, pts[1].y - pts[2].y);
    expect(d01).toBeCloseTo(d12, 6);
  });
});

describe("chordsCross", () => {
  it("detects interleaved diagonals", () => {
    expect(chordsCross([0, 2], [1, 3])).toBe(true);
    expect(chordsCross([1, 3], [0, 2])).toBe(true);
  });
  it("rejects disjoint arcs and shared endpoints", () => {
    expect(chordsCross([0, 1], [2, 3])).toBe(false);
    expect(chordsCross([0, 2], [2, 4])).toBe(false);
  });
});

describe("edge keys", () => {
  it("normalizes order and round-trips", () => {
    expect(edgeKey(5, 2)).toBe("2-5");
    expect(parseEdgeKey(edgeKey(7, 3))).toEqual([3, 7]);
  });
});

describe("hit testing", () => {
  it("finds the clicked edge and respects tolerance", () => {
    const pts = vertexPositions(4, 100, 0, 0);
    const mid = {
      x: (pts[0].x + pts[2].x) / 2,
      y: (pts[0].y + pts[2].y) / 2,
    };
    expect(edgeAtPoint(4, pts, mid, 5)).toEqual([0, 2]);
    expect(edgeAtPoint(4, pts, { x: 500, y: 500 }, 5)).toBeNull();
  });

  it("distance to segment clamps at endpoints", () => {
    const d = distanceToSegment({ x: 0, y: 0 }, { x: 10, y: 0 }, { x: 20, y: 0 });
    expect(d).toBeCloseTo(10, 6);
  });
});
