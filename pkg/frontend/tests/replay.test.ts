import { describe, expect, it } from "vitest";

import { parseTranscript, replayPrefix, triangleCount } from "../src/replay.js";

const SAMPLE = `game n=4 target=K3 constraint=none first=C seed=7
C 0 1
B 2 3
C 0 2
B 1 3
C pass->1 2
score 1
`;

describe("parseTranscript", () => {
  it("reads header, moves, pass substitutions, and trailer", () => {
    const t = parseTranscript(SAMPLE);
    expect(t.n).toBe(4);
    expect(t.seed).toBe(7);
    expect(t.constraint).toBe("none");
    expect(t.moves).toHaveLength(5);
    expect(t.moves[4]).toEqual({ player: "C", u: 1, v: 2, passed: true });
    expect(t.score).toBe(1);
  });

  it("rejects malformed input", () => {
    expect(() => parseTranscript("nope")).toThrow();
    expect(() => parseTranscript("game n=4 target=K3 constraint=none first=C seed=0\nC 0 1\n")).toThrow();
  });
});

describe("replayPrefix", () => {
  it("steps ownership forward and flags completion", () => {
    const t = parseTranscript(SAMPLE);
    const p2 = replayPrefix(t, 2);
    expect(p2.constructor).toEqual([[0, 1]]);
    expect(p2.blocker).toEqual([[2, 3]]);
    expect(p2.done).toBe(false);
    const done = replayPrefix(t, t.moves.length);
    expect(done.done).toBe(true);
    expect(triangleCount(done.constructor)).toBe(t.score);
  });
});

describe("triangleCount", () => {
  it("counts triangles of an edge list", () => {
    expect(triangleCount([[0, 1], [1, 2], [0, 2]])).toBe(1);
    expect(triangleCount([[0, 1], [1, 2], [2, 3]])).toBe(0);
    expect(
      triangleCount([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]),
    ).toBe(4);
  });
});
