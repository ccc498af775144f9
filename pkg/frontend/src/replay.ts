/**
 * Transcript replay: parse the plain-text game format and step through
 * it, rebuilding the ownership view move by move. The trailer score is
 * surfaced so the UI can verify its counter against it.
 */

export interface TranscriptMove {
  player: "C" | "B";
  u: number;
  v: number;
  passed: boolean;
}

export interface Transcript {
  n: number;
  target: string;
  constraint: string;
  first: "C" | "B";
  seed: number;
  moves: TranscriptMove[];
  score: number;
}

export function parseTranscript(text: string): Transcript {
  const lines = text
    .split("\n")
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  const head = lines[0].split(/\s+/);
  if (head[0] !== "game") throw new Error("transcript must start with a game header");
  const kv = new Map<string, string>();
  for (const part of head.slice(1)) {
    const [k, val] = part.split("=", 2);
    kv.set(k, val);
  }
  const moves: TranscriptMove[] = [];
  let score: number | null = null;
  for (const line of lines.slice(1)) {
    if (line.startsWith("score ")) {
      score = Number(line.split(/\s+/)[1]);
      break;
    }
    const tok = line.split(/\s+/);
    if (tok[0] === "C" && tok[1].startsWith("pass->")) {
      moves.push({
        player: "C",
        u: Number(tok[1].slice("pass->".length)),
        v: Number(tok[2]),
        passed: true,
      });
    } else if (tok[0] === "C" || tok[0] === "B") {
      moves.push({ player: tok[0], u: Number(tok[1]), v: Number(tok[2]), passed: false });
    } else {
      throw new Error(`bad transcript line: ${line}`);
    }
  }
  if (score === null) throw new Error("transcript missing score trailer");
  return {
    n: Number(kv.get("n")),
    target: kv.get("target") ?? "K3",
    constraint: kv.get("constraint") ?? "none",
    first: (kv.get("first") ?? "C") as "C" | "B",
    seed: Number(kv.get("seed") ?? 0),
    moves,
    score,
  };
}

/** Ownership prefix after `upto` moves, shaped like a session view. */
export function replayPrefix(t: Transcript, upto: number) {
  const constructorEdges: [number, number][] = [];
  const blockerEdges: [number, number][] = [];
  const slice = t.moves.slice(0, upto);
  for (const m of slice) {
    (m.player === "C" ? constructorEdges : blockerEdges).push([m.u, m.v]);
  }
  const last = slice.length > 0 ? slice[slice.length - 1] : null;
  return {
    constructor: constructorEdges,
    blocker: blockerEdges,
    last_move: last,
    done: upto >= t.moves.length,
  };
}

/** Triangle count of the Constructor prefix (display cross-check only;
 * live play always shows the server's score). */
export function triangleCount(edges: [number, number][]): number {
  const adj = new Map<number, Set<number>>();
  const add = (a: number, b: number) => {
    if (!adj.has(a)) adj.set(a, new Set());
    adj.get(a)!.add(b);
  };
  for (const [u, v] of edges) {
    add(u, v);
    add(v, u);
  }
  let total = 0;
  for (const [u, nbrs] of adj) {
    for (const v of nbrs) {
      if (v <= u) continue;
      for (const w of adj.get(v) ?? []) {
        if (w <= v) continue;
        if (nbrs.has(w)) total += 1;
      }
    }
  }
  return total;
}
