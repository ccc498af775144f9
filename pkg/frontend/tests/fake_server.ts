/**
 * In-memory stand-in for the session service, faithful to the wire
 * contract: same endpoints, same JSON shapes, same error details. It
 * holds the game logic the client must not have (ownership, triangle
 * scoring, crossing legality, turn order) so tests can check that the
 * UI mirrors the server instead of recomputing.
 */

import type { FetchLike, SessionView, Side } from "../src/protocol.js";
import { chordsCross } from "../src/geometry.js";

interface Game {
  id: string;
  n: number;
  constraint: string;
  humanSide: Side;
  turn: Side;
  finished: boolean;
  owner: Map<string, Side>;
}

const key = (u: number, v: number) => (u < v ? `${u}-${v}` : `${v}-${u}`);

export class FakeServer {
  games = new Map<string, Game>();
  requests: string[] = [];
  private nextId = 1;

  private edges(game: Game, side: Side): [number, number][] {
    const out: [number, number][] = [];
    for (const [k, owner] of game.owner) {
      if (owner === side) {
        const [u, v] = k.split("-").map(Number);
        out.push([u, v]);
      }
    }
    out.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
    return out;
  }

  score(game: Game): number {
    const mine = new Set(
      [...game.owner.entries()].filter(([, o]) => o === "C").map(([k]) => k),
    );
    let total = 0;
    for (let a = 0; a < game.n; a++)
      for (let b = a + 1; b < game.n; b++)
        for (let c = b + 1; c < game.n; c++)
          if (mine.has(key(a, b)) && mine.has(key(b, c)) && mine.has(key(a, c))) total++;
    return total;
  }

  private crossingPartner(game: Game, u: number, v: number): [number, number] | null {
    for (const [u2, v2] of this.edges(game, "C")) {
      if (chordsCross([u2, v2], [u, v])) return [u2, v2];
    }
    return null;
  }

  private legalMoves(game: Game): [number, number][] {
    const out: [number, number][] = [];
    for (let u = 0; u < game.n; u++) {
      for (let v = u + 1; v < game.n; v++) {
        if (game.owner.has(key(u, v))) continue;
        if (game.turn === "C" && game.constraint === "embedded"
            && this.crossingPartner(game, u, v)) continue;
        out.push([u, v]);
      }
    }
    return out;
  }

  private view(game: Game, last: SessionView["last_move"] = null): SessionView {
    const view: SessionView = {
      id: game.id,
      n: game.n,
      constraint: game.constraint,
      target: "K3",
      human_side: game.humanSide,
      engine_strategy: "fake-lowest",
      turn: game.turn,
      finished: game.finished,
      score: this.score(game),
      constructor: this.edges(game, "C"),
      blocker: this.edges(game, "B"),
      last_move: last,
    };
    if (game.constraint === "embedded") {
      const blocked: NonNullable<SessionView["crossing_blocked"]> = [];
      for (let u = 0; u < game.n; u++) {
        for (let v = u + 1; v < game.n; v++) {
          if (game.owner.has(key(u, v))) continue;
          const partner = this.crossingPartner(game, u, v);
          if (partner) blocked.push({ u, v, crosses: partner });
        }
      }
      view.crossing_blocked = blocked;
    }
    return view;
  }

  private lastMoves = new Map<string, SessionView["last_move"]>();

  private applyMove(game: Game, u: number, v: number): SessionView {
    game.owner.set(key(u, v), game.turn);
    const last = { player: game.turn, u: Math.min(u, v), v: Math.max(u, v), passed: false };
    this.lastMoves.set(game.id, last);
    game.turn = game.turn === "C" ? "B" : "C";
    if (this.legalMoves(game).length === 0) game.finished = true;
    return this.view(game, last);
  }

  fetcher(): FetchLike {
    return async (url, init) => {
      this.requests.push(`${init?.method ?? "GET"} ${url}`);
      const path = url.replace(/^https?:\/\/[^/]+/, "");
      const body = init?.body ? JSON.parse(init.body as string) : {};
      const respond = (status: number, payload: unknown) =>
        new Response(JSON.stringify(payload), {
          status,
          headers: { "content-type": "application/json" },
        });

      if (path === "/session" && init?.method === "POST") {
        const game: Game = {
          id: `g${this.nextId++}`,
          n: body.n,
          constraint: body.constraint ?? "none",
          humanSide: (body.human_side ?? "C") as Side,
          turn: "C",
          finished: false,
          owner: new Map(),
        };
        this.games.set(game.id, game);
        return respond(200, this.view(game));
      }
      const m = path.match(/^\/session\/([^/]+)(\/(legal|move|engine-move|resign))?$/);
      if (!m) return respond(404, { detail: { code: "not-found" } });
      const game = this.games.get(m[1]);
      if (!game) return respond(404, { detail: { code: "not-found" } });
      const action = m[3];
      if (!action) return respond(200, this.view(game, this.lastMoves.get(game.id) ?? null));
      if (action === "legal") {
        return respond(200, { turn: game.turn, moves: this.legalMoves(game) });
      }
      if (action === "resign") {
        game.finished = true;
        return respond(200, this.view(game, this.lastMoves.get(game.id) ?? null));
      }
      if (game.finished) return respond(409, { detail: { code: "finished" } });
      if (action === "move") {
        if (game.turn !== game.humanSide) {
          return respond(409, { detail: { code: "not-your-turn" } });
        }
        const { u, v } = body;
        if (game.owner.has(key(u, v))) {
          return respond(409, { detail: { code: "occupied" } });
        }
        if (game.turn === "C" && game.constraint === "embedded") {
          const partner = this.crossingPartner(game, u, v);
          if (partner) {
            return respond(409, {
              detail: { code: "illegal", reason: "embedded", crosses: partner },
            });
          }
        }
        return respond(200, this.applyMove(game, u, v));
      }
      // engine-move: lowest legal edge
      if (game.turn === game.humanSide) {
        return respond(409, { detail: { code: "not-engine-turn" } });
      }
      const moves = this.legalMoves(game);
      if (moves.length === 0) {
        game.finished = true;
        return respond(200, this.view(game, this.lastMoves.get(game.id) ?? null));
      }
      const [u, v] = moves[0];
      return respond(200, this.applyMove(game, u, v));
    };
  }
}
