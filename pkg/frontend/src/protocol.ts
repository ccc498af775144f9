/**
 * Typed client for the turangame session service.
 *
 * The client holds no game logic: legality and scoring are
 * server-authoritative. `/legal` is fetched only to paint affordances.
 */

export type Side = "C" | "B";

export interface LastMove {
  player: Side;
  u: number;
  v: number;
  passed: boolean;
}

export interface CrossingBlocked {
  u: number;
  v: number;
  crosses: [number, number];
}

export interface SessionView {
  id: string;
  n: number;
  constraint: string;
  target: string;
  human_side: Side;
  engine_strategy: string;
  turn: Side;
  finished: boolean;
  score: number;
  constructor: [number, number][];
  blocker: [number, number][];
  last_move: LastMove | null;
  crossing_blocked?: CrossingBlocked[];
}

export interface CreateRequest {
  n: number;
  constraint?: string;
  target?: string;
  human_side?: Side;
  engine_strategy?: string;
  seed?: number;
}

export interface IllegalDetail {
  code: string;
  reason?: string;
  crosses?: [number, number];
}

export class ProtocolError extends Error {
  constructor(
    readonly status: number,
    readonly detail: IllegalDetail,
  ) {
    super(`${detail.code}${detail.reason ? `: ${detail.reason}` : ""}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class Client {
  constructor(
    private readonly base: string,
    private readonly fetcher: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetcher(`${this.base}${path}`, init);
    const body = await resp.json();
    if (!resp.ok) {
      const detail: IllegalDetail =
        body && typeof body.detail === "object"
          ? body.detail
          : { code: `http-${resp.status}` };
      throw new ProtocolError(resp.status, detail);
    }
    return body as T;
  }

  create(req: CreateRequest): Promise<SessionView> {
    return this.request("/session", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
  }

  state(id: string): Promise<SessionView> {
    return this.request(`/session/${id}`);
  }

  legal(id: string): Promise<{ turn: Side; moves: [number, number][] }> {
    return this.request(`/session/${id}/legal`);
  }

  move(id: string, u: number, v: number): Promise<SessionView> {
    return this.request(`/session/${id}/move`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ u, v }),
    });
  }

  engineMove(id: string): Promise<SessionView> {
    return this.request(`/session/${id}/engine-move`, { method: "POST" });
  }

  resign(id: string): Promise<SessionView> {
    return this.request(`/session/${id}/resign`, { method: "POST" });
  }
}

/** Compose the plain-text transcript for download from a finished view. */
export function transcriptText(
  view: SessionView,
  moves: LastMove[],
  seed = 0,
): string {
  const lines = [
    `game n=${view.n} target=${view.target} constraint=${view.constraint} first=C seed=${seed}`,
  ];
  for (const m of moves) {
    lines.push(
      m.passed ? `C pass->${m.u} ${m.v}` : `${m.player} ${m.u} ${m.v}`,
    );
  }
  lines.push(`score ${view.score}`);
  return lines.join("\n") + "\n";
}
