/**
 * UI flow: create a game, alternate human clicks with engine-move
 * calls, surface illegal-move explanations inline (with the crossing
 * partner highlighted in embedded games), and offer the transcript for
 * download at the end. A replay panel steps through transcript files.
 *
 * The client is deliberately logic-free: the score readout always
 * shows the server's score field, and click targets are pre-flagged
 * from `/legal` so an edge rendered illegal is never submitted.
 */

import { Board } from "./board.js";
import type { LastMove, SessionView, Side } from "./protocol.js";
import { Client, ProtocolError, transcriptText } from "./protocol.js";
import { parseTranscript, replayPrefix, triangleCount, Transcript } from "./replay.js";

export interface AppOptions {
  doc: Document;
  root: HTMLElement;
  client: Client;
  boardSize?: number;
}

export class App {
  private readonly doc: Document;
  private readonly root: HTMLElement;
  private readonly client: Client;
  private readonly boardSize: number;
  board: Board | null = null;
  view: SessionView | null = null;
  private moves: LastMove[] = [];
  private seed = 0;
  private busy = false;

  // live elements
  private scoreEl!: HTMLElement;
  private turnEl!: HTMLElement;
  private badgeEl!: HTMLElement;
  private messageEl!: HTMLElement;
  private boardHost!: HTMLElement;
  private endEl!: HTMLElement;

  constructor(opts: AppOptions) {
    this.doc = opts.doc;
    this.root = opts.root;
    this.client = opts.client;
    this.boardSize = opts.boardSize ?? 600;
    this.renderShell();
  }

  private el(tag: string, attrs: Record<string, string> = {}, text = ""): HTMLElement {
    const node = this.doc.createElement(tag);
    for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
    if (text) node.textContent = text;
    return node;
  }

  private renderShell(): void {
    this.root.innerHTML = "";
    const form = this.el("form", { "data-testid": "setup" });
    form.append(
      this.labelled("n", this.el("input", { name: "n", value: "12", type: "number" })),
      this.labelled("constraint", this.select("constraint",
        ["none", "path:4", "path:6", "star:4", "star:5", "k4", "planar", "embedded"])),
      this.labelled("your side", this.select("side", ["C", "B"])),
      this.labelled("engine", this.select("engine",
        ["random", "greedy-block", "greedy-tri", "es-maker", "es-breaker", "b-p4",
         "b-p6", "c-p6", "b-s4", "c-s4", "b-s5", "c-s5", "c-pcb", "c-ecb", "b-ecb"])),
      this.labelled("seed", this.el("input", { name: "seed", value: "0", type: "number" })),
    );
    const start = this.el("button", { type: "button", "data-testid": "start" }, "start game");
    start.addEventListener("click", () => void this.startGame(form));
    form.append(start);
    this.root.append(form);

    const status = this.el("div", { "data-testid": "status" });
    this.badgeEl = this.el("span", { "data-testid": "constraint-badge" });
    this.scoreEl = this.el("span", { "data-testid": "score" }, "0");
    this.turnEl = this.el("span", { "data-testid": "turn" });
    this.messageEl = this.el("div", { "data-testid": "message" });
    status.append(this.badgeEl, this.el("span", {}, " score: "), this.scoreEl,
                  this.el("span", {}, " turn: "), this.turnEl);
    this.root.append(status, this.messageEl);

    this.boardHost = this.el("div", { "data-testid": "board-host" });
    this.endEl = this.el("div", { "data-testid": "end-screen" });
    this.root.append(this.boardHost, this.endEl);
    this.root.append(this.replayPanel());
  }

  private labelled(text: string, control: HTMLElement): HTMLElement {
    const label = this.el("label", {}, `${text}: `);
    label.append(control);
    return label;
  }

  private select(name: string, options: string[]): HTMLElement {
    const sel = this.el("select", { name });
    for (const opt of options) sel.append(this.el("option", { value: opt }, opt));
    return sel;
  }

  private formValue(form: HTMLElement, name: string): string {
    const node = form.querySelector(`[name="${name}"]`) as
      | HTMLInputElement
      | HTMLSelectElement
      | null;
    return node ? node.value : "";
  }

  async startGame(form: HTMLElement): Promise<void> {
    const n = Number(this.formValue(form, "n"));
    const humanSide = this.formValue(form, "side") as Side;
    this.seed = Number(this.formValue(form, "seed")) || 0;
    const view = await this.client.create({
      n,
      constraint: this.formValue(form, "constraint") || "none",
      human_side: humanSide,
      engine_strategy: this.formValue(form, "engine") || "random",
      seed: this.seed,
    });
    this.moves = [];
    this.board = new Board(this.doc, view.n, {
      onEdgeClick: (u, v) => void this.humanMove(u, v),
    }, this.boardSize);
    this.boardHost.innerHTML = "";
    this.boardHost.append(this.board.svg as unknown as HTMLElement);
    this.endEl.innerHTML = "";
    await this.applyView(view);
    if (!view.finished && view.turn !== view.human_side) {
      await this.engineTurn();
    }
  }

  /** One protocol request per human action; engine reply follows within
   * the same interaction cycle. */
  async humanMove(u: number, v: number): Promise<void> {
    if (!this.view || this.view.finished || this.busy) return;
    if (this.view.turn !== this.view.human_side) return;
    if (this.board?.isFlaggedIllegal(u, v)) {
      // pre-flagged from /legal: explain without submitting; embedded
      // views carry the crossing partner straight from the server
      const info = this.view.crossing_blocked?.find(
        (b) => (b.u === Math.min(u, v) && b.v === Math.max(u, v)),
      );
      if (info) {
        this.messageEl.textContent = this.explainIllegal("embedded", info.crosses);
        this.board?.highlightCrossing(info.crosses);
      } else {
        this.messageEl.textContent = this.explainIllegal(this.view.constraint);
      }
      return;
    }
    this.busy = true;
    this.board?.clearCrossingHighlights();
    try {
      const view = await this.client.move(this.view.id, u, v);
      await this.applyView(view);
      if (!view.finished) await this.engineTurn();
    } catch (err) {
      if (err instanceof ProtocolError && err.detail.code === "illegal") {
        const reason = err.detail.reason ?? "constraint";
        this.messageEl.textContent = this.explainIllegal(reason, err.detail.crosses);
        if (err.detail.crosses && this.board) {
          this.board.highlightCrossing(err.detail.crosses);
        }
      } else {
        this.messageEl.textContent = String(err);
      }
    } finally {
      this.busy = false;
    }
  }

  private explainIllegal(reason: string, crosses?: [number, number]): string {
    if (reason === "embedded" && crosses) {
      return `illegal: chord would cross your edge ${crosses[0]}-${crosses[1]} (highlighted)`;
    }
    if (reason.startsWith("path:")) {
      return `illegal: would create P${reason.split(":")[1]} in your graph`;
    }
    if (reason.startsWith("star:")) {
      return `illegal: would exceed maximum degree ${Number(reason.split(":")[1]) - 1}`;
    }
    return `illegal: violates constraint ${reason}`;
  }

  private async engineTurn(): Promise<void> {
    if (!this.view || this.view.finished) return;
    const view = await this.client.engineMove(this.view.id);
    await this.applyView(view);
  }

  private async applyView(view: SessionView): Promise<void> {
    this.view = view;
    if (view.last_move) this.moves.push(view.last_move);
    this.scoreEl.textContent = String(view.score); // server-authoritative
    this.turnEl.textContent = view.finished ? "finished" : view.turn;
    this.badgeEl.textContent = `${view.constraint} / ${view.target}`;
    let legal: [number, number][] | null = null;
    if (!view.finished && view.turn === view.human_side) {
      const resp = await this.client.legal(view.id);
      legal = resp.moves;
    }
    this.board?.render(view, legal);
    if (view.finished) this.showEnd(view);
  }

  private showEnd(view: SessionView): void {
    this.endEl.innerHTML = "";
    this.endEl.append(
      this.el("h2", { "data-testid": "final-score" }, `final score: ${view.score}`),
    );
    const text = transcriptText(view, this.moves, this.seed);
    const link = this.el("a", {
      "data-testid": "download",
      download: `game-${view.id}.txt`,
      href: `data:text/plain;charset=utf-8,${encodeURIComponent(text)}`,
    }, "download transcript");
    this.endEl.append(link);
  }

  // -- replay -----------------------------------------------------------------

  private replay: { t: Transcript; at: number; board: Board } | null = null;

  private replayPanel(): HTMLElement {
    const panel = this.el("div", { "data-testid": "replay-panel" });
    const input = this.el("textarea", { "data-testid": "replay-input" });
    const load = this.el("button", { type: "button", "data-testid": "replay-load" }, "load replay");
    const step = this.el("button", { type: "button", "data-testid": "replay-step" }, "step");
    const counter = this.el("span", { "data-testid": "replay-score" }, "");
    const host = this.el("div", { "data-testid": "replay-board" });
    load.addEventListener("click", () => {
      const t = parseTranscript((input as HTMLTextAreaElement).value);
      const board = new Board(this.doc, t.n, { onEdgeClick: () => undefined }, this.boardSize);
      host.innerHTML = "";
      host.append(board.svg as unknown as HTMLElement);
      this.replay = { t, at: 0, board };
      this.renderReplay(counter);
    });
    step.addEventListener("click", () => {
      if (!this.replay) return;
      this.replay.at = Math.min(this.replay.at + 1, this.replay.t.moves.length);
      this.renderReplay(counter);
    });
    panel.append(input, load, step, counter, host);
    return panel;
  }

  private renderReplay(counter: HTMLElement): void {
    if (!this.replay) return;
    const { t, at, board } = this.replay;
    const prefix = replayPrefix(t, at);
    const score = triangleCount(prefix.constructor);
    const fake: SessionView = {
      id: "replay", n: t.n, constraint: t.constraint, target: t.target,
      human_side: "C", engine_strategy: "replay", turn: "C",
      finished: prefix.done, score,
      constructor: prefix.constructor, blocker: prefix.blocker,
      last_move: prefix.last_move
        ? { ...prefix.last_move }
        : null,
    };
    board.render(fake, null);
    counter.textContent = prefix.done
      ? `replay done: ${score} (trailer ${t.score})`
      : `move ${at}/${t.moves.length}, triangles ${score}`;
  }
}

export function mount(root: HTMLElement, baseUrl: string): App {
  return new App({ doc: root.ownerDocument, root, client: new Client(baseUrl) });
}
