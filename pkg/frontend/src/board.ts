/**
 * SVG board renderer. Every possible edge is a thin line with a wide
 * invisible click target; ownership recolors lines, the last move is
 * highlighted, and edges the server reports as illegal for the human
 * side are flagged before any click.
 */

import { edgeKey, vertexPositions } from "./geometry.js";
import type { SessionView } from "./protocol.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardCallbacks {
  onEdgeClick(u: number, v: number): void;
}

export const COLORS = {
  free: "#d8d8d8",
  constructor: "#d6453d",
  blocker: "#3667c2",
  lastMove: "#f2a33c",
  illegal: "#f6d4d2",
  crossing: "#8a2be2",
  vertex: "#333333",
};

export class Board {
  readonly svg: SVGSVGElement;
  private readonly lines = new Map<string, SVGLineElement>();
  private readonly hits = new Map<string, SVGLineElement>();
  private illegalKeys = new Set<string>();

  constructor(doc: Document, n: number, callbacks: BoardCallbacks, size = 600) {
    const pad = 24;
    const r = size / 2 - pad;
    const pts = vertexPositions(n, r, size / 2, size / 2);
    this.svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
    this.svg.setAttribute("width", String(size));
    this.svg.setAttribute("height", String(size));
    this.svg.setAttribute("data-n", String(n));

    for (let u = 0; u < n; u++) {
      for (let v = u + 1; v < n; v++) {
        const key = edgeKey(u, v);
        const line = doc.createElementNS(SVG_NS, "line") as SVGLineElement;
        line.setAttribute("x1", String(pts[u].x));
        line.setAttribute("y1", String(pts[u].y));
        line.setAttribute("x2", String(pts[v].x));
        line.setAttribute("y2", String(pts[v].y));
        line.setAttribute("stroke", COLORS.free);
        line.setAttribute("stroke-width", "1");
        line.setAttribute("data-edge", key);
        this.svg.appendChild(line);
        this.lines.set(key, line);

        const hit = doc.createElementNS(SVG_NS, "line") as SVGLineElement;
        hit.setAttribute("x1", String(pts[u].x));
        hit.setAttribute("y1", String(pts[u].y));
        hit.setAttribute("x2", String(pts[v].x));
        hit.setAttribute("y2", String(pts[v].y));
        hit.setAttribute("stroke", "transparent");
        hit.setAttribute("stroke-width", "9");
        hit.setAttribute("data-hit", key);
        hit.addEventListener("click", () => {
          if (this.illegalKeys.has(key)) return; // never submit a flagged edge
          callbacks.onEdgeClick(u, v);
        });
        this.svg.appendChild(hit);
        this.hits.set(key, hit);
      }
    }
    for (let i = 0; i < n; i++) {
      const c = doc.createElementNS(SVG_NS, "circle");
      c.setAttribute("cx", String(pts[i].x));
      c.setAttribute("cy", String(pts[i].y));
      c.setAttribute("r", "6");
      c.setAttribute("fill", COLORS.vertex);
      c.setAttribute("data-vertex", String(i));
      this.svg.appendChild(c);
      const label = doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(pts[i].x + 8));
      label.setAttribute("y", String(pts[i].y - 8));
      label.setAttribute("font-size", "11");
      label.textContent = String(i);
      this.svg.appendChild(label);
    }
  }

  edgeElement(u: number, v: number): SVGLineElement | undefined {
    return this.lines.get(edgeKey(u, v));
  }

  /** Repaint ownership, last-move highlight, and illegal affordances. */
  render(view: SessionView, legalForHuman: [number, number][] | null): void {
    const owned = new Map<string, string>();
    for (const [u, v] of view.constructor) owned.set(edgeKey(u, v), COLORS.constructor);
    for (const [u, v] of view.blocker) owned.set(edgeKey(u, v), COLORS.blocker);
    const lastKey = view.last_move ? edgeKey(view.last_move.u, view.last_move.v) : null;

    this.illegalKeys = new Set();
    if (legalForHuman !== null && view.turn === view.human_side && !view.finished) {
      const legal = new Set(legalForHuman.map(([u, v]) => edgeKey(u, v)));
      for (const key of this.lines.keys()) {
        if (!owned.has(key) && !legal.has(key)) this.illegalKeys.add(key);
      }
    }

    for (const [key, line] of this.lines) {
      const color = owned.get(key);
      if (color) {
        line.setAttribute("stroke", color);
        line.setAttribute("stroke-width", key === lastKey ? "5" : "3");
        line.setAttribute("data-state", color === COLORS.constructor ? "C" : "B");
      } else if (this.illegalKeys.has(key)) {
        line.setAttribute("stroke", COLORS.illegal);
        line.setAttribute("stroke-width", "1");
        line.setAttribute("data-state", "illegal");
      } else {
        line.setAttribute("stroke", COLORS.free);
        line.setAttribute("stroke-width", "1");
        line.setAttribute("data-state", "free");
      }
      if (key === lastKey) {
        line.setAttribute("data-last", "1");
        line.setAttribute("stroke", COLORS.lastMove);
      } else {
        line.removeAttribute("data-last");
      }
    }
  }

  /** Flash the partner chord that blocks a rejected embedded move. */
  highlightCrossing(partner: [number, number]): void {
    const line = this.lines.get(edgeKey(partner[0], partner[1]));
    if (!line) return;
    line.setAttribute("stroke", COLORS.crossing);
    line.setAttribute("stroke-width", "6");
    line.setAttribute("data-crossing", "1");
  }

  clearCrossingHighlights(): void {
    for (const line of this.lines.values()) {
      if (line.getAttribute("data-crossing")) {
        line.removeAttribute("data-crossing");
        line.setAttribute("stroke-width", "3");
      }
    }
  }

  isFlaggedIllegal(u: number, v: number): boolean {
    return this.illegalKeys.has(edgeKey(u, v));
  }
}
