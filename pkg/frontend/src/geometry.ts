/**
 * Circular board geometry: the n vertices sit at the n-th roots of
 * unity. The layout is used for every game (it is the canonical
 * picture); only embedded games give it rules meaning, and even then
 * legality stays server-side - the client only paints affordances.
 */

export interface Point {
  x: number;
  y: number;
}

export function vertexPositions(n: number, radius = 1, cx = 0, cy = 0): Point[] {
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2; // index 0 at the top
    pts.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  }
  return pts;
}

export function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

export function parseEdgeKey(key: string): [number, number] {
  const [a, b] = key.split("-").map(Number);
  return [a, b];
}

/** Do two chords of the convex n-gon cross in their interiors? */
export function chordsCross(
  e1: [number, number],
  e2: [number, number],
): boolean {
  const [a, b] = e1[0] < e1[1] ? e1 : [e1[1], e1[0]];
  const [c, d] = e2[0] < e2[1] ? e2 : [e2[1], e2[0]];
  if (new Set([a, b, c, d]).size < 4) return false;
  const inside = (x: number) => a < x && x < b;
  return inside(c) !== inside(d);
}

/** Distance from a point to the segment pq. */
export function distanceToSegment(p: Point, q: Point, at: Point): number {
  const dx = q.x - p.x;
  const dy = q.y - p.y;
  const len2 = dx * dx + dy * dy;
  let t = len2 === 0 ? 0 : ((at.x - p.x) * dx + (at.y - p.y) * dy) / len2;
  t = Math.max(0, Math.min(1, t));
  const px = p.x + t * dx;
  const py = p.y + t * dy;
  return Math.hypot(at.x - px, at.y - py);
}

/** The closest edge to a click, or null when nothing is within tolerance. */
export function edgeAtPoint(
  n: number,
  positions: Point[],
  at: Point,
  tolerance: number,
): [number, number] | null {
  let best: [number, number] | null = null;
  let bestDist = tolerance;
  for (let u = 0; u < n; u++) {
    for (let v = u + 1; v < n; v++) {
      const d = distanceToSegment(positions[u], positions[v], at);
      if (d < bestDist) {
        bestDist = d;
        best = [u, v];
      }
    }
  }
  return best;
}
