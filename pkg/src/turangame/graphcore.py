"""Fixed-n simple graphs with incremental triangle bookkeeping.

One `Graph` instance holds one player's claimed edges during a game.
Everything downstream (legality predicates, strategies, the exact
solver, the audit harness) goes through this module, so the hot
primitives live in a bitset backend: the compiled `_kernels` extension
when available, otherwise the pure-Python `_bitsets` twin.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Iterator, Optional

if os.environ.get("TURANGAME_PURE_PYTHON"):
    from . import _bitsets as _backend
else:
    try:
        from . import _kernels as _backend  # type: ignore[no-redef]
    except ImportError:
        from . import _bitsets as _backend

BitAdjacency = _backend.BitAdjacency
BACKEND_NAME = _backend.BACKEND_NAME
crossing_any = _backend.crossing_any
MAX_VERTICES = 10_000


class GraphError(Exception):
    """Constraint violation inside graph bookkeeping (e.g. duplicate edge)."""


# ---------------------------------------------------------------------------
# Edge arithmetic.
#
# Edges are stored normalized (u < v) and identified by their lexicographic
# rank, which doubles as the canonical move ordering: every "arbitrary"
# choice engine-wide resolves to the lowest edge id.
# ---------------------------------------------------------------------------

def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def edge_id(n: int, u: int, v: int) -> int:
    if u == v:
        raise GraphError("loops are not edges")
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def edge_endpoints(n: int, eid: int) -> tuple[int, int]:
    """Inverse of `edge_id` via the triangular-number closed form."""
    m = num_edges(n)
    if not 0 <= eid < m:
        raise GraphError(f"edge id {eid} out of range for n={n}")
    t = m - 1 - eid
    r = (isqrt(8 * t + 1) - 1) // 2
    u = n - 2 - r
    v = eid - u * (2 * n - u - 1) // 2 + u + 1
    return u, v


def normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

class Graph:
    """Undirected simple graph on a fixed vertex set [0, n).

    `triangle_count` is maintained incrementally: adding (u, v) creates
    exactly |N(u) & N(v)| new triangles. `k4_count` is tracked the same
    way when requested (four-clique scoring games only).
    """

    __slots__ = ("n", "adj", "edge_count", "triangle_count", "k4_count",
                 "track_k4", "_dsu", "_dsu_size", "_dsu_ok")

    def __init__(self, n: int, track_k4: bool = False):
        self.n = n
        self.adj = BitAdjacency(n)
        self.edge_count = 0
        self.triangle_count = 0
        self.k4_count = 0
        self.track_k4 = track_k4
        self._dsu = list(range(n))
        self._dsu_size = [1] * n
        self._dsu_ok = True

    # -- mutation -----------------------------------------------------------

    def add_edge(self, u: int, v: int) -> int:
        """Claims (u, v); returns the number of triangles it completed."""
        if u == v:
            raise GraphError("loops are not edges")
        if self.adj.has(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        delta = self.adj.common_count(u, v)
        if self.track_k4 and delta >= 2:
            common = self.adj.common_members(u, v)
            k4 = 0
            for i, w in enumerate(common):
                for x in common[i + 1:]:
                    if self.adj.has(w, x):
                        k4 += 1
            self.k4_count += k4
        self.adj.add(u, v)
        self.edge_count += 1
        self.triangle_count += delta
        if self._dsu_ok:
            self._union(u, v)
        return delta

    def remove_edge(self, u: int, v: int) -> int:
        """Undo helper for search code; returns the triangle count removed."""
        if not self.adj.has(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        self.adj.discard(u, v)
        delta = self.adj.common_count(u, v)
        if self.track_k4 and delta >= 2:
            common = self.adj.common_members(u, v)
            k4 = 0
            for i, w in enumerate(common):
                for x in common[i + 1:]:
                    if self.adj.has(w, x):
                        k4 += 1
            self.k4_count -= k4
        self.edge_count -= 1
        self.triangle_count -= delta
        self._dsu_ok = False  # components may split; rebuilt on demand
        return delta

    # -- queries ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return self.adj.has(u, v)

    def degree(self, u: int) -> int:
        return self.adj.degree(u)

    def max_degree(self) -> int:
        return max(self.adj.degree(u) for u in range(self.n))

    def neighbors(self, u: int) -> list[int]:
        return self.adj.neighbors(u)

    def common_neighbors(self, u: int, v: int) -> list[int]:
        return self.adj.common_members(u, v)

    def triangle_delta(self, u: int, v: int) -> int:
        """Triangles that claiming the absent edge (u, v) would complete."""
        if self.adj.has(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        return self.adj.common_count(u, v)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj.neighbors(u):
                if v > u:
                    yield (u, v)

    def count_triangles(self) -> int:
        return self.triangle_count

    def score(self, target: str = "K3") -> int:
        return self.k4_count if target == "K4" else self.triangle_count

    # -- connectivity -------------------------------------------------------

    def _find(self, x: int) -> int:
        dsu = self._dsu
        root = x
        while dsu[root] != root:
            root = dsu[root]
        while dsu[x] != root:
            dsu[x], x = root, dsu[x]
        return root

    def _union(self, u: int, v: int) -> None:
        ru, rv = self._find(u), self._find(v)
        if ru == rv:
            return
        if self._dsu_size[ru] < self._dsu_size[rv]:
            ru, rv = rv, ru
        self._dsu[rv] = ru
        self._dsu_size[ru] += self._dsu_size[rv]

    def _rebuild_dsu(self) -> None:
        self._dsu = list(range(self.n))
        self._dsu_size = [1] * self.n
        for u, v in self.edges():
            self._union(u, v)
        self._dsu_ok = True

    def same_component(self, u: int, v: int) -> bool:
        if not self._dsu_ok:
            self._rebuild_dsu()
        return self._find(u) == self._find(v)

    def component_size(self, v: int) -> int:
        if not self._dsu_ok:
            self._rebuild_dsu()
        return self._dsu_size[self._find(v)]

    def component_of(self, v: int) -> set[int]:
        """Vertex set of the connected component containing v (BFS)."""
        seen = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self.adj.neighbors(x):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def components(self) -> list[set[int]]:
        out = []
        seen: set[int] = set()
        for v in range(self.n):
            if v not in seen:
                comp = self.component_of(v)
                seen |= comp
                out.append(comp)
        return out

    # -- copying ------------------------------------------------------------

    def copy(self) -> "Graph":
        dup = Graph.__new__(Graph)
        dup.n = self.n
        dup.adj = self.adj.copy()
        dup.edge_count = self.edge_count
        dup.triangle_count = self.triangle_count
        dup.k4_count = self.k4_count
        dup.track_k4 = self.track_k4
        dup._dsu = list(self._dsu)
        dup._dsu_size = list(self._dsu_size)
        dup._dsu_ok = self._dsu_ok
        return dup


# ---------------------------------------------------------------------------
# Bounded path detection
# ---------------------------------------------------------------------------

def creates_path(g: Graph, u: int, v: int, k: int) -> bool:
    """Does claiming the absent edge (u, v) create a path on k vertices?

    Assumes g itself is already P_k-free, which the engine maintains for
    every graph playing under the path constraint; under that assumption
    any new P_k must pass through (u, v), and the search enumerates the
    two outward arms (a + b + 2 = k vertices) with depth-bounded DFS.
    """
    if k < 2:
        raise GraphError("paths need at least 2 vertices")
    return g.adj.path_through(u, v, k)


def has_path(g: Graph, k: int) -> bool:
    """Does g contain P_k anywhere? Unconditional scan, used by audits."""
    if k <= 1:
        return g.n >= k
    n = g.n
    adj = g.adj

    def extend(last: int, mask: int, left: int) -> bool:
        if left == 0:
            return True
        for w in adj.neighbors(last):
            bit = 1 << w
            if not mask & bit and extend(w, mask | bit, left - 1):
                return True
        return False

    return any(extend(s, 1 << s, k - 1) for s in range(n))


def count_k4(g: Graph) -> int:
    """Four-clique count via per-edge common-neighborhood scan."""
    total = 0
    for u, v in g.edges():
        common = g.common_neighbors(u, v)
        for i, w in enumerate(common):
            for x in common[i + 1:]:
                if g.has_edge(w, x):
                    total += 1
    return total // 6  # every K4 is hit once per each of its six edges


def has_diamond(g: Graph) -> bool:
    """A diamond is a C4 plus one diagonal: an edge lying in two triangles."""
    return any(g.adj.common_count(u, v) >= 2 for u, v in g.edges())


# ---------------------------------------------------------------------------
# Structure tags
# ---------------------------------------------------------------------------

class StructureKind(Enum):
    CHERRY = "cherry"
    TRIANGLE = "triangle"
    PENDANT_LEG_TRIANGLE = "pendant-leg-triangle"
    STAR = "star"
    FAN = "fan"
    WHEEL = "wheel"
    DIAMOND = "diamond"
    TYPE_A = "type-a"
    TYPE_B = "type-b"
    TYPE_C = "type-c"
    TYPE_D = "type-d"


@dataclass(frozen=True)
class StructureTag:
    """An occurrence of a named structure, with role labels.

    The listed vertices induce the structure in the tagged graph at
    creation time; callers must not cache tags across mutations.
    """
    kind: StructureKind
    vertices: tuple[int, ...]
    roles: dict

    def __post_init__(self):
        object.__setattr__(self, "roles", dict(self.roles))


def _induced_ok(g: Graph, vertices: tuple[int, ...], edges: set[tuple[int, int]]) -> bool:
    for i, a in enumerate(vertices):
        for b in vertices[i + 1:]:
            present = g.has_edge(a, b)
            wanted = normalize(a, b) in edges
            if present != wanted:
                return False
    return True


def find_structure(g: Graph, kind: StructureKind, k: Optional[int] = None) -> Optional[StructureTag]:
    """First occurrence of `kind` in lowest-vertex order, or None.

    Intended for audits and strategy bookkeeping on small to mid-size
    graphs; the scans are exhaustive, not indexed.
    """
    if kind is StructureKind.CHERRY:
        return _find_star(g, 2, StructureKind.CHERRY)
    if kind is StructureKind.STAR:
        if not k:
            raise GraphError("star lookup needs k")
        return _find_star(g, k, StructureKind.STAR)
    if kind is StructureKind.TRIANGLE:
        for u, v in g.edges():
            common = g.common_neighbors(u, v)
            if common:
                w = common[0]
                tri = tuple(sorted((u, v, w)))
                return StructureTag(StructureKind.TRIANGLE, tri, {"triangle": tri})
        return None
    if kind is StructureKind.PENDANT_LEG_TRIANGLE:
        return _find_pendant_leg(g)
    if kind is StructureKind.DIAMOND:
        for u, v in g.edges():
            common = g.common_neighbors(u, v)
            for i, w in enumerate(common):
                for x in common[i + 1:]:
                    if not g.has_edge(w, x):
                        verts = tuple(sorted((u, v, w, x)))
                        return StructureTag(StructureKind.DIAMOND, verts,
                                            {"diagonal": (u, v), "others": (w, x)})
        return None
    if kind is StructureKind.FAN:
        if not k:
            raise GraphError("fan lookup needs k")
        return _find_fan_or_wheel(g, k, close=False)
    if kind is StructureKind.WHEEL:
        if not k:
            raise GraphError("wheel lookup needs k")
        return _find_fan_or_wheel(g, k, close=True)
    if kind in (StructureKind.TYPE_A, StructureKind.TYPE_B,
                StructureKind.TYPE_C, StructureKind.TYPE_D):
        return _find_w4_type(g, kind)
    raise GraphError(f"unknown structure kind {kind}")


def _find_star(g: Graph, k: int, kind: StructureKind) -> Optional[StructureTag]:
    for c in range(g.n):
        nb = g.neighbors(c)
        if len(nb) < k:
            continue
        chosen = _independent_subset(g, nb, k)
        if chosen:
            return StructureTag(kind, (c, *chosen), {"center": c, "leaves": tuple(chosen)})
    return None


def _independent_subset(g: Graph, pool: list[int], k: int) -> Optional[list[int]]:
    chosen: list[int] = []

    def pick(start: int) -> bool:
        if len(chosen) == k:
            return True
        for i in range(start, len(pool)):
            cand = pool[i]
            if all(not g.has_edge(cand, c) for c in chosen):
                chosen.append(cand)
                if pick(i + 1):
                    return True
                chosen.pop()
        return False

    return chosen if pick(0) else None


def _find_pendant_leg(g: Graph) -> Optional[StructureTag]:
    for u, v in g.edges():
        for w in g.common_neighbors(u, v):
            tri = sorted((u, v, w))
            for t in tri:
                for d in g.neighbors(t):
                    if d in tri:
                        continue
                    if sum(g.has_edge(d, x) for x in tri) == 1:
                        verts = tuple(sorted((*tri, d)))
                        return StructureTag(StructureKind.PENDANT_LEG_TRIANGLE, verts,
                                            {"triangle": tuple(tri), "leg": (t, d)})
    return None


def _find_fan_or_wheel(g: Graph, k: int, close: bool) -> Optional[StructureTag]:
    kind = StructureKind.WHEEL if close else StructureKind.FAN
    for c in range(g.n):
        nb = g.neighbors(c)
        if len(nb) < k:
            continue
        seq = _induced_path_in(g, nb, k, close)
        if seq:
            role = "cycle" if close else "path"
            return StructureTag(kind, (c, *seq), {"center": c, role: tuple(seq)})
    return None


def _induced_path_in(g: Graph, pool: list[int], k: int, close: bool) -> Optional[list[int]]:
    """Ordered k vertices from pool inducing a path (cycle if `close`) exactly."""
    seq: list[int] = []

    def grow() -> bool:
        if len(seq) == k:
            return True
        final = close and len(seq) == k - 1
        for cand in pool:
            if cand in seq:
                continue
            if seq and not g.has_edge(seq[-1], cand):
                continue
            ok = True
            for i in range(len(seq) - 1):
                want = final and i == 0  # the wrap edge of a cycle
                if g.has_edge(cand, seq[i]) != want:
                    ok = False
                    break
            if not ok:
                continue
            seq.append(cand)
            if grow():
                return True
            seq.pop()
        return False

    return seq if grow() else None


def _find_w4_type(g: Graph, kind: StructureKind) -> Optional[StructureTag]:
    """Classify four-wheels by the extra triangles hanging off the rim."""
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) < 4:
            continue
        rim = _induced_path_in(g, nb, 4, close=True)
        if not rim:
            continue
        rim_edges = [(rim[i], rim[(i + 1) % 4]) for i in range(4)]
        extras = []  # (rim edge index, outside apex)
        body = set(rim) | {v}
        for idx, (a, b) in enumerate(rim_edges):
            for u in g.common_neighbors(a, b):
                if u not in body:
                    extras.append((idx, u))
        tag = _classify_w4(kind, v, rim, extras)
        if tag:
            return tag
    return None


def _classify_w4(kind: StructureKind, v: int, rim: list[int], extras: list) -> Optional[StructureTag]:
    roles = {"center": v, "rim": tuple(rim)}
    if kind is StructureKind.TYPE_A and not extras:
        return StructureTag(kind, (v, *rim), roles)
    if kind is StructureKind.TYPE_B and len(extras) == 1:
        idx, u = extras[0]
        roles["apex"] = u
        roles["rim_edge"] = (rim[idx], rim[(idx + 1) % 4])
        return StructureTag(kind, (v, *rim, u), roles)
    if kind is StructureKind.TYPE_C and len(extras) == 2:
        (i1, u1), (i2, u2) = extras
        if u1 != u2 and (i1 + 2) % 4 == i2:
            roles["apexes"] = (u1, u2)
            return StructureTag(kind, (v, *rim, u1, u2), roles)
    if kind is StructureKind.TYPE_D and len(extras) == 2:
        (i1, u1), (i2, u2) = extras
        if u1 == u2 and i1 != i2 and (i1 + 2) % 4 != i2:
            roles["apex"] = u1
            return StructureTag(kind, (v, *rim, u1), roles)
    return None


# ---------------------------------------------------------------------------
# Serialization: header "n <vertex count>", then one "u v" line per edge.
# ---------------------------------------------------------------------------

def dump_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges(), key=lambda e: edge_id(g.n, *e)))
    return "\n".join(lines) + "\n"


def load_graph(text: str, track_k4: bool = False) -> Graph:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphError("graph text must start with a 'n <count>' header")
    g = Graph(int(head[1]), track_k4=track_k4)
    for ln in lines[1:]:
        u, v = map(int, ln.split())
        g.add_edge(u, v)
    return g


# ---------------------------------------------------------------------------
# Builders (tests, audits, docs)
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def path_graph(k: int, n: Optional[int] = None) -> Graph:
    g = Graph(n or k)
    for i in range(k - 1):
        g.add_edge(i, i + 1)
    return g


def cycle_graph(k: int, n: Optional[int] = None) -> Graph:
    g = path_graph(k, n)
    g.add_edge(k - 1, 0)
    return g


def star_graph(k: int, n: Optional[int] = None) -> Graph:
    """Star with k leaves, center 0."""
    g = Graph(n or k + 1)
    for i in range(1, k + 1):
        g.add_edge(0, i)
    return g


def apollonian_network(n: int) -> Graph:
    """Planar triangulation grown by repeated face splitting; 3n-8 triangles."""
    if n < 3:
        raise GraphError("needs at least 3 vertices")
    g = Graph(n)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(0, 2)
    faces = [(0, 1, 2)]
    for w in range(3, n):
        a, b, c = faces.pop(0)
        g.add_edge(w, a)
        g.add_edge(w, b)
        g.add_edge(w, c)
        faces.extend([(a, b, w), (a, c, w), (b, c, w)])
    return g
