"""Legality predicates: may Constructor claim edge e?

Supported families: no restriction, forbidden path P_k, forbidden star
S_k (max degree k-1), forbidden K4, planarity, and the fixed convex
embedding where the n vertices sit at the n-th roots of unity and
Constructor's chords may not cross. All constraints are monotone:
once an edge is illegal against a graph it stays illegal against every
supergraph, which the engine exploits when scanning for moves.

Blocker is never constrained; these predicates apply to Constructor's
graph only. In embedded games Blocker's edges have no geometry.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import networkx as nx

from .graphcore import Graph, creates_path


class ConstraintError(Exception):
    """Bad constraint specification."""


class ConstraintKind(Enum):
    NONE = "none"
    FORBID_PATH = "path"
    FORBID_STAR = "star"
    FORBID_CLIQUE4 = "k4"
    PLANAR = "planar"
    EMBEDDED = "embedded"


@dataclass(frozen=True)
class Constraint:
    """A resolved legality rule. `k` is set for path/star kinds."""
    kind: ConstraintKind
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind is ConstraintKind.FORBID_PATH and (self.k is None or self.k < 2):
            raise ConstraintError("forbidden path needs k >= 2")
        if self.kind is ConstraintKind.FORBID_STAR and (self.k is None or self.k < 1):
            raise ConstraintError("forbidden star needs k >= 1")

    @property
    def name(self) -> str:
        if self.kind is ConstraintKind.FORBID_PATH:
            return f"path:{self.k}"
        if self.kind is ConstraintKind.FORBID_STAR:
            return f"star:{self.k}"
        return self.kind.value

    def __str__(self) -> str:
        return self.name


NONE = Constraint(ConstraintKind.NONE)
PLANAR = Constraint(ConstraintKind.PLANAR)
EMBEDDED = Constraint(ConstraintKind.EMBEDDED)
K4_FREE = Constraint(ConstraintKind.FORBID_CLIQUE4)


def forbid_path(k: int) -> Constraint:
    return Constraint(ConstraintKind.FORBID_PATH, k)


def forbid_star(k: int) -> Constraint:
    return Constraint(ConstraintKind.FORBID_STAR, k)


_POW_RE = re.compile(r"^star:fn=pow(\d+(?:\.\d+)?)$")


def parse_constraint(text: str, n: Optional[int] = None) -> Constraint:
    """Parse the config-file / CLI constraint strings.

    Exact forms: `none`, `path:K`, `star:K`, `star:fn=pow0.4`, `k4`,
    `planar`, `embedded`. The function form resolves k = floor(n^q)
    once, at configuration time, so `n` is required for it.
    """
    text = text.strip()
    if text == "none":
        return NONE
    if text == "k4":
        return K4_FREE
    if text == "planar":
        return PLANAR
    if text == "embedded":
        return EMBEDDED
    if text.startswith("path:"):
        return forbid_path(int(text.split(":", 1)[1]))
    m = _POW_RE.match(text)
    if m:
        if n is None:
            raise ConstraintError("star:fn=... needs the board size to resolve k")
        q = float(m.group(1))
        return forbid_star(resolve_star_k(n, q) + 1)
    if text.startswith("star:"):
        return forbid_star(int(text.split(":", 1)[1]))
    raise ConstraintError(f"unknown constraint {text!r}")


def resolve_star_k(n: int, q: float) -> int:
    """Star size k(n) = floor(n^q) for the growing-star games."""
    return int(math.floor(n ** q))


# ---------------------------------------------------------------------------
# Chord crossing on the convex embedding
# ---------------------------------------------------------------------------

def chords_cross(n: int, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Do two chords of the convex n-gon cross in their interiors?

    Vertices are placed at the n-th roots of unity in index order;
    chords sharing an endpoint never cross. The test is the standard
    interleaving criterion: exactly one endpoint of e2 lies strictly
    inside the circular arc from e1[0] to e1[1].
    """
    a, b = min(e1), max(e1)
    c, d = min(e2), max(e2)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def crossing_partner(n: int, g: Graph, u: int, v: int) -> Optional[tuple[int, int]]:
    """First existing edge of g that would cross chord (u, v), if any."""
    for e in g.edges():
        if chords_cross(n, e, (u, v)):
            return e
    return None


# ---------------------------------------------------------------------------
# Planarity
# ---------------------------------------------------------------------------

def is_planar(g: Graph) -> bool:
    """Static combinatorial planarity test (left-right algorithm)."""
    n, m = g.n, g.edge_count
    if m <= 2:
        return True
    if n >= 3 and m > 3 * n - 6:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(h, counterexample=False)
    return ok


def _planar_after_add(g: Graph, u: int, v: int) -> bool:
    n = g.n
    if n >= 3 and g.edge_count + 1 > 3 * n - 6:
        return False
    du, dv = g.degree(u), g.degree(v)
    # Cheap certificates: attaching an isolated vertex, bridging two
    # components, or hanging a degree-1 vertex onto one of its
    # neighbor's neighbors all preserve planarity.
    if du == 0 or dv == 0:
        return True
    if not g.same_component(u, v):
        return True
    if du == 1 and g.has_edge(g.neighbors(u)[0], v):
        return True
    if dv == 1 and g.has_edge(g.neighbors(v)[0], u):
        return True
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges())
    h.add_edge(u, v)
    ok, _ = nx.check_planarity(h, counterexample=False)
    return ok


# ---------------------------------------------------------------------------
# The legality predicate
# ---------------------------------------------------------------------------

def is_legal(c: Constraint, g: Graph, u: int, v: int) -> bool:
    """True iff g plus the absent edge (u, v) still satisfies c.

    For the path constraint the graph is assumed to satisfy c already
    (the referee maintains that invariant), so the check reduces to
    path detection through the candidate edge.
    """
    kind = c.kind
    if kind is ConstraintKind.NONE:
        return True
    if kind is ConstraintKind.FORBID_STAR:
        cap = c.k - 1
        return g.degree(u) + 1 <= cap and g.degree(v) + 1 <= cap
    if kind is ConstraintKind.FORBID_PATH:
        return not creates_path(g, u, v, c.k)
    if kind is ConstraintKind.FORBID_CLIQUE4:
        common = g.common_neighbors(u, v)
        for i, w in enumerate(common):
            for x in common[i + 1:]:
                if g.has_edge(w, x):
                    return False
        return True
    if kind is ConstraintKind.PLANAR:
        return _planar_after_add(g, u, v)
    if kind is ConstraintKind.EMBEDDED:
        return crossing_partner(g.n, g, u, v) is None
    raise ConstraintError(f"unhandled constraint kind {kind}")
