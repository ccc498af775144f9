"""Constructor for the planar game: grow an Apollonian-style stack.

Shape of the play: a fan on six path vertices is forced first (pendant
gadget plus four two-threat extensions). Then, repeatedly, a red vertex
(center of a wheel or big fan) hosts 26 three-move attachments, each
adding an isolated safe vertex to one of its faces for three new
triangles; the 26 insertions pile at least six consecutive fresh
vertices into one original gap, which together with the center forms a
new fan for the structure set, and at least one of them is itself red
and seeds the next round. Finally every remaining isolated safe vertex
is attached to some stored structure, three triangles apiece.

Faces are tracked combinatorially as (center, consecutive rim pair);
a global consumed-face set prevents two structures from spending the
same geometric face twice.
"""

from __future__ import annotations

from typing import Optional

from ..constraints import ConstraintKind
from ..engine import FREE, GameState, Player
from .base import Strategy
from .pendant import PendantLegPlan, pick_fresh_five

STAGE3_RESERVE = 6 * 105 + 1  # isolated-vertex floor before Constructor stops
ATTACHES_PER_ROUND = 26


class StackStructure:
    """A center plus its rim in face order; consecutive rim pairs are faces.

    `anchor_mask` holds the member vertices as a bitset and
    `blocked_mask` the union of their Blocker neighborhoods, maintained
    incrementally so safety checks are one bit test per candidate.
    """

    __slots__ = ("center", "rim", "cyclic", "original", "fresh", "red", "sid",
                 "anchor_mask", "blocked_mask")

    def __init__(self, center: int, rim: list[int], cyclic: bool, bgraph=None):
        self.center = center
        self.rim = list(rim)
        self.cyclic = cyclic
        self.original = set(rim)
        self.fresh: set[int] = set()
        self.red: set[int] = set()
        self.sid: Optional[int] = None  # set when stored for later harvesting
        self.anchor_mask = 1 << center
        self.blocked_mask = 0
        for v in rim:
            self.anchor_mask |= 1 << v
        if bgraph is not None:
            self.blocked_mask = bgraph.adj.row_int(center)
            for v in rim:
                self.blocked_mask |= bgraph.adj.row_int(v)

    def face_keys(self) -> list[frozenset]:
        return [frozenset((self.center, a, b)) for (a, b) in self.faces()]

    def faces(self) -> list[tuple[int, int]]:
        pairs = list(zip(self.rim, self.rim[1:]))
        if self.cyclic:
            pairs.append((self.rim[-1], self.rim[0]))
        return pairs

    def insert(self, u: int, v2: int, side: int) -> None:
        i = self.rim.index(v2)
        n = len(self.rim)
        if self.cyclic:
            if self.rim[(i + 1) % n] == side:
                self.rim.insert(i + 1, u)
            else:
                self.rim.insert(i, u)
        else:
            if i + 1 < n and self.rim[i + 1] == side:
                self.rim.insert(i + 1, u)
            else:
                self.rim.insert(i, u)
        self.fresh.add(u)
        for w in (v2, side):
            if w in self.fresh:
                self.red.add(w)  # w is now the center of a four-wheel


class ConstructorPCB(Strategy):
    id = "c-pcb"
    allowed_side = Player.CONSTRUCTOR
    supported_kinds = frozenset({ConstraintKind.PLANAR})

    def __init__(self, side, config):
        super().__init__(side, config)
        self.stage = 1
        self._pendant: Optional[PendantLegPlan] = None
        self._fan: Optional[dict] = None  # {"apex", "ends", "pending"}
        self._attach: Optional[dict] = None
        self.structures: list[StackStructure] = []
        self._base: Optional[StackStructure] = None
        self._round_attached = 0
        self._rounds_left = config.n // 105
        self._consumed: set[frozenset] = set()
        # faces reserved for a stored structure; other structures' attach
        # plans must not spend them (wheels of later bases overlap the
        # stored fans around the old centers)
        self._face_owner: dict[frozenset, int] = {}
        self._next_sid = 0
        self._known_red: list[int] = []
        self._centers: set[int] = set()
        self.isolated = config.n
        self.attach_failures = 0
        self.attached_total = 0
        self._iso_ptr = 0
        self._done = False

    # -- observation ----------------------------------------------------------

    def observe(self, state, mover, eid, passed):
        u, v = state.edge(eid)
        if mover is Player.CONSTRUCTOR:
            cg = state.cgraph
            if cg.degree(u) == 1:
                self.isolated -= 1
            if cg.degree(v) == 1:
                self.isolated -= 1
            return
        if self._pendant is not None and not self._pendant.done:
            self._pendant.on_blocker(state, u, v)
        bit_u, bit_v = 1 << u, 1 << v
        for struct in self._live_structures():
            if struct.anchor_mask & bit_u:
                struct.blocked_mask |= bit_v
            if struct.anchor_mask & bit_v:
                struct.blocked_mask |= bit_u

    def _live_structures(self):
        if self._base is not None and self._base not in self.structures:
            yield self._base
        yield from self.structures

    # -- safety ----------------------------------------------------------------

    def _safe_isolated(self, state: GameState, blocked_mask: int) -> Optional[int]:
        """Lowest vertex isolated in Constructor's graph outside the blocked
        bitset (union of Blocker neighborhoods of the structure members).

        Isolation is monotone, so a pointer skips settled vertices; the
        safety scan is windowed (an unsafe candidate for one structure can
        still serve another later).
        """
        cg = state.cgraph
        while self._iso_ptr < state.n and cg.degree(self._iso_ptr) != 0:
            self._iso_ptr += 1
        checked = 0
        v = self._iso_ptr
        while v < state.n and checked < 200:
            if cg.degree(v) == 0:
                checked += 1
                if not (blocked_mask >> v) & 1:
                    return v
            v += 1
        return None

    # -- attachment plan ---------------------------------------------------------

    def _start_attach(self, state: GameState, struct: StackStructure) -> Optional[int]:
        if not self._has_open_face(struct):
            return None  # structure spent; never burn a vertex on it
        u = self._safe_isolated(state, struct.blocked_mask)
        if u is None:
            return None
        self._attach = {"struct": struct, "u": u, "step": 0, "v2": None}
        return self._continue_attach(state)

    def _valid_v2(self, state: GameState, struct: StackStructure, u: int) -> Optional[tuple[int, int, int]]:
        """Rim vertex with both flanks usable: all three spokes free and
        neither flank face consumed. Returns (left, v2, right)."""
        rim = struct.rim
        n = len(rim)
        owner = state.owner
        best = None
        idxs = range(n) if struct.cyclic else range(1, n - 1)
        for i in idxs:
            v2 = rim[i]
            left = rim[(i - 1) % n]
            right = rim[(i + 1) % n]
            c = struct.center
            ok = True
            for face in (frozenset((c, left, v2)), frozenset((c, v2, right))):
                if face in self._consumed:
                    ok = False
                    break
                owner_sid = self._face_owner.get(face)
                if owner_sid is not None and owner_sid != struct.sid:
                    ok = False
                    break
            if not ok:
                continue
            if owner[state.eid(u, v2)] != FREE:
                continue
            if owner[state.eid(u, left)] != FREE or owner[state.eid(u, right)] != FREE:
                continue
            if best is None or v2 < best[1]:
                best = (left, v2, right)
        return best

    def _has_open_face(self, struct: StackStructure) -> bool:
        """Some rim position has both flank faces spendable (u-independent)."""
        rim = struct.rim
        n = len(rim)
        idxs = range(n) if struct.cyclic else range(1, n - 1)
        for i in idxs:
            c = struct.center
            ok = True
            for face in (frozenset((c, rim[(i - 1) % n], rim[i])),
                         frozenset((c, rim[i], rim[(i + 1) % n]))):
                if face in self._consumed:
                    ok = False
                    break
                owner_sid = self._face_owner.get(face)
                if owner_sid is not None and owner_sid != struct.sid:
                    ok = False
                    break
            if ok:
                return True
        return False

    def _continue_attach(self, state: GameState) -> Optional[int]:
        plan = self._attach
        struct: StackStructure = plan["struct"]
        u = plan["u"]
        if plan["step"] == 0:
            e = state.eid(u, struct.center)
            if state.owner[e] != FREE:
                self._attach = None
                self.attach_failures += 1
                return None
            plan["step"] = 1
            return e
        if plan["step"] == 1:
            found = self._valid_v2(state, struct, u)
            if found is None:
                self._attach = None
                self.attach_failures += 1
                return None
            plan["flanks"] = found
            plan["step"] = 2
            return state.eid(u, found[1])
        # step 2: claim one of the two side threats
        left, v2, right = plan["flanks"]
        self._attach = None
        options = [s for s in sorted((left, right))
                   if state.owner[state.eid(u, s)] == FREE]
        if not options:
            self.attach_failures += 1
            return None
        side = options[0]
        used = frozenset((struct.center, v2, side))
        self._consumed.add(used)
        struct.insert(u, v2, side)
        struct.anchor_mask |= 1 << u
        struct.blocked_mask |= state.bgraph.adj.row_int(u)
        if struct.sid is not None:
            self._face_owner.pop(used, None)
            c = struct.center
            self._face_owner[frozenset((c, v2, u))] = struct.sid
            self._face_owner[frozenset((c, u, side))] = struct.sid
        for w in (v2, side):
            if w in struct.red and w not in self._known_red:
                self._known_red.append(w)
        self.attached_total += 1
        self._round_attached += 1
        return state.eid(u, side)

    # -- stage I: force the first fan ------------------------------------------

    def _stage1(self, state: GameState) -> Optional[int]:
        if self._pendant is None and self._fan is None:
            verts = pick_fresh_five(state)
            if verts is None:
                self.stage = 3
                return None
            self._pendant = PendantLegPlan(verts)
        if self._pendant is not None and not self._pendant.done:
            return self._pendant.next_move(state)
        if self._fan is None:
            tri = sorted(self._pendant.triangle)
            apex = tri[0]
            self._fan = {"apex": apex, "ends": [tri[1], tri[2]],
                         "path_len": 2, "pending": None}
            self._pendant = None
        fan = self._fan
        if fan["pending"] is not None:
            u = fan["pending"]
            fan["pending"] = None
            options = [e for e in sorted(fan["ends"])
                       if state.owner[state.eid(u, e)] == FREE]
            if not options:
                self.attach_failures += 1
            else:
                end = options[0]
                i = fan["ends"].index(end)
                move = state.eid(u, end)
                fan["ends"][i] = u
                fan["path_len"] += 1
                return move
        if fan["path_len"] >= 6:
            self._finish_stage1(state)
            return self._dispatch(state)
        bg = state.bgraph.adj
        blocked = bg.row_int(fan["apex"]) | bg.row_int(fan["ends"][0]) | bg.row_int(fan["ends"][1])
        u = self._safe_isolated(state, blocked)
        if u is None:
            self.stage = 3
            return None
        e = state.eid(u, fan["apex"])
        fan["pending"] = u
        return e

    def _finish_stage1(self, state: GameState) -> None:
        fan = self._fan
        apex = fan["apex"]
        rim = self._walk_fan_path(state, apex, fan["ends"])
        base = StackStructure(apex, rim, cyclic=False, bgraph=state.bgraph)
        self._fan = None
        self.stage = 2
        self._base = base
        self._centers.add(apex)
        self._round_attached = 0

    def _walk_fan_path(self, state: GameState, apex: int, ends: list[int]) -> list[int]:
        cg = state.cgraph
        start = ends[0]
        rim = [start]
        prev = None
        cur = start
        while True:
            nxt = None
            for w in cg.neighbors(cur):
                if w == apex or w == prev:
                    continue
                if cg.has_edge(w, apex):
                    nxt = w
                    break
            if nxt is None:
                break
            rim.append(nxt)
            prev, cur = cur, nxt
        return rim

    # -- stage II: grow the structure set ----------------------------------------

    def _stage2(self, state: GameState) -> Optional[int]:
        while True:
            if self._rounds_left <= 0 or self._base is None:
                self._enter_stage3()
                return None
            if self._round_attached < ATTACHES_PER_ROUND:
                move = self._start_attach(state, self._base)
                if move is not None:
                    return move
                # no safe vertex for this base: give up on stage II
                self._enter_stage3()
                return None
            self._harvest(state)

    def _enter_stage3(self) -> None:
        self.stage = 3
        if self._base is not None and self._base not in self.structures:
            self._register(self._base)

    def _register(self, struct: StackStructure) -> None:
        struct.sid = self._next_sid
        self._next_sid += 1
        self.structures.append(struct)
        for face in struct.face_keys():
            if face not in self._consumed:
                self._face_owner[face] = struct.sid

    def _harvest(self, state: GameState) -> None:
        base = self._base
        window = self._fresh_window(base)
        if window is not None:
            self._register(StackStructure(base.center, window, cyclic=False, bgraph=state.bgraph))
        self._rounds_left -= 1
        self._round_attached = 0
        # the new base comes from the freshly harvested window when
        # possible: its wheel sits at the frontier of the stack, clear of
        # faces consumed by earlier rounds
        self._base = self._next_base(state, prefer=window or [])

    def _fresh_window(self, base: StackStructure) -> Optional[list[int]]:
        """Six rim-consecutive fresh vertices, preferring a window with a red."""
        rim = base.rim
        runs: list[list[int]] = []
        current: list[int] = []
        for v in rim:
            if v in base.fresh:
                current.append(v)
            else:
                if current:
                    runs.append(current)
                current = []
        if current:
            runs.append(current)
        for run in runs:
            if len(run) < 6:
                continue
            for start in range(len(run) - 5):
                window = run[start:start + 6]
                if any(w in base.red for w in window):
                    return window
            return run[:6]
        return None

    def _next_base(self, state: GameState, prefer: list[int]) -> Optional[StackStructure]:
        red_set = set(self._known_red)
        ordered = [r for r in prefer if r in red_set] + self._known_red
        for r in ordered:
            if r in self._centers:
                continue
            rim = self._wheel_rim(state, r)
            if rim is None:
                continue
            cand = StackStructure(r, rim, cyclic=True, bgraph=state.bgraph)
            if not self._has_open_face(cand):
                continue
            self._centers.add(r)
            return cand
        return None

    def _wheel_rim(self, state: GameState, r: int) -> Optional[list[int]]:
        """A 4-cycle among r's neighbors (r became red as a wheel center)."""
        cg = state.cgraph
        nb = cg.neighbors(r)
        k = len(nb)
        for a_i in range(k):
            a = nb[a_i]
            for b in nb:
                if b == a or not cg.has_edge(a, b):
                    continue
                for c in nb:
                    if c in (a, b) or not cg.has_edge(b, c):
                        continue
                    for d in nb:
                        if d in (a, b, c):
                            continue
                        if cg.has_edge(c, d) and cg.has_edge(d, a):
                            return [a, b, c, d]
        return None

    # -- stage III: attach the remaining isolated vertices -----------------------

    def _stage3(self, state: GameState) -> Optional[int]:
        if self._done or self.isolated <= STAGE3_RESERVE:
            self._done = True
            return None
        for struct in self.structures:
            move = self._start_attach(state, struct)
            if move is not None:
                return move
        self._done = True  # supply only shrinks; stop looking
        return None

    # -- dispatch -----------------------------------------------------------------

    def _dispatch(self, state: GameState) -> Optional[int]:
        if self._attach is not None:
            move = self._continue_attach(state)
            if move is not None:
                return move
        if self.stage == 1:
            move = self._stage1(state)
            if move is not None:
                return move
        if self.stage == 2:
            move = self._stage2(state)
            if move is not None:
                return move
        if self.stage == 3:
            return self._stage3(state)
        return None

    def next_move(self, state: GameState) -> Optional[int]:
        return self._dispatch(state)
