"""Pure-Python bitset adjacency backend.

Rows are arbitrary-precision ints used as bitsets; `int.bit_count` and
bitwise AND give popcount-style primitives that stay fast up to the
n <= 10000 cap. The compiled extension in `_kernels.pyx` exposes the
same surface; `graphcore` picks whichever is importable.
"""

from __future__ import annotations

BACKEND_NAME = "python"

MAX_VERTICES = 10_000


class BitAdjacency:
    """Symmetric adjacency over vertices 0..n-1, one int bitset per row."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int):
        if not 0 < n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
        self.n = n
        self._rows = [0] * n

    def add(self, u: int, v: int) -> None:
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u

    def discard(self, u: int, v: int) -> None:
        self._rows[u] &= ~(1 << v)
        self._rows[v] &= ~(1 << u)

    def has(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def common_count(self, u: int, v: int) -> int:
        return (self._rows[u] & self._rows[v]).bit_count()

    def common_members(self, u: int, v: int) -> list[int]:
        return _bits_to_list(self._rows[u] & self._rows[v])

    def neighbors(self, u: int) -> list[int]:
        return _bits_to_list(self._rows[u])

    def row_int(self, u: int) -> int:
        return self._rows[u]

    def copy(self) -> "BitAdjacency":
        dup = BitAdjacency.__new__(BitAdjacency)
        dup.n = self.n
        dup._rows = list(self._rows)
        return dup

    def count_triangles(self) -> int:
        """Full recount; not meant for per-move use."""
        total = 0
        rows = self._rows
        for u in range(self.n):
            row_u = rows[u]
            w = row_u >> (u + 1) << (u + 1)  # neighbors above u
            while w:
                v = (w & -w).bit_length() - 1
                w &= w - 1
                total += (row_u & rows[v] >> (v + 1) << (v + 1)).bit_count()
        return total

    def path_through(self, u: int, v: int, k: int) -> bool:
        """Would the edge (u, v) lie on a simple path with exactly k vertices?

        The edge itself need not be present in the adjacency; it is treated
        as claimed. Arms are grown from u and from v over existing edges.
        """
        need = k - 2
        if need < 0:
            return False
        if need == 0:
            return True
        mask = (1 << u) | (1 << v)
        for a in range(need + 1):
            if self._grow_arms(u, v, mask, a, need - a):
                return True
        return False

    def _grow_arms(self, fa: int, fb: int, mask: int, a: int, b: int) -> bool:
        # extend `a` vertices beyond fa, then `b` beyond fb, all distinct
        if a == 0:
            if b == 0:
                return True
            fa, fb = fb, fa
            a, b = b, 0
        w = self._rows[fa] & ~mask
        while w:
            low = w & -w
            x = low.bit_length() - 1
            w ^= low
            if self._grow_arms(x, fb, mask | low, a - 1, b):
                return True
        return False


def _bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def crossing_any(us, vs, count: int, a: int, b: int) -> bool:
    """Does any chord in the arrays interleave with the chord (a, b), a < b?"""
    for i in range(count):
        x = us[i]
        y = vs[i]
        if x == a or x == b or y == a or y == b:
            continue
        if (a < x < b) != (a < y < b):
            return True
    return False
