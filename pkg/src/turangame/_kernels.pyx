# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset adjacency backend.

Same surface as `_bitsets.BitAdjacency`, with rows stored as flat uint64
words and the hot primitives (popcount intersections, depth-bounded path
search) running as C loops. Selected automatically by `graphcore` when
importable; set TURANGAME_PURE_PYTHON=1 to force the Python twin.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy

cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    static inline int _tg_popcount(unsigned long long x) { return (int)__popcnt64(x); }
    #else
    static inline int _tg_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    #endif
    static inline int _tg_ctz(unsigned long long x) {
    #if defined(_MSC_VER)
        unsigned long i; _BitScanForward64(&i, x); return (int)i;
    #else
        return __builtin_ctzll(x);
    #endif
    }
    """
    int _tg_popcount(unsigned long long x) nogil
    int _tg_ctz(unsigned long long x) nogil

ctypedef unsigned long long u64

BACKEND_NAME = "cython"

MAX_VERTICES = 10_000


cdef class BitAdjacency:
    """Symmetric adjacency over vertices 0..n-1, flat uint64 bit rows."""

    cdef u64 *rows
    cdef readonly int n
    cdef int words

    def __cinit__(self, int n):
        if n <= 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
        self.n = n
        self.words = (n + 63) >> 6
        self.rows = <u64 *> calloc(n * self.words, sizeof(u64))
        if self.rows == NULL:
            raise MemoryError()

    def __dealloc__(self):
        if self.rows != NULL:
            free(self.rows)

    cpdef void add(self, int u, int v):
        self.rows[(<long> u) * self.words + (v >> 6)] |= (<u64> 1) << (v & 63)
        self.rows[(<long> v) * self.words + (u >> 6)] |= (<u64> 1) << (u & 63)

    cpdef void discard(self, int u, int v):
        self.rows[(<long> u) * self.words + (v >> 6)] &= ~((<u64> 1) << (v & 63))
        self.rows[(<long> v) * self.words + (u >> 6)] &= ~((<u64> 1) << (u & 63))

    cpdef bint has(self, int u, int v):
        return (self.rows[(<long> u) * self.words + (v >> 6)] >> (v & 63)) & 1

    cpdef int degree(self, int u):
        cdef int i, total = 0
        cdef u64 *row = self.rows + (<long> u) * self.words
        for i in range(self.words):
            total += _tg_popcount(row[i])
        return total

    cpdef int common_count(self, int u, int v):
        cdef int i, total = 0
        cdef u64 *ru = self.rows + (<long> u) * self.words
        cdef u64 *rv = self.rows + (<long> v) * self.words
        for i in range(self.words):
            total += _tg_popcount(ru[i] & rv[i])
        return total

    def common_members(self, int u, int v):
        cdef int i, base
        cdef u64 w
        cdef u64 *ru = self.rows + (<long> u) * self.words
        cdef u64 *rv = self.rows + (<long> v) * self.words
        out = []
        for i in range(self.words):
            w = ru[i] & rv[i]
            base = i << 6
            while w:
                out.append(base + _tg_ctz(w))
                w &= w - 1
        return out

    def neighbors(self, int u):
        cdef int i, base
        cdef u64 w
        cdef u64 *row = self.rows + (<long> u) * self.words
        out = []
        for i in range(self.words):
            w = row[i]
            base = i << 6
            while w:
                out.append(base + _tg_ctz(w))
                w &= w - 1
        return out

    def row_int(self, int u):
        cdef int i
        cdef object acc = 0
        cdef u64 *row = self.rows + (<long> u) * self.words
        for i in range(self.words - 1, -1, -1):
            acc = (acc << 64) | row[i]
        return acc

    def copy(self):
        cdef BitAdjacency dup = BitAdjacency(self.n)
        memcpy(dup.rows, self.rows, self.n * self.words * sizeof(u64))
        return dup

    def count_triangles(self):
        cdef long total = 0
        cdef int u, v, i, base
        cdef u64 w, mask
        cdef u64 *ru
        cdef u64 *rv
        for u in range(self.n):
            ru = self.rows + (<long> u) * self.words
            # neighbors above u
            for i in range(u >> 6, self.words):
                w = ru[i]
                if i == (u >> 6):
                    if (u & 63) == 63:
                        w = 0
                    else:
                        w &= ~(((<u64> 1) << ((u & 63) + 1)) - 1)
                base = i << 6
                while w:
                    v = base + _tg_ctz(w)
                    w &= w - 1
                    rv = self.rows + (<long> v) * self.words
                    total += self._common_above(ru, rv, v)
        return total

    cdef long _common_above(self, u64 *ru, u64 *rv, int v):
        cdef long total = 0
        cdef int i, start = v >> 6
        cdef u64 w
        for i in range(start, self.words):
            w = ru[i] & rv[i]
            if i == start:
                if (v & 63) == 63:
                    w = 0
                else:
                    w &= ~(((<u64> 1) << ((v & 63) + 1)) - 1)
            total += _tg_popcount(w)
        return total

    def path_through(self, int u, int v, int k):
        """Would edge (u, v) lie on a simple path with exactly k vertices?"""
        cdef int need = k - 2
        if need < 0:
            return False
        if need == 0:
            return True
        if need > 62:
            raise ValueError("path bound too large")
        cdef u64 *mask = <u64 *> calloc(self.words, sizeof(u64))
        if mask == NULL:
            raise MemoryError()
        mask[u >> 6] |= (<u64> 1) << (u & 63)
        mask[v >> 6] |= (<u64> 1) << (v & 63)
        cdef int a
        cdef bint found = False
        for a in range(need + 1):
            if self._grow(u, v, mask, a, need - a):
                found = True
                break
        free(mask)
        return found

    cdef bint _grow(self, int fa, int fb, u64 *mask, int a, int b):
        cdef int i, x, base, tmp
        cdef u64 w, bit
        cdef u64 *row
        if a == 0:
            if b == 0:
                return True
            tmp = fa
            fa = fb
            fb = tmp
            a = b
            b = 0
        row = self.rows + (<long> fa) * self.words
        for i in range(self.words):
            w = row[i] & ~mask[i]
            base = i << 6
            while w:
                x = base + _tg_ctz(w)
                bit = w & (~w + 1)
                w &= w - 1
                mask[i] |= bit
                if self._grow(x, fb, mask, a - 1, b):
                    mask[i] &= ~bit
                    return True
                mask[i] &= ~bit
        return False


def crossing_any(int[::1] us, int[::1] vs, Py_ssize_t count, int a, int b):
    """Does any chord in the arrays interleave with the chord (a, b), a < b?"""
    cdef Py_ssize_t i
    cdef int x, y
    cdef bint ina, inb
    for i in range(count):
        x = us[i]
        y = vs[i]
        if x == a or x == b or y == a or y == b:
            continue
        ina = a < x and x < b
        inb = a < y and y < b
        if ina != inb:
            return True
    return False
