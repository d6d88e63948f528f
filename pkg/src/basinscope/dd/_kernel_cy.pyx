# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled reduced ordered BDD kernel; same API as _kernel_py.

Node ids are capped at 2^26 - 1 so that (level, low, high) triples and
(op, f, g) cache keys pack into a single int64 hash key.
"""

from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map

BACKEND = "cy"

OP_AND = 0
OP_OR = 1
OP_XOR = 2
OP_DIFF = 3

cdef int C_AND = 0
cdef int C_OR = 1
cdef int C_XOR = 2
cdef int C_DIFF = 3

cdef long long PACK = 26
cdef long long MAX_ID = (1 << 26) - 1


class NodeLimitError(MemoryError):
    """Raised when the diagram grows past the configured node cap."""


cdef class Kernel:
    cdef public int n
    cdef public int num_levels
    cdef public long long node_limit
    cdef vector[int] _level
    cdef vector[int] _low
    cdef vector[int] _high
    cdef unordered_map[long long, int] _unique
    cdef unordered_map[long long, int] _apply_cache
    cdef unordered_map[long long, int] _exists_cache
    cdef unordered_map[long long, int] _shift_cache

    def __cinit__(self, int n_vars, long long node_limit=1 << 24):
        cdef int sentinel = 2 * n_vars
        self.n = n_vars
        self.num_levels = sentinel
        if node_limit > MAX_ID:
            node_limit = MAX_ID
        self.node_limit = node_limit
        self._level.push_back(sentinel)
        self._level.push_back(sentinel)
        self._low.push_back(0)
        self._low.push_back(1)
        self._high.push_back(0)
        self._high.push_back(1)

    # -- node construction -------------------------------------------------

    cdef int _mk(self, int level, int low, int high) except -1:
        cdef long long key
        cdef int node
        if low == high:
            return low
        key = ((<long long>level << PACK) | <long long>low) << PACK | <long long>high
        it = self._unique.find(key)
        if it != self._unique.end():
            return (<int>self._unique[key])
        node = <int>self._level.size()
        if node > self.node_limit:
            raise NodeLimitError(
                "decision diagram exceeds node limit %d" % self.node_limit)
        self._level.push_back(level)
        self._low.push_back(low)
        self._high.push_back(high)
        self._unique[key] = node
        return node

    def mk(self, int level, int low, int high):
        return self._mk(level, low, high)

    def var(self, int level):
        return self._mk(level, 0, 1)

    # -- accessors ---------------------------------------------------------

    def level_of(self, int f):
        return self._level[f]

    def low_of(self, int f):
        return self._low[f]

    def high_of(self, int f):
        return self._high[f]

    def num_nodes(self):
        return <long long>self._level.size()

    def reset_cache(self):
        self._apply_cache.clear()
        self._exists_cache.clear()
        self._shift_cache.clear()

    # -- Boolean operations ------------------------------------------------

    cdef int _apply(self, int op, int f, int g) except -1:
        cdef long long key
        cdef int lf, lg, top, f0, f1, g0, g1, r0, r1, res, tmp
        if op == C_AND:
            if f == 0 or g == 0:
                return 0
            if f == 1:
                return g
            if g == 1 or f == g:
                return f
        elif op == C_OR:
            if f == 1 or g == 1:
                return 1
            if f == 0:
                return g
            if g == 0 or f == g:
                return f
        elif op == C_XOR:
            if f == g:
                return 0
            if f == 0:
                return g
            if g == 0:
                return f
        else:
            if f == 0 or g == 1 or f == g:
                return 0
            if g == 0:
                return f
        if op != C_DIFF and f > g:
            tmp = f
            f = g
            g = tmp
        key = ((<long long>op << PACK) | <long long>f) << PACK | <long long>g
        it = self._apply_cache.find(key)
        if it != self._apply_cache.end():
            return self._apply_cache[key]
        lf = self._level[f]
        lg = self._level[g]
        if lf <= lg:
            top = lf
            f0 = self._low[f]
            f1 = self._high[f]
        else:
            top = lg
            f0 = f
            f1 = f
        if lg <= lf:
            g0 = self._low[g]
            g1 = self._high[g]
        else:
            g0 = g
            g1 = g
        r0 = self._apply(op, f0, g0)
        r1 = self._apply(op, f1, g1)
        res = self._mk(top, r0, r1)
        self._apply_cache[key] = res
        return res

    def apply(self, int op, int f, int g):
        if op < 0 or op > 3:
            raise ValueError("unknown operation code %d" % op)
        return self._apply(op, f, g)

    def negate(self, int f):
        return self._apply(C_XOR, f, 1)

    # -- quantification ----------------------------------------------------

    cdef int _exists_parity(self, int parity, int f) except -1:
        cdef long long key
        cdef int lf, r0, r1, res
        if f < 2:
            return f
        key = (<long long>parity << (2 * PACK)) | <long long>f
        it = self._exists_cache.find(key)
        if it != self._exists_cache.end():
            return self._exists_cache[key]
        lf = self._level[f]
        r0 = self._exists_parity(parity, self._low[f])
        r1 = self._exists_parity(parity, self._high[f])
        if lf % 2 == parity:
            res = self._apply(C_OR, r0, r1)
        else:
            res = self._mk(lf, r0, r1)
        self._exists_cache[key] = res
        return res

    def exists_parity(self, int parity, int f):
        return self._exists_parity(parity, f)

    def exists_levels(self, levels, int f, _cache=None):
        """Existentially quantify an arbitrary set of levels."""
        if _cache is None:
            _cache = {}
        if f < 2:
            return f
        cached = _cache.get(f)
        if cached is not None:
            return cached
        lf = self._level[f]
        r0 = self.exists_levels(levels, self._low[f], _cache)
        r1 = self.exists_levels(levels, self._high[f], _cache)
        if lf in levels:
            res = self._apply(C_OR, r0, r1)
        else:
            res = self._mk(lf, r0, r1)
        _cache[f] = res
        return res

    # -- renaming ----------------------------------------------------------

    cdef int _shift(self, int delta, int f) except -1:
        cdef long long key
        cdef int lf, want, res
        if f < 2:
            return f
        key = ((<long long>(1 if delta > 0 else 0)) << (2 * PACK)) | <long long>f
        it = self._shift_cache.find(key)
        if it != self._shift_cache.end():
            return self._shift_cache[key]
        lf = self._level[f]
        want = 0 if delta == 1 else 1
        if lf % 2 != want:
            raise ValueError("rename applied to a mixed-polarity diagram")
        res = self._mk(lf + delta,
                       self._shift(delta, self._low[f]),
                       self._shift(delta, self._high[f]))
        self._shift_cache[key] = res
        return res

    def shift(self, int delta, int f):
        if delta != 1 and delta != -1:
            raise ValueError("shift delta must be +1 or -1")
        return self._shift(delta, f)
