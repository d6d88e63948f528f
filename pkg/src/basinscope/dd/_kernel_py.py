"""Pure-Python reduced ordered BDD kernel.

Node ids are small ints; 0 and 1 are the FALSE/TRUE terminals.  Levels are
interleaved: model variable i occupies level 2i (unprimed) and 2i+1
(primed).  Terminals sit at the sentinel level 2n.
"""

from __future__ import annotations

BACKEND = "py"

OP_AND = 0
OP_OR = 1
OP_XOR = 2
OP_DIFF = 3


class NodeLimitError(MemoryError):
    """Raised when the diagram grows past the configured node cap."""


class Kernel:
    def __init__(self, n_vars: int, node_limit: int = 1 << 24):
        self.n = n_vars
        self.num_levels = 2 * n_vars
        self.node_limit = node_limit
        sentinel = self.num_levels
        self._level = [sentinel, sentinel]
        self._low = [0, 1]
        self._high = [0, 1]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._apply_cache: dict[tuple[int, int, int], int] = {}
        self._exists_cache: dict[tuple[int, int], int] = {}
        self._shift_cache: dict[tuple[int, int], int] = {}

    # -- node construction -------------------------------------------------

    def mk(self, level: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (level, low, high)
        node = self._unique.get(key)
        if node is not None:
            return node
        node = len(self._level)
        if node > self.node_limit:
            raise NodeLimitError(
                f"decision diagram exceeds node limit {self.node_limit}")
        self._level.append(level)
        self._low.append(low)
        self._high.append(high)
        self._unique[key] = node
        return node

    def var(self, level: int) -> int:
        return self.mk(level, 0, 1)

    # -- accessors ---------------------------------------------------------

    def level_of(self, f: int) -> int:
        return self._level[f]

    def low_of(self, f: int) -> int:
        return self._low[f]

    def high_of(self, f: int) -> int:
        return self._high[f]

    def num_nodes(self) -> int:
        return len(self._level)

    def reset_cache(self):
        self._apply_cache.clear()
        self._exists_cache.clear()
        self._shift_cache.clear()

    # -- Boolean operations ------------------------------------------------

    def apply(self, op: int, f: int, g: int) -> int:
        if op == OP_AND:
            if f == 0 or g == 0:
                return 0
            if f == 1:
                return g
            if g == 1 or f == g:
                return f
        elif op == OP_OR:
            if f == 1 or g == 1:
                return 1
            if f == 0:
                return g
            if g == 0 or f == g:
                return f
        elif op == OP_XOR:
            if f == g:
                return 0
            if f == 0:
                return g
            if g == 0:
                return f
        elif op == OP_DIFF:
            if f == 0 or g == 1 or f == g:
                return 0
            if g == 0:
                return f
        else:
            raise ValueError(f"unknown operation code {op}")
        if op != OP_DIFF and f > g:
            f, g = g, f
        key = (op, f, g)
        cached = self._apply_cache.get(key)
        if cached is not None:
            return cached
        level = self._level
        lf = level[f]
        lg = level[g]
        if lf <= lg:
            top = lf
            f0, f1 = self._low[f], self._high[f]
        else:
            top = lg
            f0 = f1 = f
        if lg <= lf:
            g0, g1 = self._low[g], self._high[g]
        else:
            g0 = g1 = g
        r0 = self.apply(op, f0, g0)
        r1 = self.apply(op, f1, g1)
        res = self.mk(top, r0, r1)
        self._apply_cache[key] = res
        return res

    def negate(self, f: int) -> int:
        return self.apply(OP_XOR, f, 1)

    # -- quantification ----------------------------------------------------

    def exists_parity(self, parity: int, f: int) -> int:
        """Existentially quantify every level with the given parity
        (0 = all unprimed slots, 1 = all primed slots)."""
        if f < 2:
            return f
        key = (parity, f)
        cached = self._exists_cache.get(key)
        if cached is not None:
            return cached
        lf = self._level[f]
        r0 = self.exists_parity(parity, self._low[f])
        r1 = self.exists_parity(parity, self._high[f])
        if lf % 2 == parity:
            res = self.apply(OP_OR, r0, r1)
        else:
            res = self.mk(lf, r0, r1)
        self._exists_cache[key] = res
        return res

    def exists_levels(self, levels: frozenset, f: int, _cache=None) -> int:
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
            res = self.apply(OP_OR, r0, r1)
        else:
            res = self.mk(lf, r0, r1)
        _cache[f] = res
        return res

    # -- renaming ----------------------------------------------------------

    def shift(self, delta: int, f: int) -> int:
        """Rename variables by level shift: +1 maps unprimed slots to their
        primed partners, -1 is the inverse.  The diagram must reference
        only one polarity of slots."""
        if delta not in (1, -1):
            raise ValueError("shift delta must be +1 or -1")
        if f < 2:
            return f
        key = (delta, f)
        cached = self._shift_cache.get(key)
        if cached is not None:
            return cached
        lf = self._level[f]
        want = 0 if delta == 1 else 1
        if lf % 2 != want:
            raise ValueError("rename applied to a mixed-polarity diagram")
        res = self.mk(lf + delta,
                      self.shift(delta, self._low[f]),
                      self.shift(delta, self._high[f]))
        self._shift_cache[key] = res
        return res
