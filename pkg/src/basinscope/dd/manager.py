"""Decision-diagram manager: kernel wrapper plus state-level helpers."""

from __future__ import annotations

import os

from ..model import And, BoolExpr, Const, Not, Or, Var
from . import _select as _kernel

OP_AND = _kernel.OP_AND
OP_OR = _kernel.OP_OR
OP_XOR = _kernel.OP_XOR
OP_DIFF = _kernel.OP_DIFF

NodeLimitError = _kernel.NodeLimitError

DEFAULT_NODE_LIMIT = 1 << 24


def node_limit_from_env() -> int:
    raw = os.environ.get("BASINSCOPE_NODE_LIMIT")
    if raw is None:
        return DEFAULT_NODE_LIMIT
    limit = int(raw)
    if limit <= 0:
        raise ValueError("BASINSCOPE_NODE_LIMIT must be positive")
    return limit


class DdManager:
    """Canonical node store over 2n interleaved slots (unprimed, primed)."""

    def __init__(self, n_vars: int, node_limit: int | None = None):
        if node_limit is None:
            node_limit = node_limit_from_env()
        self.kernel = _kernel.Kernel(n_vars, node_limit)
        self.n = n_vars
        self.FALSE = 0
        self.TRUE = 1

    @property
    def backend(self) -> str:
        return _kernel.BACKEND

    # -- construction ------------------------------------------------------

    def var(self, i: int) -> int:
        """Diagram of model variable i (unprimed slot)."""
        return self.kernel.var(2 * i)

    def var_primed(self, i: int) -> int:
        return self.kernel.var(2 * i + 1)

    def compile_expr(self, expr: BoolExpr, primed: bool = False) -> int:
        """Compile an indexed Boolean expression into a diagram."""
        k = self.kernel
        if isinstance(expr, Const):
            return expr.value
        if isinstance(expr, Var):
            return self.var_primed(expr.index) if primed else self.var(expr.index)
        if isinstance(expr, Not):
            return k.negate(self.compile_expr(expr.child, primed))
        if isinstance(expr, And):
            acc = 1
            for a in expr.args:
                acc = k.apply(OP_AND, acc, self.compile_expr(a, primed))
            return acc
        if isinstance(expr, Or):
            acc = 0
            for a in expr.args:
                acc = k.apply(OP_OR, acc, self.compile_expr(a, primed))
            return acc
        raise ValueError(f"cannot compile {expr!r}")

    def cube_from_state(self, bits) -> int:
        """Diagram of the single state given as a bit sequence."""
        acc = 1
        k = self.kernel
        for i in reversed(range(self.n)):
            if bits[i]:
                acc = k.mk(2 * i, 0, acc)
            else:
                acc = k.mk(2 * i, acc, 0)
        return acc

    def from_states(self, states) -> int:
        """Diagram of a set of states given as bit strings."""
        acc = 0
        for s in states:
            acc = self.kernel.apply(OP_OR, acc, self.cube_from_state(
                [int(c) for c in s]))
        return acc

    # -- Boolean operations ------------------------------------------------

    def apply(self, op: int, f: int, g: int) -> int:
        return self.kernel.apply(op, f, g)

    def and_(self, f: int, g: int) -> int:
        return self.kernel.apply(OP_AND, f, g)

    def or_(self, f: int, g: int) -> int:
        return self.kernel.apply(OP_OR, f, g)

    def diff(self, f: int, g: int) -> int:
        return self.kernel.apply(OP_DIFF, f, g)

    def not_(self, f: int) -> int:
        return self.kernel.negate(f)

    # -- quantification and renaming ---------------------------------------

    def exists(self, slots, f: int) -> int:
        """Quantify a set of slot levels away."""
        return self.kernel.exists_levels(frozenset(slots), f)

    def exists_unprimed(self, f: int) -> int:
        return self.kernel.exists_parity(0, f)

    def exists_primed(self, f: int) -> int:
        return self.kernel.exists_parity(1, f)

    def rename_unprimed_to_primed(self, f: int) -> int:
        return self.kernel.shift(1, f)

    def rename_primed_to_unprimed(self, f: int) -> int:
        return self.kernel.shift(-1, f)

    # -- inspection --------------------------------------------------------

    def node(self, f: int) -> tuple[int, int, int]:
        k = self.kernel
        return k.level_of(f), k.low_of(f), k.high_of(f)

    def support_levels(self, f: int) -> frozenset:
        out = set()
        k = self.kernel
        seen = set()
        stack = [f]
        while stack:
            g = stack.pop()
            if g < 2 or g in seen:
                continue
            seen.add(g)
            out.add(k.level_of(g))
            stack.append(k.low_of(g))
            stack.append(k.high_of(g))
        return frozenset(out)

    def _check_unprimed(self, f: int):
        for lvl in self.support_levels(f):
            if lvl % 2:
                raise ValueError("diagram references primed slots")

    # -- state-level operations --------------------------------------------

    def count_states(self, f: int, n: int | None = None) -> int:
        """Number of satisfying states over the n unprimed model variables."""
        if n is None:
            n = self.n
        self._check_unprimed(f)
        k = self.kernel

        def vidx(g: int) -> int:
            lvl = k.level_of(g)
            return n if g < 2 else lvl // 2

        memo: dict[int, int] = {0: 0, 1: 1}

        def rec(g: int) -> int:
            cached = memo.get(g)
            if cached is not None:
                return cached
            i = vidx(g)
            lo, hi = k.low_of(g), k.high_of(g)
            res = (rec(lo) << (vidx(lo) - i - 1)) + (rec(hi) << (vidx(hi) - i - 1))
            memo[g] = res
            return res

        return rec(f) << vidx(f)

    def pick_min_state(self, f: int, n: int | None = None) -> str:
        """Lexicographically smallest satisfying state (0 < 1)."""
        if f == 0:
            raise ValueError("cannot pick a state from the empty set")
        if n is None:
            n = self.n
        self._check_unprimed(f)
        k = self.kernel
        bits = []
        cur = f
        for i in range(n):
            if cur >= 2 and k.level_of(cur) == 2 * i:
                lo = k.low_of(cur)
                if lo != 0:
                    bits.append("0")
                    cur = lo
                else:
                    bits.append("1")
                    cur = k.high_of(cur)
            else:
                bits.append("0")
        return "".join(bits)

    def eval_state(self, f: int, bits) -> int:
        """Membership test of a concrete state (unprimed diagram)."""
        k = self.kernel
        cur = f
        while cur >= 2:
            lvl = k.level_of(cur)
            cur = k.high_of(cur) if bits[lvl // 2] else k.low_of(cur)
        return cur

    def iter_states(self, f: int, n: int | None = None):
        """Yield satisfying states as bit strings, in lexicographic order."""
        if n is None:
            n = self.n
        self._check_unprimed(f)
        k = self.kernel

        def rec(g: int, i: int, prefix: list):
            if g == 0:
                return
            if i == n:
                yield "".join(prefix)
                return
            if g >= 2 and k.level_of(g) == 2 * i:
                lo, hi = k.low_of(g), k.high_of(g)
            else:
                lo = hi = g
            prefix.append("0")
            yield from rec(lo, i + 1, prefix)
            prefix[-1] = "1"
            yield from rec(hi, i + 1, prefix)
            prefix.pop()

        yield from rec(f, 0, [])


class StateSet:
    """A symbolic set of states over the unprimed model variables."""

    __slots__ = ("manager", "ref")

    def __init__(self, manager: DdManager, ref: int):
        self.manager = manager
        self.ref = ref

    def _coerce(self, other: "StateSet") -> int:
        if other.manager is not self.manager:
            raise ValueError("state sets belong to different managers")
        return other.ref

    def __and__(self, other: "StateSet") -> "StateSet":
        return StateSet(self.manager, self.manager.and_(self.ref, self._coerce(other)))

    def __or__(self, other: "StateSet") -> "StateSet":
        return StateSet(self.manager, self.manager.or_(self.ref, self._coerce(other)))

    def __sub__(self, other: "StateSet") -> "StateSet":
        return StateSet(self.manager, self.manager.diff(self.ref, self._coerce(other)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, StateSet)
                and other.manager is self.manager
                and other.ref == self.ref)

    def __hash__(self) -> int:
        return hash((id(self.manager), self.ref))

    def __le__(self, other: "StateSet") -> bool:
        return self.manager.diff(self.ref, self._coerce(other)) == 0

    def __bool__(self) -> bool:
        return self.ref != 0

    def is_empty(self) -> bool:
        return self.ref == 0

    def count(self) -> int:
        return self.manager.count_states(self.ref)

    def states(self) -> list[str]:
        return list(self.manager.iter_states(self.ref))

    def contains(self, state: str) -> bool:
        return bool(self.manager.eval_state(self.ref, [int(c) for c in state]))

    def pick_min(self) -> str:
        return self.manager.pick_min_state(self.ref)

    def __repr__(self) -> str:
        return f"StateSet(count={self.count()})"
