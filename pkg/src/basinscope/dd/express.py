"""Boolean-expression export of symbolic state sets.

Three styles: one DNF term per state, a nested factored form mirroring the
diagram structure, and an irredundant sum-of-products computed by the
Minato-Morreale interval recursion.
"""

from __future__ import annotations

import enum

from ..model import BoolExpr, Const, Not, Var, make_and, make_or
from .manager import OP_AND, OP_DIFF, OP_OR, DdManager


class ExprStyle(enum.Enum):
    DNF_STATES = "dnf"
    FACTORED = "factored"
    ISOP = "isop"


DEFAULT_DNF_LIMIT = 4096


def to_expression(m: DdManager, f: int, style: ExprStyle = ExprStyle.ISOP,
                  dnf_limit: int = DEFAULT_DNF_LIMIT) -> BoolExpr:
    """Export an unprimed diagram as a Boolean expression of the given style."""
    m._check_unprimed(f)
    if style is ExprStyle.DNF_STATES:
        return dnf_states(m, f, dnf_limit)
    if style is ExprStyle.FACTORED:
        return factored(m, f)
    if style is ExprStyle.ISOP:
        return isop_expression(m, f)
    raise ValueError(f"unknown expression style {style!r}")


def dnf_states(m: DdManager, f: int, limit: int = DEFAULT_DNF_LIMIT) -> BoolExpr:
    """One conjunctive term per satisfying state."""
    count = m.count_states(f)
    if count > limit:
        raise ValueError(
            f"state-count {count} exceeds the DNF-per-state limit {limit}")
    terms = []
    for s in m.iter_states(f):
        lits = [Var(i) if c == "1" else Not(Var(i)) for i, c in enumerate(s)]
        terms.append(make_and(lits))
    return make_or(terms)


def factored(m: DdManager, f: int) -> BoolExpr:
    """Nested expression mirroring the diagram: (v & high) | (!v & low)."""
    memo: dict[int, BoolExpr] = {0: Const(0), 1: Const(1)}

    def rec(g: int) -> BoolExpr:
        cached = memo.get(g)
        if cached is not None:
            return cached
        lvl, lo, hi = m.node(g)
        v = Var(lvl // 2)
        hi_e = rec(hi)
        lo_e = rec(lo)
        terms = []
        if hi != 0:
            terms.append(v if hi == 1 else make_and([v, hi_e]))
        if lo != 0:
            terms.append(Not(v) if lo == 1 else make_and([Not(v), lo_e]))
        res = make_or(terms)
        memo[g] = res
        return res

    return rec(f)


def isop_cover(m: DdManager, f: int) -> list[dict[int, int]]:
    """Irredundant sum-of-products cover as a list of cubes (var -> 0/1)."""
    cubes, cover_ref = _isop(m, f, f, {})
    assert cover_ref == f, "internal error: cover does not reproduce the set"
    return cubes


def isop_expression(m: DdManager, f: int) -> BoolExpr:
    terms = []
    for cube in isop_cover(m, f):
        lits = [Var(i) if val else Not(Var(i))
                for i, val in sorted(cube.items())]
        terms.append(make_and(lits))
    return make_or(terms)


def _cofactors(m: DdManager, g: int, lvl: int) -> tuple[int, int]:
    if g < 2:
        return g, g
    glvl, lo, hi = m.node(g)
    if glvl == lvl:
        return lo, hi
    return g, g


def _isop(m: DdManager, L: int, U: int, memo) -> tuple[list, int]:
    """Cover of any set between lower bound L and upper bound U."""
    if L == 0:
        return [], 0
    if U == 1:
        return [{}], 1
    key = (L, U)
    cached = memo.get(key)
    if cached is not None:
        return cached
    lvl = min(m.node(L)[0] if L >= 2 else m.kernel.num_levels,
              m.node(U)[0] if U >= 2 else m.kernel.num_levels)
    v = lvl // 2
    L0, L1 = _cofactors(m, L, lvl)
    U0, U1 = _cofactors(m, U, lvl)
    # cubes that must carry the negative / positive literal of v
    c0, C0 = _isop(m, m.apply(OP_DIFF, L0, U1), U0, memo)
    c1, C1 = _isop(m, m.apply(OP_DIFF, L1, U0), U1, memo)
    # remainder coverable without referencing v
    Lrem = m.apply(OP_OR, m.apply(OP_DIFF, L0, C0), m.apply(OP_DIFF, L1, C1))
    Urem = m.apply(OP_AND, U0, U1)
    cd, Cd = _isop(m, Lrem, Urem, memo)
    cubes = ([{v: 0, **c} for c in c0]
             + [{v: 1, **c} for c in c1]
             + cd)
    ref = m.kernel.mk(lvl, m.apply(OP_OR, C0, Cd), m.apply(OP_OR, C1, Cd))
    memo[key] = (cubes, ref)
    return cubes, ref
