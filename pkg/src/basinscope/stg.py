"""Symbolic state transition graph: relation construction and reachability."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .dd import OP_AND, OP_DIFF, OP_OR, OP_XOR, DdManager, StateSet
from .model import BooleanNetwork


class UpdateMode(enum.Enum):
    ASYNC = "async"
    SYNC = "sync"


@dataclass
class TransitionSystem:
    """Transition relation over unprimed/primed slot pairs, restricted to
    the admissible state space and totalized by self-loops."""

    manager: DdManager
    net: BooleanNetwork
    mode: UpdateMode
    relation: int
    space_ref: int
    n: int
    _preimage_cache: dict = field(default_factory=dict, repr=False)

    # -- set plumbing ------------------------------------------------------

    def set_of(self, ref: int) -> StateSet:
        return StateSet(self.manager, ref)

    def space(self) -> StateSet:
        return self.set_of(self.space_ref)

    def empty(self) -> StateSet:
        return self.set_of(0)

    def state_set(self, states) -> StateSet:
        """StateSet from an iterable of bit strings."""
        return self.set_of(self.manager.from_states(states))

    def space_size(self) -> int:
        return self.manager.count_states(self.space_ref)

    # -- image and preimage ------------------------------------------------

    def image_ref(self, x: int) -> int:
        m = self.manager
        prod = m.apply(OP_AND, self.relation, x)
        return m.rename_primed_to_unprimed(m.exists_unprimed(prod))

    def preimage_ref(self, x: int) -> int:
        cached = self._preimage_cache.get(x)
        if cached is not None:
            return cached
        m = self.manager
        xp = m.rename_unprimed_to_primed(x)
        res = m.exists_primed(m.apply(OP_AND, self.relation, xp))
        self._preimage_cache[x] = res
        return res

    def image(self, x: StateSet) -> StateSet:
        return self.set_of(self.image_ref(x.ref))

    def preimage(self, x: StateSet) -> StateSet:
        return self.set_of(self.preimage_ref(x.ref))

    # -- reachability closures ---------------------------------------------

    def forward_reach_ref(self, x: int) -> int:
        m = self.manager
        reached = x
        frontier = x
        while frontier != 0:
            new = m.apply(OP_DIFF, self.image_ref(frontier), reached)
            reached = m.apply(OP_OR, reached, new)
            frontier = new
        return reached

    def backward_reach_ref(self, x: int) -> int:
        m = self.manager
        reached = x
        frontier = x
        while frontier != 0:
            new = m.apply(OP_DIFF, self.preimage_ref(frontier), reached)
            reached = m.apply(OP_OR, reached, new)
            frontier = new
        return reached

    def forward_reach(self, x: StateSet) -> StateSet:
        return self.set_of(self.forward_reach_ref(x.ref))

    def backward_reach(self, x: StateSet) -> StateSet:
        return self.set_of(self.backward_reach_ref(x.ref))


def steady_states_ref(m: DdManager, net: BooleanNetwork, space: int) -> int:
    """States with f(x) = x, within the admissible space."""
    acc = space
    for i, upd in enumerate(net.updates):
        fi = m.compile_expr(upd)
        eq = m.not_(m.apply(OP_XOR, m.var(i), fi))
        acc = m.apply(OP_AND, acc, eq)
    return acc


def build(net: BooleanNetwork, mode: UpdateMode = UpdateMode.ASYNC,
          node_limit: int | None = None) -> TransitionSystem:
    """Build the symbolic STG for the given update mode.

    ASYNC: x -> y iff exactly one variable changes to its update value.
    SYNC: y = f(x).  Steady states self-loop in both modes, and any state
    left without an admissible successor by the admissibility restriction
    self-loops as well, so the relation is total on the space.
    """
    n = net.n
    m = DdManager(n, node_limit)
    space = (1 if net.admissibility is None
             else m.compile_expr(net.admissibility))

    f_refs = [m.compile_expr(upd) for upd in net.updates]
    same = [m.not_(m.apply(OP_XOR, m.var_primed(i), m.var(i)))
            for i in range(n)]
    upd_eq = [m.not_(m.apply(OP_XOR, m.var_primed(i), f_refs[i]))
              for i in range(n)]

    identity = 1
    for s in same:
        identity = m.apply(OP_AND, identity, s)

    if mode is UpdateMode.SYNC:
        relation = 1
        for u in upd_eq:
            relation = m.apply(OP_AND, relation, u)
    else:
        # prefix/suffix products of the frame conditions same_j, j != i
        prefix = [1] * (n + 1)
        for i in range(n):
            prefix[i + 1] = m.apply(OP_AND, prefix[i], same[i])
        suffix = [1] * (n + 1)
        for i in reversed(range(n)):
            suffix[i] = m.apply(OP_AND, suffix[i + 1], same[i])
        relation = 0
        for i in range(n):
            flip = m.apply(OP_AND, upd_eq[i], m.not_(same[i]))
            frame = m.apply(OP_AND, prefix[i], suffix[i + 1])
            relation = m.apply(OP_OR, relation, m.apply(OP_AND, flip, frame))
        steady = steady_states_ref(m, net, 1)
        relation = m.apply(OP_OR, relation, m.apply(OP_AND, steady, identity))

    space_primed = space if space == 1 else m.rename_unprimed_to_primed(space)
    relation = m.apply(OP_AND, relation, m.apply(OP_AND, space, space_primed))

    # totalize: states stranded by the admissibility restriction self-loop
    has_succ = m.exists_primed(relation)
    deadlocks = m.apply(OP_DIFF, space, has_succ)
    if deadlocks != 0:
        relation = m.apply(OP_OR, relation, m.apply(OP_AND, deadlocks, identity))

    return TransitionSystem(m, net, mode, relation, space, n)


def steady_states(ts: TransitionSystem) -> StateSet:
    """Exactly the admissible states with f(x) = x."""
    return ts.set_of(steady_states_ref(ts.manager, ts.net, ts.space_ref))
