"""Attractor detection: steady states, terminal SCCs, and imports."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .dd import OP_AND, OP_DIFF, StateSet
from .model import Not, Var, make_and
from .stg import TransitionSystem, steady_states as _steady


class AttractorKind(enum.Enum):
    STEADY = "steady"
    CYCLIC = "cyclic"


class AttractorError(ValueError):
    pass


@dataclass(frozen=True)
class Attractor:
    """A terminal strongly connected state set with canonical representative."""

    index: int  # 1-based, assigned in canonical order
    states: StateSet
    representative: str
    kind: AttractorKind
    unverified: bool = False

    def size(self) -> int:
        return self.states.count()


def steady_states(ts: TransitionSystem) -> StateSet:
    return _steady(ts)


def attractors(ts: TransitionSystem) -> list[Attractor]:
    """All terminal SCCs of the STG restricted to the admissible space.

    Pivot-based symbolic search: compute the SCC of the minimal candidate
    state; if it has no escaping transition it is an attractor and its whole
    backward closure is removed from the candidates, otherwise only the SCC
    is removed and the next pivot is preferred among its forward escape.
    """
    m = ts.manager
    candidates = ts.space_ref
    preferred = 0
    found: list[int] = []
    while candidates != 0:
        pool = m.apply(OP_AND, preferred, candidates)
        if pool == 0:
            pool = candidates
        pivot = m.from_states([m.pick_min_state(pool)])
        fwd = ts.forward_reach_ref(pivot)
        scc = m.apply(OP_AND, ts.backward_reach_ref(pivot), fwd)
        escape = m.apply(OP_DIFF, ts.image_ref(scc), scc)
        if escape == 0:
            found.append(scc)
            candidates = m.apply(
                OP_DIFF, candidates, ts.backward_reach_ref(scc))
            preferred = 0
        else:
            candidates = m.apply(OP_DIFF, candidates, scc)
            preferred = m.apply(OP_AND, m.apply(OP_DIFF, fwd, scc), candidates)
    reps = [(m.pick_min_state(ref), ref) for ref in found]
    reps.sort(key=lambda item: item[0])
    result = []
    for i, (rep, ref) in enumerate(reps, start=1):
        states = ts.set_of(ref)
        kind = (AttractorKind.STEADY if states.count() == 1
                else AttractorKind.CYCLIC)
        result.append(Attractor(i, states, rep, kind))
    return result


def _subspace_ref(ts: TransitionSystem, pattern: dict) -> int:
    """Diagram of a partial assignment {variable name: 0/1}."""
    lits = []
    for name, value in pattern.items():
        idx = ts.net.variables.index_of(name)
        if idx is None:
            raise AttractorError(f"unknown variable {name!r} in subspace pattern")
        if value not in (0, 1):
            raise AttractorError(f"subspace value for {name!r} must be 0 or 1")
        lits.append(Var(idx) if value else Not(Var(idx)))
    ref = ts.manager.compile_expr(make_and(lits))
    return ts.manager.apply(OP_AND, ts.space_ref, ref)


def import_attractors(ts: TransitionSystem, seeds) -> list[Attractor]:
    """Build attractors from externally supplied seeds.

    A bit-string seed names a state whose SCC is computed and verified
    terminal.  A dict seed is a subspace pattern used as an unverified
    representative set (trap-space mode).
    """
    m = ts.manager
    entries = []
    for seed in seeds:
        if isinstance(seed, str):
            if len(seed) != ts.n or any(c not in "01" for c in seed):
                raise AttractorError(f"bad state seed {seed!r}")
            pivot = m.from_states([seed])
            if m.apply(OP_AND, pivot, ts.space_ref) == 0:
                raise AttractorError(f"seed {seed!r} lies outside the space")
            fwd = ts.forward_reach_ref(pivot)
            scc = m.apply(OP_AND, ts.backward_reach_ref(pivot), fwd)
            escape = m.apply(OP_DIFF, ts.image_ref(scc), scc)
            if escape != 0:
                y = m.pick_min_state(escape)
                src = m.apply(OP_AND, ts.preimage_ref(m.from_states([y])), scc)
                x = m.pick_min_state(src)
                raise AttractorError(
                    f"seed {seed!r}: SCC is not terminal, "
                    f"escaping transition {x} -> {y}")
            entries.append((scc, False))
        elif isinstance(seed, dict):
            ref = _subspace_ref(ts, seed)
            if ref == 0:
                raise AttractorError(
                    f"subspace pattern {seed!r} is empty within the space")
            entries.append((ref, True))
        else:
            raise AttractorError(f"unsupported seed {seed!r}")
    keyed = [(m.pick_min_state(ref), ref, unverified)
             for ref, unverified in entries]
    keyed.sort(key=lambda item: item[0])
    result = []
    for i, (rep, ref, unverified) in enumerate(keyed, start=1):
        states = ts.set_of(ref)
        kind = (AttractorKind.STEADY if states.count() == 1
                else AttractorKind.CYCLIC)
        result.append(Attractor(i, states, rep, kind, unverified=unverified))
    return result


def load_attractor_seeds(text: str) -> list:
    """Parse the attractor import file: a JSON list of bit strings and/or
    partial-assignment objects."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise AttractorError("attractor file must contain a JSON list")
    for entry in data:
        if not isinstance(entry, (str, dict)):
            raise AttractorError(f"unsupported attractor entry {entry!r}")
    return data
