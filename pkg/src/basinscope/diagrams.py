"""Commitment sets, phenotypes, quotient diagrams, and walk-based
phenotype reachability estimation."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .attractors import Attractor
from .basins import strong_basin, weak_basin
from .dd import OP_AND, OP_DIFF, StateSet
from .model import eval_expr
from .stg import TransitionSystem, UpdateMode


class DiagramError(RuntimeError):
    """Internal inconsistency between the two commitment-set computations."""


@dataclass(frozen=True)
class DiagramNode:
    key: tuple[int, ...]
    states: StateSet
    size: int
    percent: float


@dataclass
class Diagram:
    """Quotient graph keyed by attractor-index or phenotype-index subsets."""

    nodes: dict[tuple[int, ...], DiagramNode]
    edges: set[tuple[tuple[int, ...], tuple[int, ...]]]
    partial: bool = False

    def sorted_keys(self) -> list[tuple[int, ...]]:
        return sorted(self.nodes, key=lambda k: (len(k), k))


# ---------------------------------------------------------------------------
# quotient construction, shared by commitment and phenotype diagrams


def _refine_by_weak_basins(ts: TransitionSystem, weak: dict[int, StateSet]):
    """Split the space into blocks of equal weak-basin membership signature."""
    blocks: list[tuple[int, tuple[int, ...]]] = [(ts.space_ref, ())]
    m = ts.manager
    for i in sorted(weak):
        w = weak[i].ref
        new = []
        for ref, key in blocks:
            inside = m.apply(OP_AND, ref, w)
            outside = m.apply(OP_DIFF, ref, w)
            if inside != 0:
                new.append((inside, key + (i,)))
            if outside != 0:
                new.append((outside, key))
        blocks = new
    return blocks


def _quotient_nodes(ts: TransitionSystem, units: dict[int, StateSet],
                    partial: bool) -> dict[tuple[int, ...], DiagramNode]:
    """Nodes of the quotient graph for units (attractors or phenotypes),
    each given by its set of representative states.

    Every realized index subset I is computed both as the weak-basin
    partition block and via the conjunction of the member weak basins with
    the strong basin of the united representatives; the two must agree
    whenever the unit list is complete.
    """
    m = ts.manager
    total = ts.space_size()
    weak = {i: weak_basin(ts, reps) for i, reps in units.items()}
    nodes: dict[tuple[int, ...], DiagramNode] = {}
    for block_ref, key in _refine_by_weak_basins(ts, weak):
        if not key:
            if partial:
                continue
            raise DiagramError(
                "states outside every weak basin despite a complete unit list")
        reps_union = 0
        for i in key:
            reps_union = m.or_(reps_union, units[i].ref)
        delta = ts.space_ref
        for i in key:
            delta = m.and_(delta, weak[i].ref)
        delta = m.and_(delta, strong_basin(ts, ts.set_of(reps_union)).ref)
        if partial:
            if delta == 0:
                continue
            states = ts.set_of(delta)
        else:
            if delta != block_ref:
                raise DiagramError(
                    f"commitment-set mismatch for index set {key}")
            states = ts.set_of(block_ref)
        size = states.count()
        nodes[key] = DiagramNode(key, states, size,
                                 100.0 * size / total if total else 0.0)
    return nodes


def _quotient_edges(ts: TransitionSystem,
                    nodes: dict[tuple[int, ...], DiagramNode]):
    """Edges of the quotient graph; an edge (I, J) needs J a proper subset
    of I and a direct transition between the blocks."""
    m = ts.manager
    edges = set()
    keys = sorted(nodes, key=lambda k: (len(k), k))
    for j_key in keys:
        j_set = set(j_key)
        pre = None
        for i_key in keys:
            if i_key == j_key or not j_set < set(i_key):
                continue
            if pre is None:
                pre = ts.preimage_ref(nodes[j_key].states.ref)
            if m.apply(OP_AND, pre, nodes[i_key].states.ref) != 0:
                edges.add((i_key, j_key))
    return edges


# ---------------------------------------------------------------------------
# commitment diagrams


def commitment_sets(ts: TransitionSystem, attrs: list[Attractor],
                    partial: bool = False) -> Diagram:
    units = {a.index: ts.state_set([a.representative]) for a in attrs}
    nodes = _quotient_nodes(ts, units, partial)
    return Diagram(nodes, set(), partial)


def commitment_edges(ts: TransitionSystem, diagram: Diagram) -> Diagram:
    diagram.edges = _quotient_edges(ts, diagram.nodes)
    return diagram


def commitment_diagram(ts: TransitionSystem, attrs: list[Attractor],
                       partial: bool = False) -> Diagram:
    return commitment_edges(ts, commitment_sets(ts, attrs, partial))


# ---------------------------------------------------------------------------
# phenotypes


@dataclass(frozen=True)
class Phenotype:
    """Long-term marker pattern over {0, 1, *} shared by a group of
    attractors."""

    index: int  # 1-based, in pattern order (0 < 1 < *)
    markers: tuple[str, ...]
    pattern: str
    attractor_indices: tuple[int, ...]


def phenotype_of(ts: TransitionSystem, attractor: Attractor,
                 markers: list[str]) -> str:
    """Pattern of one attractor: 0/1 if the marker is constant over all
    attractor states, * if it oscillates."""
    if not markers:
        raise ValueError("marker set must be non-empty")
    m = ts.manager
    ref = attractor.states.ref
    out = []
    for name in markers:
        idx = ts.net.variables.index_of(name)
        if idx is None:
            raise ValueError(f"unknown marker {name!r}")
        v = m.var(idx)
        if m.and_(ref, v) == ref:
            out.append("1")
        elif m.and_(ref, m.not_(v)) == ref:
            out.append("0")
        else:
            out.append("*")
    return "".join(out)


_PATTERN_ORDER = {"0": 0, "1": 1, "*": 2}


def compute_phenotypes(ts: TransitionSystem, attrs: list[Attractor],
                       markers: list[str]) -> list[Phenotype]:
    """Group attractors by marker pattern; indices follow pattern order."""
    groups: dict[str, list[int]] = {}
    for a in attrs:
        groups.setdefault(phenotype_of(ts, a, markers), []).append(a.index)
    ordered = sorted(groups, key=lambda p: [_PATTERN_ORDER[c] for c in p])
    return [Phenotype(i, tuple(markers), pattern, tuple(sorted(groups[pattern])))
            for i, pattern in enumerate(ordered, start=1)]


def phenotype_sets(ts: TransitionSystem, attrs: list[Attractor],
                   phenotypes: list[Phenotype],
                   partial: bool = False) -> Diagram:
    by_index = {a.index: a for a in attrs}
    units = {}
    for p in phenotypes:
        units[p.index] = ts.state_set(
            [by_index[i].representative for i in p.attractor_indices])
    nodes = _quotient_nodes(ts, units, partial)
    return Diagram(nodes, set(), partial)


def phenotype_diagram(ts: TransitionSystem, attrs: list[Attractor],
                      phenotypes: list[Phenotype],
                      partial: bool = False) -> Diagram:
    return commitment_edges(ts, phenotype_sets(ts, attrs, phenotypes, partial))


# ---------------------------------------------------------------------------
# JSON schema


def diagram_to_json(diagram: Diagram, expressions: dict | None = None) -> dict:
    nodes = []
    for key in diagram.sorted_keys():
        node = diagram.nodes[key]
        entry = {
            "key": list(key),
            "size": node.size,
            "percent": round(node.percent, 6),
        }
        if expressions is not None:
            entry["expression"] = expressions.get(key, "")
        nodes.append(entry)
    edges = sorted(diagram.edges, key=lambda e: (len(e[0]), e[0], len(e[1]), e[1]))
    return {
        "nodes": nodes,
        "edges": [[list(i), list(j)] for i, j in edges],
        "partial": diagram.partial,
    }


# ---------------------------------------------------------------------------
# trajectory-based phenotype reachability


@dataclass
class SimulationResult:
    """Walk frequencies per phenotype index; frequencies sum to 1 over the
    completed (non-capped) walks."""

    frequencies: dict[int, float]
    walks: int
    capped: int = 0
    pattern_by_index: dict[int, str] = field(default_factory=dict)


def simulate_phenotype_reachability(
        ts: TransitionSystem, phenotypes: list[Phenotype],
        attrs: list[Attractor], walks: int, rng_seed: int) -> SimulationResult:
    """Estimate phenotype reachability by uniform random walks.

    Each walk starts from a uniformly random admissible state and takes
    uniformly random admissible transitions until it enters some attractor;
    the phenotype of that attractor is recorded.  Walk length is capped;
    capped walks are excluded from the frequencies and counted separately.
    Deterministic for a fixed seed, independent of merge order, because
    every walk derives its own generator from (seed, walk index).
    """
    if walks < 1:
        raise ValueError("need at least one walk")
    m = ts.manager
    n = ts.n
    updates = ts.net.updates
    space_ref = ts.space_ref
    phenotype_of_attr = {}
    for p in phenotypes:
        for ai in p.attractor_indices:
            phenotype_of_attr[ai] = p.index
    attractor_refs = [(a.index, a.states.ref) for a in attrs]
    cap = 64 * (1 << min(n, 20))
    counts: dict[int, int] = {p.index: 0 for p in phenotypes}
    capped = 0

    def in_attractor(bits) -> int | None:
        for idx, ref in attractor_refs:
            if m.eval_state(ref, bits):
                return idx
        return None

    sync = ts.mode is UpdateMode.SYNC
    for w in range(walks):
        rng = random.Random(f"{rng_seed}:{w}")
        # uniform admissible start state by rejection
        while True:
            bits = [rng.randrange(2) for _ in range(n)]
            if m.eval_state(space_ref, bits):
                break
        steps = 0
        hit = None
        while True:
            hit = in_attractor(bits)
            if hit is not None or steps >= cap:
                break
            fx = [eval_expr(u, bits) for u in updates]
            if sync:
                succs = [fx] if m.eval_state(space_ref, fx) else []
            else:
                succs = []
                for i in range(n):
                    if fx[i] != bits[i]:
                        y = list(bits)
                        y[i] = fx[i]
                        if m.eval_state(space_ref, y):
                            succs.append(y)
            if not succs:
                # totalized self-loop; no attractor membership means the
                # unit list is partial -- treat as a capped walk
                steps = cap
                continue
            bits = succs[rng.randrange(len(succs))]
            steps += 1
        if hit is None:
            capped += 1
        else:
            counts[phenotype_of_attr[hit]] += 1
    done = walks - capped
    freqs = {i: (c / done if done else 0.0) for i, c in counts.items()}
    return SimulationResult(freqs, walks, capped,
                            {p.index: p.pattern for p in phenotypes})
