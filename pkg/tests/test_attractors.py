import random

import pytest

from basinscope.attractors import (
    AttractorError, AttractorKind, attractors, import_attractors,
    load_attractor_seeds, steady_states)
from basinscope.ctl import EF, accept_ref, atom_states
from basinscope.stg import build
from oracle import explicit_stg, random_network, terminal_sccs


def test_toggle_attractors(toggle_ts):
    attrs = attractors(toggle_ts)
    assert [(a.index, a.representative, a.kind) for a in attrs] == [
        (1, "01", AttractorKind.STEADY), (2, "10", AttractorKind.STEADY)]


def test_repressilator_single_cyclic(repressilator_ts):
    attrs = attractors(repressilator_ts)
    assert len(attrs) == 1
    assert attrs[0].kind is AttractorKind.CYCLIC
    assert steady_states(repressilator_ts).is_empty()


def test_chain_three_steady(chain_ts):
    attrs = attractors(chain_ts)
    assert len(attrs) == 3
    assert all(a.kind is AttractorKind.STEADY for a in attrs)
    assert [a.representative for a in attrs] == ["00", "10", "11"]


def test_steady_equals_union_of_steady_attractors(chain_ts):
    attrs = attractors(chain_ts)
    union = chain_ts.empty()
    for a in attrs:
        if a.kind is AttractorKind.STEADY:
            union = union | a.states
    assert union == steady_states(chain_ts)


def test_import_state_seed(toggle_ts):
    attrs = import_attractors(toggle_ts, ["10"])
    assert attrs[0].states.states() == ["10"]
    assert not attrs[0].unverified


def test_import_non_terminal_seed_rejected(toggle_ts):
    with pytest.raises(AttractorError, match="escaping transition"):
        import_attractors(toggle_ts, ["00"])


def test_import_subspace_pattern(toggle_ts):
    attrs = import_attractors(toggle_ts, [{"a": 1}])
    assert set(attrs[0].states.states()) == {"10", "11"}
    assert attrs[0].unverified
    assert attrs[0].kind is AttractorKind.CYCLIC


def test_load_attractor_seeds():
    seeds = load_attractor_seeds('["10", {"a": 1}]')
    assert seeds == ["10", {"a": 1}]
    with pytest.raises(AttractorError):
        load_attractor_seeds('{"a": 1}')


def test_determinism(toggle_ts):
    a1 = attractors(toggle_ts)
    a2 = attractors(toggle_ts)
    assert [(a.index, a.representative) for a in a1] == \
        [(a.index, a.representative) for a in a2]


def test_matches_tarjan_oracle_on_random_networks():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randrange(2, 8)
        net = random_network(rng, n)
        ts = build(net)
        expected = terminal_sccs(explicit_stg(net, "async"))
        attrs = attractors(ts)
        got = [sorted(a.states.states()) for a in attrs]
        assert got == expected
        # pairwise disjoint, representatives minimal
        for a in attrs:
            assert a.representative == min(a.states.states())
        # every state reaches some attractor
        union = ts.empty()
        for a in attrs:
            union = union | a.states
        reach = ts.set_of(accept_ref(ts, EF(atom_states(union))))
        assert reach == ts.space()
