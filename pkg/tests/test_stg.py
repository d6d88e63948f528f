import random

import pytest

from basinscope.model import parse_bnet
from basinscope.stg import UpdateMode, build, steady_states
from oracle import explicit_stg, random_network


def relation_pairs(ts):
    """Explicit (x, y) pairs of the symbolic relation, via singleton images."""
    pairs = set()
    for s in ts.space().states():
        for t in ts.image(ts.state_set([s])).states():
            pairs.add((s, t))
    return pairs


def test_toggle_async_relation(toggle_ts):
    assert relation_pairs(toggle_ts) == {
        ("00", "10"), ("00", "01"), ("11", "01"), ("11", "10"),
        ("01", "01"), ("10", "10")}


def test_toggle_sync_relation(toggle_net):
    ts = build(toggle_net, UpdateMode.SYNC)
    assert relation_pairs(ts) == {
        ("00", "11"), ("11", "00"), ("01", "01"), ("10", "10")}


def test_identity_update_self_loops():
    ts = build(parse_bnet("a, a"))
    assert relation_pairs(ts) == {("0", "0"), ("1", "1")}


def test_image_preimage_toggle(toggle_ts):
    assert toggle_ts.image(toggle_ts.state_set(["00"])).states() == ["01", "10"]
    assert toggle_ts.preimage(toggle_ts.state_set(["10"])).states() == \
        ["00", "10", "11"]
    assert toggle_ts.image(toggle_ts.empty()).is_empty()


def test_reachability_toggle(toggle_ts):
    fwd = toggle_ts.forward_reach(toggle_ts.state_set(["00"]))
    assert set(fwd.states()) == {"00", "01", "10"}
    bwd = toggle_ts.backward_reach(toggle_ts.state_set(["01"]))
    assert set(bwd.states()) == {"00", "01", "11"}


def test_forward_reach_reflexive(toggle_ts):
    x = toggle_ts.state_set(["01"])
    assert x <= toggle_ts.forward_reach(x)


def test_totality(toggle_ts):
    assert toggle_ts.preimage(toggle_ts.space()) == toggle_ts.space()


def test_steady_states_examples(toggle_ts, chain_ts, repressilator_ts):
    assert set(steady_states(toggle_ts).states()) == {"01", "10"}
    assert set(steady_states(chain_ts).states()) == {"00", "10", "11"}
    assert steady_states(repressilator_ts).is_empty()


def test_admissibility_restricts_space():
    net = parse_bnet("x_medium, x_high\nx_high, x_medium")
    from basinscope.model import detect_van_ham_pairs
    ts = build(detect_van_ham_pairs(net))
    assert ts.space_size() == 3
    assert not ts.space().contains("01")
    # relation stays total on the restricted space
    assert ts.preimage(ts.space()) == ts.space()


@pytest.mark.parametrize("mode", ["async", "sync"])
def test_relation_matches_explicit_construction(mode):
    rng = random.Random(2024)
    for _ in range(25):
        n = rng.randrange(2, 7)
        net = random_network(rng, n)
        ts = build(net, UpdateMode.ASYNC if mode == "async" else UpdateMode.SYNC)
        adj = explicit_stg(net, mode)
        assert relation_pairs(ts) == {
            (s, t) for s, succ in adj.items() for t in succ}


def test_duality_image_preimage():
    rng = random.Random(99)
    for _ in range(10):
        net = random_network(rng, 5)
        ts = build(net)
        states = ts.space().states()
        for _ in range(10):
            xs = rng.sample(states, rng.randrange(1, 8))
            ys = rng.sample(states, rng.randrange(1, 8))
            x, y = ts.state_set(xs), ts.state_set(ys)
            assert ((ts.image(x) & y).is_empty()
                    == (x & ts.preimage(y)).is_empty())
