import pytest

from basinscope.model import parse_bnet
from basinscope.stg import UpdateMode, build

TOGGLE = "a, !b\nb, !a\n"
CHAIN = "a, a\nb, a & b\n"
REPRESSILATOR = "a, !c\nb, a\nc, b\n"


@pytest.fixture
def toggle_net():
    return parse_bnet(TOGGLE)


@pytest.fixture
def toggle_ts(toggle_net):
    return build(toggle_net, UpdateMode.ASYNC)


@pytest.fixture
def chain_net():
    return parse_bnet(CHAIN)


@pytest.fixture
def chain_ts(chain_net):
    return build(chain_net, UpdateMode.ASYNC)


@pytest.fixture
def repressilator_ts():
    return build(parse_bnet(REPRESSILATOR), UpdateMode.ASYNC)
