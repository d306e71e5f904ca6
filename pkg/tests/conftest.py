import random
from pathlib import Path

import pytest

from jsbaf import AF, JSBAF, SourceDocument, base, construct_arguments, parse_system

TANDEM_PATH = Path(__file__).resolve().parents[1] / "demos" / "tandem.rules"


@pytest.fixture(scope="session")
def tandem_system():
    return parse_system(SourceDocument(TANDEM_PATH.read_text(), str(TANDEM_PATH)))


@pytest.fixture(scope="session")
def tandem_store(tandem_system):
    return construct_arguments(tandem_system)


def node_labels(extension):
    return sorted(n.label for n in extension)


def labelled_extensions(extensions_list):
    return [node_labels(e) for e in extensions_list]


@pytest.fixture
def j1():
    """a and b jointly support c; d attacks c."""
    a, b, c, d = base("a"), base("b"), base("c"), base("d")
    return JSBAF({a, b, c, d}, {(d, c)}, {(frozenset({a, b}), c)})


@pytest.fixture
def j2():
    """a supports b, nothing else."""
    a, b = base("a"), base("b")
    return JSBAF({a, b}, set(), {(frozenset({a}), b)})


@pytest.fixture
def j3():
    """a, b, c jointly support d."""
    a, b, c, d = base("a"), base("b"), base("c"), base("d")
    return JSBAF({a, b, c, d}, set(), {(frozenset({a, b, c}), d)})


def random_af(seed: int, max_nodes: int, attack_prob: float) -> AF:
    rng = random.Random(seed)
    n = rng.randint(1, max_nodes)
    nodes = [base(f"n{i}") for i in range(1, n + 1)]
    attacks = {(a, b) for a in nodes for b in nodes if rng.random() < attack_prob}
    return AF(frozenset(nodes), frozenset(attacks))
