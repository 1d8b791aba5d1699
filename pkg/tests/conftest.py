import sys
import random

import networkx as nx
import pytest
from hypothesis import settings

from rectlay.families import harness_seed, random_planar_graph
from rectlay.graph import Graph

settings.register_profile("rectlay", max_examples=40, deadline=None)
settings.load_profile("rectlay")


@pytest.fixture
def rng():
    return random.Random(harness_seed())


def from_nx(G) -> Graph:
    G = nx.convert_node_labels_to_integers(G)
    return Graph(G.number_of_nodes(), G.edges())


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graphs(count, lo, hi, seed_offset=0):
    r = random.Random(harness_seed() + seed_offset)
    return [random_planar_graph(r.randrange(lo, hi), r, r.uniform(0.0, 0.6)) for _ in range(count)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
