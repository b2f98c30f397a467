import itertools
import random

import pytest

from hyperspec import Hypergraph

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def brute_canonical(G: Hypergraph):
    """Minimal sorted edge list over every vertex permutation; only for tiny n."""
    best = None
    for perm in itertools.permutations(range(G.n)):
        code = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in G.edges))
        if best is None or code < best:
            best = code
    return best


def random_hypergraph(rng: random.Random, k: int, n: int, m: int) -> Hypergraph:
    """Random k-uniform hypergraph on at most n vertices with up to m distinct edges."""
    edges = set()
    for _ in range(m):
        edges.add(tuple(sorted(rng.sample(range(n), k))))
    return Hypergraph.from_edges(k, edges)


def shuffled(G: Hypergraph, rng: random.Random) -> Hypergraph:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return G.relabel(perm)
