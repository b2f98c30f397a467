import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_canonical, random_hypergraph, shuffled
from hyperspec import (
    CapExceeded,
    Hypergraph,
    HypergraphError,
    canonical_form,
    d_family,
    d_prime_family,
    degrees,
    e3_family,
    f3_family,
    family,
    h4_family,
    is_connected,
    is_isomorphic,
    loose_path,
    parse,
    serialize,
)


def test_parse_loose_path():
    G = parse("3 5 2\n0 1 2\n2 3 4")
    assert G == Hypergraph(3, 5, ((0, 1, 2), (2, 3, 4)))


def test_parse_single_edge():
    G = parse("2 2 1\n0 1")
    assert (G.k, G.n, G.edges) == (2, 2, ((0, 1),))


@pytest.mark.parametrize(
    "text, msg",
    [
        ("3 5 2\n0 1 2\n0 1 2", "duplicate edge"),
        ("3 5\n0 1 2", "header"),
        ("x 5 1\n0 1 2", "header"),
        ("3 5 1\n0 1", "expected 3"),
        ("3 5 1\n0 1 1", "repeats"),
        ("3 3 1\n0 1 5", "out of range"),
        ("3 4 1\n0 1 2", "isolated"),
        ("3 5 3\n0 1 2\n2 3 4", "declares 3"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, msg):
    with pytest.raises(HypergraphError, match=msg):
        parse(text)


def test_parse_sorts_unsorted_input():
    assert parse("3 5 2\n4 3 2\n2 1 0") == loose_path(3, 2)


def test_serialize_exact_bytes():
    assert serialize(loose_path(3, 2)) == "3 5 2\n0 1 2\n2 3 4\n"


@pytest.mark.parametrize("spec", ["P:3,4", "D:2,5", "Dp:4,5", "E3:1,2,3", "G3:1,1,0,1,3", "H4:3", "C:3,4"])
def test_parse_serialize_roundtrip(spec):
    G = family(spec)
    assert parse(serialize(G)) == G


def test_from_edges_compacts_labels():
    G = Hypergraph.from_edges(3, [(10, 20, 30), (30, 40, 50)])
    assert G == loose_path(3, 2)


def test_constructor_rejects_unsorted_edges():
    with pytest.raises(HypergraphError):
        Hypergraph(3, 5, ((2, 3, 4), (0, 1, 2)))


def test_connectivity():
    assert is_connected(loose_path(3, 2))
    assert not is_connected(Hypergraph.from_edges(3, [(0, 1, 2), (3, 4, 5)]))
    assert is_connected(loose_path(5, 1))


def test_degrees():
    assert degrees(loose_path(3, 2)) == [1, 1, 2, 1, 1]
    assert degrees(loose_path(4, 1)) == [1, 1, 1, 1]
    # D_3^(3): u_1 = vertex 2 lies in all three edges
    G = d_family(3, 3)
    d = degrees(G)
    assert d[2] == 3 and sorted(d) == [1] * 6 + [3]


def test_canonical_relabel_invariance():
    rng = random.Random(1)
    for G in (d_prime_family(3, 5), h4_family(1), e3_family(1, 2, 2), f3_family(1, 1, 2)):
        cf = canonical_form(G)
        for _ in range(100):
            assert canonical_form(shuffled(G, rng)) == cf


def test_canonical_idempotent():
    G = d_prime_family(3, 4)
    cf = canonical_form(G)
    assert canonical_form(cf.hypergraph()) == cf


def test_dprime_matches_f3():
    assert canonical_form(f3_family(1, 1, 2)) == canonical_form(d_prime_family(3, 5))


def test_path_vs_d3():
    assert canonical_form(loose_path(3, 3)) != canonical_form(d_family(3, 3))
    assert not is_isomorphic(loose_path(3, 3), d_family(3, 3))


def test_h4_hand_built_matches_generator():
    # central edge, pendant edge at three of its vertices, one more at the fourth
    hand = parse("4 16 5\n0 1 2 3\n0 4 5 6\n1 7 8 9\n2 10 11 12\n3 13 14 15")
    assert is_isomorphic(hand, h4_family(1))


def test_canonical_cap():
    with pytest.raises(CapExceeded):
        canonical_form(loose_path(3, 10))
    assert canonical_form(loose_path(3, 10), max_n=21)


def test_canonical_agrees_with_brute_force():
    """Isomorphism via canonical forms matches exhaustive permutation search."""
    rng = random.Random(7)
    graphs = []
    for _ in range(60):
        k = rng.choice([2, 3])
        graphs.append(random_hypergraph(rng, k, rng.randint(k + 1, 6), rng.randint(2, 4)))
    brute = {G: brute_canonical(G) for G in graphs}
    for G in graphs:
        for H in graphs:
            if G.k != H.k or G.n != H.n:
                continue
            assert (canonical_form(G) == canonical_form(H)) == (brute[G] == brute[H])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3, 4]))
def test_degree_multiset_and_connectivity_invariant(seed, k):
    rng = random.Random(seed)
    G = random_hypergraph(rng, k, k + 4, 4)
    H = shuffled(G, rng)
    assert sorted(degrees(G)) == sorted(degrees(H))
    assert is_connected(G) == is_connected(H)
    assert canonical_form(G) == canonical_form(H)
