"""Generators for the extremal hypergraph families.

Labels are assigned spine first, then legs, in a fixed order, so every
generator is byte-reproducible.  Family strings (``P:3,2``, ``Dp:3,4``,
``H4:2``, ...) are parsed by :func:`parse_family`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph, HypergraphError
from .transforms import attach_path


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise HypergraphError(msg)


def _path_edges(k: int, m: int) -> list[tuple[int, ...]]:
    return [tuple(range(i * (k - 1), i * (k - 1) + k)) for i in range(m)]


def loose_path(k: int, m: int) -> Hypergraph:
    """P_m^(k): edge i is {i(k-1), ..., i(k-1)+k-1}; spine vertex u_i = i(k-1)."""
    _need(k >= 2 and m >= 1, f"loose path needs k >= 2, m >= 1 (got k={k}, m={m})")
    return Hypergraph.from_edges(k, _path_edges(k, m))


def loose_cycle(k: int, m: int) -> Hypergraph:
    _need(k >= 2 and m >= 3, f"loose cycle needs k >= 2, m >= 3 (got k={k}, m={m})")
    n = (k - 1) * m
    edges = [tuple(v % n for v in range(i * (k - 1), i * (k - 1) + k)) for i in range(m)]
    return Hypergraph.from_edges(k, edges)


def d_family(k: int, m: int) -> Hypergraph:
    """D_m^(k): P_{m-1}^(k) with a pendant edge at u_1, the vertex shared by e_1 and e_2."""
    _need(k >= 2 and m >= 3, f"D family needs k >= 2, m >= 3 (got k={k}, m={m})")
    return attach_path(loose_path(k, m - 1), k - 1, 1)


def d_prime_family(k: int, m: int) -> Hypergraph:
    """D'_m^(k): P_{m-1}^(k) with a pendant edge at a degree-1 vertex inside e_2.

    The vertex used is ``k``, the first non-spine vertex of e_2.
    """
    _need(k >= 3, f"D' family needs k >= 3 (got k={k})")
    _need(m >= 3, f"D' family needs m >= 3 (got m={m})")
    return attach_path(loose_path(k, m - 1), k, 1)


def _legs_at(base: Hypergraph, anchors_and_lengths) -> Hypergraph:
    G = base
    for u, p in anchors_and_lengths:
        G = attach_path(G, u, p)
    return G


def e3_family(i: int, j: int, l: int) -> Hypergraph:
    """E_{i,j,l}^(3): three pendant paths of lengths i, j, l at a common vertex."""
    _need(min(i, j, l) >= 1, f"E3 needs i, j, l >= 1 (got {i},{j},{l})")
    # first leg is the spine 0..2i; the other two hang off vertex 0
    return _legs_at(loose_path(3, i), [(0, j), (0, l)])


def f3_family(i: int, j: int, l: int) -> Hypergraph:
    """F_{i,j,l}^(3): a central edge {0,1,2} with pendant paths of lengths i, j, l at its vertices.

    Zero-length legs are allowed.
    """
    _need(min(i, j, l) >= 0, f"F3 needs i, j, l >= 0 (got {i},{j},{l})")
    return _legs_at(Hypergraph(3, 3, ((0, 1, 2),)), [(0, i), (1, j), (2, l)])


def g3_family(i: int, j: int, l: int, p: int, q: int) -> Hypergraph:
    """G_{i,j:l:p,q}^(3): loose path of length l+2 with legs i, j at the two pendant
    vertices of its first edge and p, q at those of its last edge."""
    _need(l >= 0, f"G3 needs l >= 0 (got {l})")
    _need(min(i, j, p, q) >= 1, f"G3 needs i, j, p, q >= 1 (got {i},{j},{p},{q})")
    spine = loose_path(3, l + 2)
    last = spine.n - 1
    # first edge {0,1,2}: pendants 0 and 1; last edge: pendants last-1 and last
    return _legs_at(spine, [(0, i), (1, j), (last - 1, p), (last, q)])


def h4_family(t: int) -> Hypergraph:
    """H_{1,1,1,t}: 4-uniform central edge {u1, v1, v2, u2} = {0,1,2,3} with a pendant
    edge at each of u1, v1, v2 and a pendant path of length t at u2."""
    _need(1 <= t <= 4, f"H4 needs 1 <= t <= 4 (got {t})")
    return _legs_at(Hypergraph(4, 4, ((0, 1, 2, 3),)), [(0, 1), (1, 1), (2, 1), (3, t)])


def two_edge_overlap(k: int, a: int) -> Hypergraph:
    _need(k >= 2 and 1 <= a <= k - 1, f"two-edge overlap needs 1 <= a <= k-1 (got k={k}, a={a})")
    return Hypergraph.from_edges(k, [range(k), range(k - a, 2 * k - a)])


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    def expand(self) -> Hypergraph:
        gen, arity = FAMILIES[self.name]
        if len(self.params) != arity:
            raise HypergraphError(f"{self.name} takes {arity} parameters, got {len(self.params)}")
        return gen(*self.params)

    def __str__(self) -> str:
        return f"{self.name}:{','.join(map(str, self.params))}"


FAMILIES = {
    "P": (loose_path, 2),
    "C": (loose_cycle, 2),
    "D": (d_family, 2),
    "Dp": (d_prime_family, 2),
    "E3": (e3_family, 3),
    "F3": (f3_family, 3),
    "G3": (g3_family, 5),
    "H4": (h4_family, 1),
    "TE": (two_edge_overlap, 2),
}
ALIASES = {"Dprime": "Dp", "TwoEdge": "TE"}


def parse_family(text: str) -> FamilySpec:
    name, sep, rest = text.strip().partition(":")
    name = ALIASES.get(name, name)
    if not sep or name not in FAMILIES:
        raise HypergraphError(f"unknown family string {text!r}; expected one of {sorted(FAMILIES)} as NAME:a,b,...")
    try:
        params = tuple(int(t) for t in rest.split(","))
    except ValueError:
        raise HypergraphError(f"bad parameters in family string {text!r}") from None
    return FamilySpec(name, params)


def family(text: str) -> Hypergraph:
    return parse_family(text).expand()
