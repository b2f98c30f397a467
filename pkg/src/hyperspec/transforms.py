"""Constructive hypergraph surgeries: edge moving, part swapping, pendant paths, reduction.

Every operation validates its preconditions, raises :class:`HypergraphError`
naming the offending edge or vertex, and returns a new normalized hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Hypergraph, HypergraphError, degrees


class NotReducible(HypergraphError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    """Move each edge in ``pairs`` off its listed vertex and onto ``u``."""

    u: int
    pairs: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def of(cls, u: int, pairs: Iterable[tuple[Iterable[int], int]]) -> MoveSpec:
        return cls(u, tuple((tuple(sorted(e)), v) for e, v in pairs))


def _as_edge(e: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(e))


def move_edges(G: Hypergraph, spec: MoveSpec) -> Hypergraph:
    edges = set(G.edges)
    if not 0 <= spec.u < G.n:
        raise HypergraphError(f"target vertex {spec.u} out of range")
    if not spec.pairs:
        raise HypergraphError("nothing to move")
    moved = [e for e, _ in spec.pairs]
    if len(set(moved)) != len(moved):
        raise HypergraphError("an edge is listed twice")
    new_edges = []
    for e, v in spec.pairs:
        if e not in edges:
            raise HypergraphError(f"edge {list(e)} is not in G")
        if v not in e:
            raise HypergraphError(f"vertex {v} is not in edge {list(e)}")
        if spec.u in e:
            raise HypergraphError(f"target {spec.u} already lies in edge {list(e)}")
        ne = _as_edge((set(e) - {v}) | {spec.u})
        if ne in edges:
            raise HypergraphError(f"moved edge {list(ne)} already present")
        new_edges.append(ne)
    if len(set(new_edges)) != len(new_edges):
        raise HypergraphError("two moved edges coincide")
    rest = edges.difference(moved)
    return Hypergraph.from_edges(G.k, list(rest) + new_edges)


def swap_parts(G, e, U1, f, V1) -> Hypergraph:
    """Replace edges ``e = U1 + U2`` and ``f = V1 + V2`` by ``U1 + V2`` and ``V1 + U2``."""
    e, f = _as_edge(e), _as_edge(f)
    U1, V1 = set(U1), set(V1)
    edges = set(G.edges)
    for name, x in (("e", e), ("f", f)):
        if x not in edges:
            raise HypergraphError(f"edge {name}={list(x)} is not in G")
    if set(e) & set(f):
        raise HypergraphError(f"edges {list(e)} and {list(f)} overlap")
    if not U1 <= set(e) or not V1 <= set(f):
        raise HypergraphError("U1 must lie in e and V1 in f")
    if len(U1) != len(V1):
        raise HypergraphError(f"|U1|={len(U1)} differs from |V1|={len(V1)}")
    if not 1 <= len(U1) < G.k:
        raise HypergraphError(f"part size {len(U1)} outside 1..{G.k - 1}")
    e2 = _as_edge(U1 | (set(f) - V1))
    f2 = _as_edge(V1 | (set(e) - U1))
    for x in (e2, f2):
        if x in edges:
            raise HypergraphError(f"resulting edge {list(x)} already present")
    return Hypergraph.from_edges(G.k, list(edges - {e, f}) + [e2, f2])


def attach_path(G: Hypergraph, u: int, p: int) -> Hypergraph:
    """Hang a pendant path of ``p`` edges at ``u``; new vertices get labels from ``n`` upward."""
    if not 0 <= u < G.n:
        raise HypergraphError(f"vertex {u} out of range")
    if p < 0:
        raise HypergraphError(f"path length must be >= 0, got {p}")
    edges = list(G.edges)
    nxt, at = G.n, u
    for _ in range(p):
        fresh = list(range(nxt, nxt + G.k - 1))
        edges.append((at, *fresh))
        nxt += G.k - 1
        at = fresh[-1]
    return Hypergraph.from_edges(G.k, edges)


def attach_two_paths(G: Hypergraph, u: int, v: int, p: int, q: int) -> Hypergraph:
    if u == v:
        raise HypergraphError("u and v must differ")
    if not 0 <= v < G.n:
        raise HypergraphError(f"vertex {v} out of range")
    # fresh labels are appended, so u and v keep their indices
    return attach_path(attach_path(G, u, p), v, q)


def is_reducible(G: Hypergraph) -> bool:
    d = degrees(G)
    return all(any(d[v] == 1 for v in e) for e in G.edges)


def reduce(G: Hypergraph, choose: str = "largest") -> Hypergraph:
    """Delete one pendant vertex from every edge, giving a (k-1)-uniform hypergraph.

    ``choose`` picks the largest (default) or smallest pendant index per edge.
    """
    if G.k < 3:
        raise NotReducible("2-uniform hypergraphs cannot be reduced")
    if choose not in ("largest", "smallest"):
        raise ValueError(f"unknown choice rule {choose!r}")
    d = degrees(G)
    out = []
    for e in G.edges:
        pend = [v for v in e if d[v] == 1]
        if not pend:
            raise NotReducible(f"edge {list(e)} has no pendant vertex")
        drop = max(pend) if choose == "largest" else min(pend)
        out.append(tuple(v for v in e if v != drop))
    if len(set(out)) != len(out):
        raise NotReducible("reduction produces a repeated edge")
    return Hypergraph.from_edges(G.k - 1, out)


def lift(G: Hypergraph, times: int = 1) -> Hypergraph:
    """Add one fresh pendant vertex to every edge (``times`` rounds).

    The result is reducible and :func:`reduce` maps it back to ``G``.
    """
    for _ in range(times):
        G = Hypergraph.from_edges(G.k + 1, (e + (G.n + i,) for i, e in enumerate(G.edges)))
    return G


def pendant_edges(G: Hypergraph) -> list[tuple[tuple[int, ...], int]]:
    """Pendant edges as ``(edge, attachment vertex)``: exactly one vertex has degree >= 2."""
    d = degrees(G)
    out = []
    for e in G.edges:
        inner = [v for v in e if d[v] >= 2]
        if len(inner) == 1:
            out.append((e, inner[0]))
    return out


def pendant_path_vertices(G: Hypergraph, e: Sequence[int]) -> list[int]:
    d = degrees(G)
    return [v for v in e if d[v] == 1]
