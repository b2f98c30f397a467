"""Isomorph-free generation of connected k-uniform hypergraphs and ranking by spectral radius.

Generation grows hypergraphs one edge at a time.  Each new edge reuses
between 1 and k existing vertices and takes the rest fresh, so every
intermediate hypergraph is connected (any connected hypergraph admits such an
edge order: walk a spanning tree of its line graph).  Children are
deduplicated by canonical form at every level.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (
    DEFAULT_MAX_N,
    CanonicalForm,
    CapExceeded,
    Hypergraph,
    canonical_edges,
    canonical_form,
    serialize,
)
from .spectral import EigenResult, spectral_radius


def max_vertices(k: int, m: int) -> int:
    """Largest vertex count of a connected k-uniform hypergraph with m edges (a hypertree)."""
    return (k - 1) * m + 1


def _check_cap(k: int, m: int, max_n: int) -> None:
    if k < 2 or m < 1:
        raise ValueError(f"need k >= 2 and m >= 1 (got k={k}, m={m})")
    need = max_vertices(k, m)
    if need > max_n:
        raise CapExceeded(
            f"k={k}, m={m} needs up to {need} vertices, above the enumeration cap {max_n}"
        )


def _children(G: Hypergraph, max_n: int) -> dict[bytes, Hypergraph]:
    out: dict[bytes, Hypergraph] = {}
    present = set(G.edges)
    for s in range(1, G.k + 1):
        fresh = G.k - s
        if G.n + fresh > max_n:
            continue
        for shared in itertools.combinations(range(G.n), s):
            e = shared + tuple(range(G.n, G.n + fresh))
            if fresh == 0 and e in present:
                continue
            H = Hypergraph.from_edges(G.k, list(G.edges) + [e])
            canon = canonical_edges(H, max_n)
            key = serialize(Hypergraph(H.k, H.n, canon)).encode("ascii")
            out.setdefault(key, Hypergraph(H.k, H.n, canon))
    return out


def _children_batch(args) -> list[tuple[bytes, Hypergraph]]:
    reps, max_n = args
    merged: dict[bytes, Hypergraph] = {}
    for G in reps:
        for key, H in _children(G, max_n).items():
            merged.setdefault(key, H)
    return list(merged.items())


def enumerate_connected(
    k: int, m: int, max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> list[Hypergraph]:
    """One canonical representative per isomorphism class, sorted by canonical encoding."""
    _check_cap(k, m, max_n)
    single = Hypergraph(k, k, (tuple(range(k)),))
    level = {serialize(single).encode("ascii"): single}
    for _ in range(m - 1):
        reps = [level[key] for key in sorted(level)]
        nxt: dict[bytes, Hypergraph] = {}
        if workers > 1 and len(reps) > 1:
            chunks = [(reps[i::workers], max_n) for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_children_batch, chunks):
                    for key, H in part:
                        nxt.setdefault(key, H)
        else:
            for key, H in _children_batch((reps, max_n)):
                nxt.setdefault(key, H)
        level = nxt
    return [level[key] for key in sorted(level)]


@dataclass(frozen=True)
class RankedClass:
    canonical: CanonicalForm
    graph: Hypergraph
    result: EigenResult
    tied_with_next: bool = False


@dataclass(frozen=True)
class RankingReport:
    k: int
    m: int
    classes: tuple[RankedClass, ...]

    @property
    def total_count(self) -> int:
        return len(self.classes)

    @property
    def minimum(self) -> RankedClass:
        return self.classes[0]

    @property
    def second(self) -> RankedClass | None:
        return self.classes[1] if len(self.classes) > 1 else None

    def certified(self, upto: int = 2) -> bool:
        """True if the first ``upto`` classes are separated from their successors by disjoint intervals."""
        return not any(c.tied_with_next for c in self.classes[:upto])


def rank_by_rho(
    k: int,
    m: int,
    tol: float = 1e-10,
    max_n: int = DEFAULT_MAX_N,
    max_iter: int = 1_000_000,
    workers: int = 1,
) -> RankingReport:
    reps = enumerate_connected(k, m, max_n=max_n, workers=workers)
    scored = [
        (canonical_form(G, max_n), G, spectral_radius(G, tol=tol, max_iter=max_iter))
        for G in reps
    ]
    scored.sort(key=lambda t: (t[2].lower, t[0].bytes))
    classes = []
    for i, (cf, G, r) in enumerate(scored):
        tied = i + 1 < len(scored) and not r.certainly_below(scored[i + 1][2])
        classes.append(RankedClass(cf, G, r, tied))
    return RankingReport(k, m, tuple(classes))
