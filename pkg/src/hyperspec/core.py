"""Uniform hypergraph data model, validation, structure queries and canonical forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_MAX_N = 16

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """Invalid hypergraph, malformed file, or an illegal surgery."""


class CapExceeded(HypergraphError):
    """An instance is larger than the configured vertex cap."""


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices 0..n-1.

    Edges are stored as ascending tuples and the edge list is sorted, so two
    equal hypergraphs compare equal field by field.  Use :meth:`from_edges`
    to build one from arbitrary labels; the constructor itself only
    validates.
    """

    k: int
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.k < 2:
            raise HypergraphError(f"edge size k must be >= 2, got {self.k}")
        seen = set()
        covered = [False] * self.n
        for e in self.edges:
            if len(e) != self.k:
                raise HypergraphError(f"edge {list(e)} has {len(e)} vertices, expected {self.k}")
            if len(set(e)) != len(e):
                raise HypergraphError(f"edge {list(e)} repeats a vertex")
            if list(e) != sorted(e):
                raise HypergraphError(f"edge {list(e)} is not sorted")
            for v in e:
                if not 0 <= v < self.n:
                    raise HypergraphError(f"vertex {v} out of range 0..{self.n - 1}")
                covered[v] = True
            if e in seen:
                raise HypergraphError(f"duplicate edge {list(e)}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise HypergraphError("edge list is not sorted")
        if not all(covered):
            raise HypergraphError(f"isolated vertex {covered.index(False)}")

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        """Normalize ``edges`` and compact the used labels to 0..n-1, keeping their order."""
        raw = [tuple(e) for e in edges]
        for e in raw:
            if len(set(e)) != len(e):
                raise HypergraphError(f"edge {list(e)} repeats a vertex")
        labels = sorted({v for e in raw for v in e})
        relabel = {v: i for i, v in enumerate(labels)}
        norm = sorted(tuple(sorted(relabel[v] for v in e)) for e in raw)
        return cls(k, len(labels), tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Return the hypergraph with vertex ``v`` renamed to ``perm[v]``."""
        return Hypergraph.from_edges(self.k, ([perm[v] for v in e] for e in self.edges))

    def incidence(self) -> list[list[int]]:
        """Edge indices containing each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc

    def __str__(self) -> str:
        return serialize(self)


def parse(text: str) -> Hypergraph:
    """Read the ``.hg`` text format: a ``k n m`` header then one edge per line."""
    lines = [ln for ln in text.strip("\n").split("\n")]
    if not lines or not lines[0].strip():
        raise HypergraphError("empty input")
    header = lines[0].split()
    if len(header) != 3:
        raise HypergraphError(f"malformed header {lines[0]!r}: expected 'k n m'")
    try:
        k, n, m = (int(t) for t in header)
    except ValueError:
        raise HypergraphError(f"malformed header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise HypergraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        try:
            e = [int(t) for t in ln.split()]
        except ValueError:
            raise HypergraphError(f"malformed edge line {ln!r}") from None
        if len(e) != k:
            raise HypergraphError(f"edge {e} has {len(e)} vertices, expected {k}")
        if len(set(e)) != k:
            raise HypergraphError(f"edge {e} repeats a vertex")
        edges.append(tuple(sorted(e)))
    return Hypergraph(k, n, tuple(sorted(edges)))


def serialize(G: Hypergraph) -> str:
    out = [f"{G.k} {G.n} {G.m}"]
    out.extend(" ".join(map(str, e)) for e in G.edges)
    return "\n".join(out) + "\n"


def degrees(G: Hypergraph) -> list[int]:
    d = [0] * G.n
    for e in G.edges:
        for v in e:
            d[v] += 1
    return d


def pendant_vertices(G: Hypergraph) -> list[int]:
    return [v for v, dv in enumerate(degrees(G)) if dv == 1]


def is_connected(G: Hypergraph) -> bool:
    parent = list(range(G.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in G.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    return G.n == 0 or len({find(v) for v in range(G.n)}) == 1


# Canonical forms
#
# Individualization-refinement: colour vertices by an isomorphism-invariant
# refinement of the degree partition, branch on the first non-singleton cell,
# and keep the lexicographically smallest relabelled edge list among all
# leaves.  The leaf set depends only on the isomorphism class, so the result
# is an exact invariant.  Vertices with identical edge sets (twins) produce
# identical subtrees; only one per twin class is branched on.


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Encoding of the minimal relabelled edge list; equal iff isomorphic."""

    bytes: bytes

    def hypergraph(self) -> Hypergraph:
        return parse(self.bytes.decode("ascii"))

    def __str__(self) -> str:
        return self.bytes.decode("ascii").replace("\n", ";").rstrip(";")


def _refine(G: Hypergraph, inc: list[list[int]], colors: list[int]) -> list[int]:
    """Refine until stable.  Colours are ranks of invariant signatures, so the
    relative order of colour classes never depends on vertex labels."""
    ncls = len(set(colors))
    while True:
        sigs = []
        for v in range(G.n):
            around = sorted(
                tuple(sorted(colors[w] for w in G.edges[i] if w != v)) for i in inc[v]
            )
            sigs.append((colors[v], tuple(around)))
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncls:
            return new
        colors, ncls = new, len(rank)


def _leaf_code(G: Hypergraph, colors: list[int]) -> tuple[Edge, ...]:
    return tuple(sorted(tuple(sorted(colors[v] for v in e)) for e in G.edges))


def canonical_edges(G: Hypergraph, max_n: int = DEFAULT_MAX_N) -> tuple[Edge, ...]:
    if G.n > max_n:
        raise CapExceeded(f"{G.n} vertices exceeds canonical-form cap {max_n}")
    inc = G.incidence()
    twin_key = [tuple(inc[v]) for v in range(G.n)]
    best: list[tuple[Edge, ...] | None] = [None]

    def search(colors):
        colors = _refine(G, inc, colors)
        if len(set(colors)) == G.n:
            code = _leaf_code(G, colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        tried = set()
        for v in range(G.n):
            if colors[v] != target or twin_key[v] in tried:
                continue
            tried.add(twin_key[v])
            # double every colour and put v just ahead of its old cell
            nxt = [2 * c + 1 for c in colors]
            nxt[v] = 2 * target
            search(nxt)

    search(degrees(G))
    return best[0]


def canonical_form(G: Hypergraph, max_n: int = DEFAULT_MAX_N) -> CanonicalForm:
    edges = canonical_edges(G, max_n)
    return CanonicalForm(serialize(Hypergraph(G.k, G.n, edges)).encode("ascii"))


def is_isomorphic(G: Hypergraph, H: Hypergraph, max_n: int = DEFAULT_MAX_N) -> bool:
    if (G.k, G.n, G.m) != (H.k, H.n, H.m):
        return False
    if sorted(degrees(G)) != sorted(degrees(H)):
        return False
    return canonical_form(G, max_n) == canonical_form(H, max_n)
