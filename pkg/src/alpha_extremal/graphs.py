"""Immutable simple graphs with bit-packed adjacency, plus the named join constructions.

Vertices are 0..n-1. Each vertex's neighborhood is stored as an int bitmask,
which keeps degree counts, subset tests and the exhaustive searches elsewhere
in the package cheap. Graph values are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Union


class FeasibilityError(ValueError):
    """A construction's parameters violate one of its invariants."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple undirected graph: order ``n`` plus symmetric adjacency bitmasks."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if n < 0:
            raise ValueError("graph order must be nonnegative")
        if len(adj) != n:
            raise ValueError("adjacency table length must equal the order")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(n):
            for v in iter_bits(adj[u]):
                if not adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = tuple(adj)
        self._hash = hash((n, self.adj))

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def star(leaves: int) -> "Graph":
        return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @staticmethod
    def complete_bipartite(s: int, t: int) -> "Graph":
        return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])

    # -- basic queries ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        out = []
        for u, row in enumerate(self.adj):
            out.extend((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))
        return out

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        if d is None:
            return True
        return not degs if self.n == 0 else degs == {d}

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_forest(self) -> bool:
        """Acyclicity via repeated leaf stripping."""
        deg = list(self.degrees())
        alive = (1 << self.n) - 1
        stack = [v for v in range(self.n) if deg[v] <= 1]
        removed = 0
        while stack:
            v = stack.pop()
            if not alive >> v & 1:
                continue
            alive ^= 1 << v
            removed += 1
            for u in iter_bits(self.adj[v] & alive):
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
        return removed == self.n

    # -- derived graphs -----------------------------------------------

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Image of the graph under vertex map v -> perm[v]."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new_row = 0
            for u in iter_bits(row):
                new_row |= 1 << perm[u]
            adj[perm[v]] = new_row
        return Graph(self.n, tuple(adj))

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u},{v}) to delete")
        adj = list(self.adj)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        return Graph(self.n, tuple(adj))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u},{v})")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u, v in combinations(keep, 2)
            if self.has_edge(u, v)
        ]
        return Graph.from_edges(len(keep), edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by |g|."""
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two vertex sets."""
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj]
    adj += [(row << g.n) | g_mask for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def union_of_copies(k: int, g: Graph) -> Graph:
    """k disjoint copies of g."""
    out = Graph.empty(0)
    for _ in range(k):
        out = disjoint_union(out, g)
    return out


# -- named construction families --------------------------------------


@dataclass(frozen=True)
class CompleteSplit:
    """Complete split graph: a clique on m vertices joined to an independent set."""

    n: int
    m: int


@dataclass(frozen=True)
class CliqueJoinCliques:
    """Clique on s-1 vertices joined to p disjoint copies of the complete graph on t."""

    n: int
    s: int
    t: int
    p: int


@dataclass(frozen=True)
class CliqueJoinMatching:
    """Clique on k-1 vertices joined to a maximum matching plus leftover isolated vertex.

    The matching part has p = (n-k+1) // 2 edges and q = (n-k+1) % 2 isolated
    vertices.
    """

    n: int
    k: int


@dataclass(frozen=True)
class CliqueJoinRegular:
    """Clique on k-1 vertices joined to a (d-1)-regular circulant on n-k+1 vertices."""

    n: int
    k: int
    d: int


ConstructionSpec = Union[CompleteSplit, CliqueJoinCliques, CliqueJoinMatching, CliqueJoinRegular]


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    """Circulant graph on Z_n with the given connection offsets (and their negatives)."""
    edges = set()
    for off in offsets:
        off %= n
        if off == 0:
            continue
        for v in range(n):
            u, w = v, (v + off) % n
            edges.add((min(u, w), max(u, w)))
    return Graph.from_edges(n, edges)


def regular_circulant(n: int, degree: int) -> Graph:
    """Deterministic ``degree``-regular circulant on n vertices.

    Uses offsets 1..degree//2 plus the antipodal offset n/2 when ``degree`` is
    odd (which forces n even). Connected for degree >= 2 since offset 1 is
    always included.
    """
    if degree < 0 or (n == 0 and degree > 0) or (n > 0 and degree >= n):
        raise FeasibilityError(f"no {degree}-regular graph on {n} vertices")
    if degree % 2 == 1 and n % 2 == 1:
        raise FeasibilityError(
            f"parity violation: {degree}-regular graph on odd order {n} is impossible"
        )
    offsets = list(range(1, degree // 2 + 1))
    if degree % 2 == 1:
        offsets.append(n // 2)
    g = circulant(n, offsets) if n else Graph.empty(0)
    if n and not g.is_regular(degree):
        raise FeasibilityError(f"no circulant realizes degree {degree} on {n} vertices")
    return g


def construct(spec: ConstructionSpec) -> Graph:
    """Build the graph named by a construction spec.

    Raises FeasibilityError naming the violated invariant when the parameters
    are infeasible.
    """
    if isinstance(spec, CompleteSplit):
        if not 0 <= spec.m <= spec.n:
            raise FeasibilityError(f"CompleteSplit needs 0 <= m <= n, got m={spec.m}, n={spec.n}")
        return join(Graph.complete(spec.m), Graph.empty(spec.n - spec.m))

    if isinstance(spec, CliqueJoinCliques):
        if spec.s < 1 or spec.t < 1 or spec.p < 1:
            raise FeasibilityError("CliqueJoinCliques needs s >= 1, t >= 1, p >= 1")
        if spec.n - spec.s + 1 != spec.p * spec.t:
            raise FeasibilityError(
                f"CliqueJoinCliques needs n-s+1 = p*t exactly, got "
                f"{spec.n}-{spec.s}+1 = {spec.n - spec.s + 1} != {spec.p}*{spec.t}"
            )
        return join(Graph.complete(spec.s - 1), union_of_copies(spec.p, Graph.complete(spec.t)))

    if isinstance(spec, CliqueJoinMatching):
        m = spec.n - spec.k + 1
        if spec.k < 1 or m < 0:
            raise FeasibilityError(
                f"CliqueJoinMatching needs k >= 1 and n >= k-1, got n={spec.n}, k={spec.k}"
            )
        p, q = divmod(m, 2)
        part = disjoint_union(union_of_copies(p, Graph.complete(2)), Graph.empty(q))
        return join(Graph.complete(spec.k - 1), part)

    if isinstance(spec, CliqueJoinRegular):
        m = spec.n - spec.k + 1
        r = spec.d - 1
        if spec.k < 1 or m < 0:
            raise FeasibilityError(
                f"CliqueJoinRegular needs k >= 1 and n >= k-1, got n={spec.n}, k={spec.k}"
            )
        if not 0 <= r < max(m, 1):
            raise FeasibilityError(
                f"CliqueJoinRegular needs 0 <= d-1 < n-k+1, got d-1={r}, n-k+1={m}"
            )
        if (r * m) % 2 != 0:
            raise FeasibilityError(
                f"parity violation: (d-1)(n-k+1) = {r}*{m} must be even"
            )
        return join(Graph.complete(spec.k - 1), regular_circulant(m, r))

    raise TypeError(f"unknown construction spec: {spec!r}")


def quotient_classes(spec: ConstructionSpec) -> tuple[int, list[tuple[int, int]]]:
    """Equitable partition data for a construction.

    Returns (clique_size, parts) where parts lists the non-clique classes as
    (size, within-class regularity) with empty classes dropped. Every clique
    vertex is adjacent to everything; distinct non-clique classes are mutually
    non-adjacent and internally regular, so the partition is equitable.
    """
    if isinstance(spec, CompleteSplit):
        clique, parts = spec.m, [(spec.n - spec.m, 0)]
    elif isinstance(spec, CliqueJoinCliques):
        clique, parts = spec.s - 1, [(spec.n - spec.s + 1, spec.t - 1)]
    elif isinstance(spec, CliqueJoinMatching):
        p, q = divmod(spec.n - spec.k + 1, 2)
        clique, parts = spec.k - 1, [(2 * p, 1), (q, 0)]
    elif isinstance(spec, CliqueJoinRegular):
        clique, parts = spec.k - 1, [(spec.n - spec.k + 1, spec.d - 1)]
    else:
        raise TypeError(f"unknown construction spec: {spec!r}")
    construct(spec)  # surface feasibility errors uniformly
    return clique, [(size, reg) for size, reg in parts if size > 0]
