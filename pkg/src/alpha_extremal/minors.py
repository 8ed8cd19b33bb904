"""Minor containment by exhaustive branch-set search.

A pattern H is a minor of a host G when G holds disjoint connected branch
sets, one per pattern vertex, with a host edge between every pair of sets
whose pattern vertices are adjacent. The search assigns branch sets one
pattern vertex at a time; candidate sets are enumerated as connected subsets
of the unused vertices (each exactly once, by the fixed-minimum extension
scheme) and pruned by remaining-vertex counts, aggregate-degree needs, and
pending cross-adjacency feasibility. Interchangeable pattern vertices
(clique vertices, the two sides of a complete bipartite pattern) are
symmetry-broken by forcing (size, min vertex) to increase.

Absence answers are exhaustive, which is exponential in the worst case, so
hosts above a configurable cap (default 12) are refused. Certificates are
re-validated before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import Graph, iter_bits

DEFAULT_HOST_CAP = 12


class MinorSearchCapError(ValueError):
    """Host too large for exhaustive branch-set search."""


@dataclass(frozen=True)
class CliqueMinor:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"clique pattern needs r >= 1, got {self.r}")


@dataclass(frozen=True)
class BicliqueMinor:
    s: int
    t: int

    def __post_init__(self):
        if not 1 <= self.s <= self.t:
            raise ValueError(f"biclique pattern needs t >= s >= 1, got s={self.s}, t={self.t}")


@dataclass(frozen=True)
class GraphMinor:
    pattern: Graph

    def __post_init__(self):
        if self.pattern.n < 1:
            raise ValueError("minor pattern needs at least one vertex")


MinorPattern = Union[CliqueMinor, BicliqueMinor, GraphMinor]


@dataclass(frozen=True)
class MinorEmbedding:
    """Certificate: one sorted branch set per pattern vertex."""

    branch_sets: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {"branch_sets": [list(b) for b in self.branch_sets]}


def pattern_graph(p: MinorPattern) -> Graph:
    if isinstance(p, CliqueMinor):
        return Graph.complete(p.r)
    if isinstance(p, BicliqueMinor):
        return Graph.complete_bipartite(p.s, p.t)
    return p.pattern


def _tie_groups(p: MinorPattern) -> list[int]:
    """Group label per pattern vertex; equal adjacent labels mark
    interchangeable vertices eligible for symmetry breaking."""
    if isinstance(p, CliqueMinor):
        return [0] * p.r
    if isinstance(p, BicliqueMinor):
        return [0] * p.s + [1] * p.t
    return list(range(p.pattern.n))


def _connected_in(g: Graph, vertices: tuple[int, ...]) -> bool:
    if not vertices:
        return False
    member = 0
    for v in vertices:
        member |= 1 << v
    seen = 1 << vertices[0]
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v] & member
        frontier = nxt & ~seen
        seen |= frontier
    return seen == member


def verify_minor_embedding(g: Graph, p: MinorPattern, emb: MinorEmbedding) -> bool:
    """Independent inspection of a claimed branch-set certificate."""
    pat = pattern_graph(p)
    sets = emb.branch_sets
    if len(sets) != pat.n:
        return False
    used: set[int] = set()
    for branch in sets:
        if not branch or any(not 0 <= v < g.n for v in branch):
            return False
        if used & set(branch):
            return False
        if not _connected_in(g, branch):
            return False
        used |= set(branch)
    for i, j in pat.edges():
        if not any(g.has_edge(u, v) for u in sets[i] for v in sets[j]):
            return False
    return True


def _cycle_certificate(g: Graph) -> MinorEmbedding:
    """Branch sets contracting any cycle to a triangle."""
    # Strip leaves down to the 2-core, then walk inside it until the path
    # closes on itself; every 2-core vertex has two core neighbors, so the
    # walk always progresses and closes within n steps.
    deg = list(g.degrees())
    core = (1 << g.n) - 1
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not core >> v & 1:
            continue
        core ^= 1 << v
        for u in iter_bits(g.adj[v] & core):
            deg[u] -= 1
            if deg[u] == 1:
                stack.append(u)
    assert core, "cycle requested from an acyclic graph"
    start = (core & -core).bit_length() - 1
    path = [start]
    position = {start: 0}
    while True:
        v = path[-1]
        prev = path[-2] if len(path) > 1 else -1
        fresh = None
        closing = None
        for u in iter_bits(g.adj[v] & core):
            if u == prev:
                continue
            if u in position:
                closing = u
                break
            fresh = u
        if closing is not None:
            cycle = path[position[closing]:]
            break
        path.append(fresh)
        position[fresh] = len(path) - 1
    first, second, rest = cycle[0], cycle[1], cycle[2:]
    return MinorEmbedding(((first,), (second,), tuple(sorted(rest))))


def has_minor(
    g: Graph, p: MinorPattern, *, host_cap: int | None = None
) -> MinorEmbedding | None:
    """Branch-set certificate when the pattern is a minor of g, else None.

    Fast paths (acyclicity for triangle patterns, size comparisons) answer
    without search at any order; the exhaustive search refuses hosts larger
    than the cap.
    """
    pat = pattern_graph(p)
    m = pat.n
    if m > g.n:
        return None
    emb = None
    searched = False
    if isinstance(p, CliqueMinor) and p.r <= 3:
        if p.r == 1:
            emb = MinorEmbedding(((0,),))
        elif p.r == 2:
            edges = g.edges()
            if not edges:
                return None
            emb = MinorEmbedding(((edges[0][0],), (edges[0][1],)))
        else:
            if g.is_forest():
                return None
            emb = _cycle_certificate(g)
    else:
        if pat.edge_count() > g.edge_count():
            return None
        cap = DEFAULT_HOST_CAP if host_cap is None else host_cap
        if g.n > cap:
            raise MinorSearchCapError(
                f"host order {g.n} exceeds the branch-set search cap {cap}"
            )
        emb = _branch_set_search(g, pat, _tie_groups(p))
        searched = True
    if emb is not None and not verify_minor_embedding(g, p, emb):
        origin = "search" if searched else "fast path"
        raise RuntimeError(f"minor {origin} produced an invalid certificate: {emb}")
    return emb


def is_minor_free(g: Graph, p: MinorPattern, *, host_cap: int | None = None) -> bool:
    return has_minor(g, p, host_cap=host_cap) is None


def _branch_set_search(
    g: Graph, pat: Graph, groups: list[int]
) -> MinorEmbedding | None:
    n = g.n
    m = pat.n
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    full = (1 << n) - 1
    # Pattern bookkeeping, by placement level:
    pat_deg = [pat.degree(i) for i in range(m)]
    earlier_nbrs = [[j for j in range(i) if pat.has_edge(i, j)] for i in range(m)]
    # Placed vertices that still owe an edge to a future pattern vertex.
    pending_after = [
        [j for j in range(i) if any(pat.has_edge(j, l) for l in range(i, m))]
        for i in range(m)
    ]

    branches: list[int] = []  # branch masks
    branch_nbrs: list[int] = []  # union of host neighborhoods per branch

    def place(i: int, used: int) -> bool:
        if i == m:
            return True
        avail = full & ~used
        if avail.bit_count() < m - i:
            return False
        for j in pending_after[i]:
            if branch_nbrs[j] & avail == 0:
                return False
        req = earlier_nbrs[i]
        same_group = i > 0 and groups[i] == groups[i - 1]
        prev_size = branches[i - 1].bit_count() if same_group else 0
        prev_min = (branches[i - 1] & -branches[i - 1]).bit_length() - 1 if same_group else -1
        max_size = avail.bit_count() - (m - i - 1)

        def try_set(s_mask: int, size: int, degsum: int) -> bool:
            # Aggregate degree must cover internal tree plus pattern edges.
            if degsum < pat_deg[i] + 2 * (size - 1):
                return False
            if same_group:
                root = (s_mask & -s_mask).bit_length() - 1
                if (size, root) <= (prev_size, prev_min):
                    return False
            if any(s_mask & branch_nbrs[j] == 0 for j in req):
                return False
            s_nbrs = 0
            for v in iter_bits(s_mask):
                s_nbrs |= adj[v]
            s_nbrs &= ~s_mask
            branches.append(s_mask)
            branch_nbrs.append(s_nbrs)
            if place(i + 1, used | s_mask):
                return True
            branches.pop()
            branch_nbrs.pop()
            return False

        def grow(s_mask: int, ext: int, size: int, degsum: int, scope: int) -> bool:
            # scope = avail vertices above the root; keeps min(set) == root so
            # every connected set is generated exactly once.
            if try_set(s_mask, size, degsum):
                return True
            if size == max_size:
                return False
            nbr_mask = 0
            for v in iter_bits(s_mask):
                nbr_mask |= adj[v]
            for u in iter_bits(ext):
                fresh = adj[u] & scope & ~nbr_mask & ~s_mask
                above = ext & ~((1 << (u + 1)) - 1)
                if grow(s_mask | 1 << u, above | fresh, size + 1, degsum + deg[u], scope):
                    return True
            return False

        for root in iter_bits(avail):
            scope = avail & ~((1 << (root + 1)) - 1)
            if grow(1 << root, adj[root] & scope, 1, deg[root], scope):
                return True
        return False

    if not place(0, 0):
        return None
    return MinorEmbedding(tuple(tuple(iter_bits(b)) for b in branches))
