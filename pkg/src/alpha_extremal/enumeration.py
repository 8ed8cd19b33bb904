"""Isomorph-free exhaustive generation of small graphs.

Orderly generation by canonical augmentation: a graph of order n+1 is built
from a graph of order n by attaching one new vertex to a chosen neighbor
set. The canonical parent of any graph is the graph left after deleting its
canonical deletion vertex (the automorphism-orbit representative among the
vertices minimizing (degree, sorted neighbor degrees)); an augmentation is
accepted only when the new vertex sits in that orbit, and neighbor sets are
tried once per Aut(parent) orbit. Together this emits exactly one
representative per isomorphism class, deterministically, with no global
dedup table.

Since the deletion vertex always has minimum degree, neighbor sets larger
than min_degree(parent) + 1 can never be accepted and are not generated.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterable, Iterator

from .canon import canonical_labeling_masks, orbits_from_generators
from .graph6 import decode_graph6
from .graphs import Graph

DEFAULT_CAP = 10
CAP_ENV_VAR = "ALPHA_EXTREMAL_CAP"


class EnumerationCapError(ValueError):
    """Requested order exceeds the enumeration cap."""


def enumeration_cap(override: int | None = None) -> int:
    """Effective cap: explicit override, else ALPHA_EXTREMAL_CAP, else 10."""
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_CAP


def _degrees(adj: tuple[int, ...]) -> list[int]:
    return [row.bit_count() for row in adj]


def _accept(n: int, adj: tuple[int, ...]) -> bool:
    """Is vertex n-1 a canonical deletion vertex of this order-n graph?"""
    degs = _degrees(adj)
    v = n - 1
    mind = min(degs)
    if degs[v] > mind:
        return False
    min_set = [u for u in range(n) if degs[u] == mind]
    if len(min_set) == 1:
        return True

    def kappa(u: int) -> tuple[int, ...]:
        row = adj[u]
        out = []
        while row:
            low = row & -row
            out.append(degs[low.bit_length() - 1])
            row ^= low
        out.sort()
        return tuple(out)

    kv = kappa(v)
    candidates = [v]
    for u in min_set:
        if u == v:
            continue
        ku = kappa(u)
        if ku < kv:
            return False
        if ku == kv:
            candidates.append(u)
    if len(candidates) == 1:
        return True
    perm, gens = canonical_labeling_masks(n, adj)
    orbit = orbits_from_generators(n, gens)
    chosen = min(candidates, key=lambda u: perm[u])
    return orbit[chosen] == orbit[v]


def _permute_mask(mask: int, g: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << g[low.bit_length() - 1]
        mask ^= low
    return out


def _is_orbit_min(mask: int, gens: list[tuple[int, ...]]) -> bool:
    """Is ``mask`` the minimum of its orbit under the generated group?"""
    seen = {mask}
    frontier = [mask]
    while frontier:
        m = frontier.pop()
        for g in gens:
            m2 = _permute_mask(m, g)
            if m2 < mask:
                return False
            if m2 not in seen:
                seen.add(m2)
                frontier.append(m2)
    return True


def _children(m: int, adj: tuple[int, ...], gens: list[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    """Accepted one-vertex extensions of an order-m graph, in deterministic order."""
    degs = _degrees(adj)
    max_size = min(m, (min(degs) if m else 0) + 1)
    for size in range(max_size + 1):
        for combo in combinations(range(m), size):
            mask = 0
            for u in combo:
                mask |= 1 << u
            if gens and not _is_orbit_min(mask, gens):
                continue
            child = tuple(
                row | (1 << m) if mask >> u & 1 else row for u, row in enumerate(adj)
            ) + (mask,)
            if _accept(m + 1, child):
                yield child


def _descend(adj: tuple[int, ...], m: int, target: int) -> Iterator[Graph]:
    if m == target:
        yield Graph(m, adj)
        return
    gens = canonical_labeling_masks(m, adj)[1] if m > 1 else []
    for child in _children(m, adj, gens):
        yield from _descend(child, m + 1, target)


def _check_order(n: int, cap: int | None) -> None:
    if n < 1:
        raise ValueError("enumeration needs order >= 1")
    limit = enumeration_cap(cap)
    if n > limit:
        raise EnumerationCapError(f"order {n} exceeds the enumeration cap {limit}")


def enumerate_graphs(
    n: int,
    *,
    cap: int | None = None,
    source: Iterable[str] | None = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class of order-n graphs.

    With ``source``, decodes an externally supplied graph6 stream instead of
    generating (each line must have order n); the cap does not apply then.
    """
    if source is not None:
        for line in source:
            line = line.strip()
            if not line:
                continue
            g = decode_graph6(line)
            if g.n != n:
                raise ValueError(f"graph6 stream has order {g.n}, expected {n}")
            yield g
        return
    _check_order(n, cap)
    yield from _descend((0,), 1, n)


def enumerate_graphs_sharded(
    n: int, shard: int, nshards: int, *, cap: int | None = None
) -> Iterator[Graph]:
    """Shard ``shard`` of ``nshards`` of the enumeration stream.

    Shards partition the augmentation tree below a fixed prefix order, so
    the union over all shards equals enumerate_graphs(n) exactly.
    """
    if not 0 <= shard < nshards:
        raise ValueError(f"shard {shard} not in range(0, {nshards})")
    _check_order(n, cap)
    if n == 1:
        if shard == 0:
            yield Graph.empty(1)
        return
    prefix = min(6, n - 1)
    for idx, root in enumerate(_descend((0,), 1, prefix)):
        if idx % nshards == shard:
            yield from _descend(root.adj, prefix, n)
