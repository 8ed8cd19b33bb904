"""Star forest containment: does a host contain k vertex-disjoint stars?

A star forest with degrees d_1 >= ... >= d_k embeds in G when there are k
distinct centers c_1..c_k and pairwise-disjoint leaf sets L_i inside N(c_i)
with |L_i| = d_i, all centers and leaves distinct. Adjacency between the
embedded stars is irrelevant (subgraph containment, not induced). The search
is exact backtracking: stars in decreasing-degree order, candidate centers
in decreasing residual degree (ties by index), leaf sets by lexicographic
combinations. Found embeddings are re-validated before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bounds import StarForestSpec
from .graphs import Graph, iter_bits


@dataclass(frozen=True)
class StarForestEmbedding:
    """Certificate: one center and one leaf tuple per star, in spec order."""

    centers: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {"centers": list(self.centers), "leaves": [list(l) for l in self.leaves]}


def verify_star_forest_embedding(
    g: Graph, spec: StarForestSpec, emb: StarForestEmbedding
) -> bool:
    """Independent inspection of a claimed embedding."""
    if len(emb.centers) != spec.k or len(emb.leaves) != spec.k:
        return False
    used: set[int] = set()
    for center, leaf_set, want in zip(emb.centers, emb.leaves, spec.degrees):
        if len(leaf_set) != want:
            return False
        block = {center, *leaf_set}
        if len(block) != want + 1 or block & used:
            return False
        if any(not 0 <= v < g.n for v in block):
            return False
        if any(not g.has_edge(center, leaf) for leaf in leaf_set):
            return False
        used |= block
    return True


def contains_star_forest(g: Graph, spec: StarForestSpec) -> StarForestEmbedding | None:
    """Exact search for the star forest inside g; None when absent."""
    degrees = spec.degrees
    k = len(degrees)
    need = spec.degree_sum + k
    if need > g.n:
        return None
    adj = g.adj
    full = (1 << g.n) - 1
    centers: list[int] = []
    leaf_sets: list[tuple[int, ...]] = []

    def place(i: int, avail: int) -> bool:
        if i == k:
            return True
        remaining_need = sum(degrees[j] + 1 for j in range(i, k))
        if avail.bit_count() < remaining_need:
            return False
        want = degrees[i]
        candidates = [
            (-((adj[c] & avail).bit_count()), c)
            for c in iter_bits(avail)
            if (adj[c] & avail).bit_count() >= want
        ]
        candidates.sort()
        for _, c in candidates:
            # Equal-degree stars are interchangeable: force ascending centers.
            if i > 0 and degrees[i] == degrees[i - 1] and c < centers[-1]:
                continue
            pool = list(iter_bits(adj[c] & avail & ~(1 << c)))
            centers.append(c)
            for leaf_combo in combinations(pool, want):
                block = 1 << c
                for leaf in leaf_combo:
                    block |= 1 << leaf
                leaf_sets.append(leaf_combo)
                if place(i + 1, avail & ~block):
                    return True
                leaf_sets.pop()
            centers.pop()
        return False

    if not place(0, full):
        return None
    emb = StarForestEmbedding(tuple(centers), tuple(leaf_sets))
    if not verify_star_forest_embedding(g, spec, emb):
        raise RuntimeError(f"star forest search produced an invalid certificate: {emb}")
    return emb


def is_star_forest_free(g: Graph, spec: StarForestSpec) -> bool:
    return contains_star_forest(g, spec) is None
