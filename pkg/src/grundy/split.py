"""Split graphs: recognition, the clique-pair parameter, Grundy values, and X-join solving.

A split graph partitions into a clique K and an independent set; we always
normalize to a partition whose independent side has maximum size, which the
closed formulas below require.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, is_independent
from .oracle import VertexSequence
from .powers import XJoinSolveResult
from .products import check_profile


@dataclass(frozen=True)
class SplitPartition:
    """(K, I*) split partition with |I*| maximum, plus the clique-pair parameter.

    ``n_param`` is 1 when two clique vertices share no common neighbor inside
    I*, else 0.
    """

    clique: frozenset[int]
    independent: frozenset[int]
    n_param: int


def _compute_n_param(g: Graph, clique: frozenset[int], independent: frozenset[int]) -> int:
    members = sorted(clique)
    for a_idx, v in enumerate(members):
        for w in members[a_idx + 1 :]:
            if not (g.adj[v] & g.adj[w] & independent):
                return 1
    return 0


def split_recognize(g: Graph) -> Optional[SplitPartition]:
    """Degree-sequence split test; returns a maximum-independent-side partition or None.

    Sort degrees descending and find the largest k with d_k >= k-1; the graph is
    split iff the first k degrees sum to k(k-1) plus the remaining degrees. The
    top-k vertices form K; a clique vertex with no neighbor in the independent
    side (at most one can exist) is then moved over to make |I*| maximum.
    """
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in order]
    k = 0
    for idx, d in enumerate(degrees, 1):
        if d >= idx - 1:
            k = idx
    if sum(degrees[:k]) != k * (k - 1) + sum(degrees[k:]):
        return None
    clique = set(order[:k])
    independent = set(order[k:])
    movable = sorted(v for v in clique if not (g.adj[v] & independent))
    if movable:
        v = movable[0]
        clique.discard(v)
        independent.add(v)
    # after one promotion no clique vertex may be isolated from I*
    assert all(g.adj[v] & independent for v in clique)
    cf, if_ = frozenset(clique), frozenset(independent)
    return SplitPartition(cf, if_, _compute_n_param(g, cf, if_))


def _clique_branch_sequence(g: Graph, p: SplitPartition, u: int) -> VertexSequence:
    head = tuple(sorted(g.adj[u] & p.independent))
    tail = tuple(sorted(p.independent - g.adj[u]))
    return VertexSequence(head + (u,) + tail)


def gamma_split(g: Graph, p: SplitPartition) -> tuple[int, VertexSequence]:
    """Grundy domination number |I*| + n(G) with a witness sequence.

    With n(G)=0 the witness is I* itself; otherwise the neighbors of a
    witnessing clique vertex u go first, then u, then the rest of I*.
    """
    gamma = len(p.independent) + p.n_param
    if p.n_param == 0:
        return gamma, VertexSequence(tuple(sorted(p.independent)))
    members = sorted(p.clique)
    for u in members:
        for v in members:
            if v != u and not (g.adj[u] & g.adj[v] & p.independent):
                return gamma, _clique_branch_sequence(g, p, u)
    raise AssertionError("n_param=1 but no witnessing clique pair found")


def gamma_given_I_split(g: Graph, p: SplitPartition, i: Iterable[int]) -> int:
    """Per-set value from the split formulas.

    With a clique vertex u in i the value is |I* - N(u)| + 1. With i disjoint
    from K the formula yields |I*| + n(G) regardless of i; that is the value of
    the best such set (i = I*), which is all the X-join solver consumes, but it
    can overshoot gamma_gr(G, i) for other independent sets.
    """
    members = frozenset(i)
    if not is_independent(g, members):
        raise ValueError(f"{sorted(members)} is not independent")
    in_clique = members & p.clique
    if len(in_clique) > 1:
        raise AssertionError("independent set with two clique vertices")
    if in_clique:
        (u,) = in_clique
        return len(p.independent - g.adj[u]) + 1
    return len(p.independent) + p.n_param


def solve_xjoin_split(g: Graph, p: SplitPartition, profile: Sequence[int]) -> XJoinSolveResult:
    """X-join with a split main factor, parts given by their Grundy numbers.

    Compares the independent-side branch (all of I*, worth sum of gammas plus
    n(G)) against each clique vertex v taken together with the I* vertices it
    misses. Ties prefer the I* branch, then the smallest v.
    """
    values = check_profile(profile, g.n)
    best = sum(values[v - 1] for v in p.independent) + p.n_param
    best_v = None
    for v in sorted(p.clique):
        cand = values[v - 1] + sum(values[w - 1] for w in p.independent - g.adj[v])
        if cand > best:
            best, best_v = cand, v
    if best_v is None:
        _, skeleton = gamma_split(g, p)
        members = tuple(sorted(p.independent))
        branch = "independent-side"
    else:
        members = tuple(sorted({best_v} | (p.independent - g.adj[best_v])))
        skeleton = VertexSequence((best_v,) + tuple(sorted(p.independent - g.adj[best_v])))
        branch = f"clique-vertex-{best_v}"
    return XJoinSolveResult(best, members, skeleton, {"branch": branch, "n_param": p.n_param})


def lex_gamma_split(g: Graph, p: SplitPartition, gamma_h: int) -> int:
    """Grundy domination number of a split graph composed lexicographically with H."""
    if gamma_h < 1:
        raise ValueError("gamma_h must be >= 1")
    return len(p.independent) * gamma_h + p.n_param
