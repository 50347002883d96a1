"""X-join and lexicographic products, sequence lifting, and the generic product solver.

The X-join replaces each vertex v of a main graph by a part graph G_v, joining
two product vertices when their main vertices are adjacent, or when they lie in
the same part and are adjacent there.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional, Sequence

from .graph import Graph, independent_sets
from .oracle import VertexSequence, gamma_gr_exact, gamma_gr_rooted

PerIValue = Callable[[frozenset[int]], Optional[int]]


class XJoinInstance:
    """A constructed X-join product with bidirectional vertex translation.

    ``to_pair[p]`` gives (main vertex, part vertex) for product vertex p;
    ``from_pair`` is the inverse. Parts are laid out in main-vertex order with
    part-internal numbering preserved.
    """

    def __init__(self, main: Graph, parts: Sequence[Graph]):
        if len(parts) != main.n:
            raise ValueError(f"need {main.n} parts, got {len(parts)}")
        for v, part in enumerate(parts, 1):
            if part.n == 0:
                raise ValueError(f"part {v} is empty")
        self.main = main
        self.parts = tuple(parts)
        self.to_pair: dict[int, tuple[int, int]] = {}
        self.from_pair: dict[tuple[int, int], int] = {}
        p = 0
        for v, part in enumerate(self.parts, 1):
            for x in part.vertices():
                p += 1
                self.to_pair[p] = (v, x)
                self.from_pair[(v, x)] = p
        total = p
        adj: list[set[int]] = [set() for _ in range(total + 1)]
        for a in range(1, total + 1):
            va, xa = self.to_pair[a]
            for b in range(a + 1, total + 1):
                vb, xb = self.to_pair[b]
                if main.has_edge(va, vb) or (va == vb and self.parts[va - 1].has_edge(xa, xb)):
                    adj[a].add(b)
                    adj[b].add(a)
        self.product = Graph(total, tuple(frozenset(s) for s in adj))

    def part_count(self, s: VertexSequence, v: int) -> int:
        """Number of sequence vertices lying in part v."""
        return sum(1 for p in s if self.to_pair[p][0] == v)

    def lowest_order_in_part(self, s: VertexSequence, v: int) -> Optional[int]:
        """First sequence vertex (product label) in part v, or None."""
        for p in s:
            if self.to_pair[p][0] == v:
                return p
        return None


def xjoin(main: Graph, parts: Sequence[Graph]) -> XJoinInstance:
    return XJoinInstance(main, parts)


def lexicographic(main: Graph, h: Graph) -> XJoinInstance:
    return XJoinInstance(main, [h] * main.n)


def lift_sequence(
    inst: XJoinInstance,
    s_main: VertexSequence,
    i: Iterable[int],
    part_seqs: Mapping[int, VertexSequence],
) -> VertexSequence:
    """Expand a main-graph sequence into a product sequence.

    Each main vertex v in ``i`` is replaced by its part sequence (translated to
    product labels); every other main vertex is replaced by the first vertex of
    its part. Legality of the result is the caller's contract: it holds when
    s_main is legal with self-footprint set containing i and each part sequence
    is legal on its part.
    """
    members = set(i)
    missing = members - s_main.vertex_set
    if missing:
        raise ValueError(f"vertices {sorted(missing)} are in i but not in the main sequence")
    out: list[int] = []
    for v in s_main:
        if v in members:
            if v not in part_seqs:
                raise ValueError(f"no part sequence supplied for main vertex {v}")
            out.extend(inst.from_pair[(v, x)] for x in part_seqs[v])
        else:
            out.append(inst.from_pair[(v, 1)])
    return VertexSequence(tuple(out))


def check_profile(profile: Sequence[int], n: int) -> tuple[int, ...]:
    values = tuple(profile)
    if len(values) != n:
        raise ValueError(f"profile has {len(values)} entries, main graph has {n} vertices")
    for v, gamma in enumerate(values, 1):
        if gamma < 1:
            raise ValueError(f"profile value for vertex {v} must be >= 1, got {gamma}")
    return values


def xjoin_gamma_generic(
    main: Graph, profile: Sequence[int], per_i: PerIValue
) -> tuple[int, frozenset[int]]:
    """Grundy domination number of the product from per-I values of the main factor.

    Maximizes per_i(I) + sum of part gammas over I, minus |I|, over independent
    sets I of the main graph; per_i returning None marks I as infeasible. The
    argmax is the first maximizer in enumeration order.
    """
    values = check_profile(profile, main.n)
    best: Optional[int] = None
    best_i: frozenset[int] = frozenset()
    for cand in independent_sets(main, min_size=0):
        base = per_i(cand)
        if base is None:
            continue
        total = base + sum(values[v - 1] - 1 for v in cand)
        if best is None or total > best:
            best = total
            best_i = cand
    if best is None:
        raise RuntimeError("per-I callback reported every independent set infeasible")
    return best, best_i


def replace_vertex_gamma(g: Graph, u: int, gamma_h: int, max_n: int = 14) -> int:
    """Grundy domination number after replacing vertex u by a graph with number gamma_h."""
    if gamma_h < 1:
        raise ValueError("gamma_h must be >= 1")
    whole, _ = gamma_gr_exact(g, max_n=max_n)
    rooted = gamma_gr_rooted(g, u, max_n=max_n)
    return max(whole, rooted + gamma_h - 1)
