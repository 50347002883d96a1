"""Modular decomposition and the recursive Grundy domination solver.

Disconnected graphs split into parallel nodes, co-disconnected ones into series
nodes; otherwise the maximal proper modules are computed by splitter closure
and the prime quotient is solved through the appropriate closed-form solver or,
below a size threshold, the exhaustive per-set evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .graph import Graph, complement
from .oracle import (
    SequenceViolation,
    VertexSequence,
    gamma_gr_given_I,
    gamma_gr_given_I_witness,
    verify_sequence,
)
from .powers import solve_xjoin_cycle_power, solve_xjoin_path_power
from .products import xjoin_gamma_generic
from .split import solve_xjoin_split, split_recognize

DEFAULT_PRIME_THRESHOLD = 14

LEAF = "leaf"
PARALLEL = "parallel"
SERIES = "series"
PRIME = "prime"


class IntractablePrimeError(ValueError):
    """Raised when an unrecognized prime quotient exceeds the brute-force threshold."""


class SolverInconsistencyError(RuntimeError):
    """Raised when an assembled witness fails re-verification; indicates a bug."""


@dataclass(frozen=True)
class ModuleTree:
    """Decomposition tree node over original vertex labels.

    Prime nodes carry a quotient graph whose vertex j corresponds to the j-th
    child; children are ordered by smallest contained vertex.
    """

    kind: str
    vertices: frozenset[int]
    children: tuple[ModuleTree, ...] = ()
    quotient: Optional[Graph] = None

    @property
    def leaf_vertex(self) -> int:
        assert self.kind == LEAF
        return next(iter(self.vertices))


def _components_within(
    members: list[int], neighbors: Callable[[int], Iterable[int]]
) -> list[list[int]]:
    inside = set(members)
    seen: set[int] = set()
    parts = []
    for root in members:
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in neighbors(v):
                if w in inside and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        parts.append(sorted(comp))
    return parts


def _min_module(g: Graph, universe: list[int], u: int, v: int) -> set[int]:
    """Smallest module of g[universe] containing both u and v (splitter closure)."""
    module = {u, v}
    while len(module) < len(universe):
        splitters = []
        for z in universe:
            if z in module:
                continue
            flags = {g.has_edge(z, a) for a in module}
            if len(flags) > 1:
                splitters.append(z)
        if not splitters:
            break
        module.update(splitters)
    return module


def _maximal_modules(g: Graph, members: list[int]) -> list[list[int]]:
    """Maximal proper strong modules of a connected, co-connected induced subgraph.

    Two vertices share a class iff their minimal containing module is proper;
    absorbing that whole module at once keeps the scan near-linear in practice.
    """
    classes: list[list[int]] = []
    unassigned = list(members)
    while unassigned:
        u = unassigned[0]
        cls = {u}
        for v in unassigned[1:]:
            if v in cls:
                continue
            module = _min_module(g, members, u, v)
            if len(module) < len(members):
                cls |= module
        classes.append(sorted(cls))
        unassigned = [x for x in unassigned if x not in cls]
    return classes


def _decompose(g: Graph, members: list[int]) -> ModuleTree:
    if len(members) == 1:
        return ModuleTree(LEAF, frozenset(members))
    inside = set(members)
    comps = _components_within(members, lambda v: g.adj[v])
    if len(comps) > 1:
        kind, parts = PARALLEL, comps
    else:
        co_comps = _components_within(members, lambda v: inside - g.adj[v] - {v})
        if len(co_comps) > 1:
            kind, parts = SERIES, co_comps
        else:
            classes = _maximal_modules(g, members)
            assert len(classes) >= 4, "prime quotient must have at least four vertices"
            reps = [cls[0] for cls in classes]
            k = len(classes)
            adj: list[set[int]] = [set() for _ in range(k + 1)]
            for a in range(k):
                for b in range(a + 1, k):
                    if g.has_edge(reps[a], reps[b]):
                        adj[a + 1].add(b + 1)
                        adj[b + 1].add(a + 1)
            quotient = Graph(k, tuple(frozenset(s) for s in adj))
            children = tuple(_decompose(g, cls) for cls in classes)
            return ModuleTree(PRIME, frozenset(members), children, quotient)
    parts.sort(key=min)
    children = tuple(_decompose(g, part) for part in parts)
    return ModuleTree(kind, frozenset(members), children)


def decompose(g: Graph) -> ModuleTree:
    if g.n == 0:
        raise ValueError("cannot decompose the empty graph")
    return _decompose(g, sorted(g.vertices()))


def _path_order(q: Graph) -> Optional[list[int]]:
    """Vertex order of q as a path, or None; starts at the smaller endpoint."""
    if q.n == 1:
        return [1]
    ends = sorted(v for v in q.vertices() if q.degree(v) == 1)
    if len(ends) != 2 or any(q.degree(v) != 2 for v in q.vertices() if v not in ends):
        return None
    order = [ends[0]]
    prev = None
    while len(order) < q.n:
        nxt = [w for w in q.adj[order[-1]] if w != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order if order[-1] == ends[1] else None


def _cycle_order(q: Graph) -> Optional[list[int]]:
    """Vertex order of q as a cycle, or None; starts at 1 toward its smaller neighbor."""
    if q.n < 3 or any(q.degree(v) != 2 for v in q.vertices()):
        return None
    order = [1]
    prev = None
    while len(order) < q.n:
        choices = sorted(w for w in q.adj[order[-1]] if w != prev)
        nxt = choices[0] if choices else None
        if nxt is None or (nxt in order):
            return None
        prev = order[-1]
        order.append(nxt)
    return order if q.has_edge(order[-1], order[0]) else None


def _permute_profile(profile: list[int], order: list[int]) -> list[int]:
    return [profile[v - 1] for v in order]


def _solve_prime(
    quotient: Graph, profile: list[int], prime_threshold: int
) -> tuple[int, tuple[int, ...], VertexSequence]:
    """Gamma, argmax set, and skeleton sequence for a prime quotient (quotient labels)."""
    k = quotient.n
    partition = split_recognize(quotient)
    if partition is not None:
        res = solve_xjoin_split(quotient, partition, profile)
        return res.gamma, res.argmax_i, res.main_sequence

    order = _path_order(quotient)
    if order is not None:
        res = solve_xjoin_path_power(k, 1, _permute_profile(profile, order))
        argmax = tuple(sorted(order[p - 1] for p in res.argmax_i))
        skeleton = VertexSequence(tuple(order[p - 1] for p in res.main_sequence))
        return res.gamma, argmax, skeleton

    order = _cycle_order(quotient)
    if order is not None:
        res = solve_xjoin_cycle_power(k, 1, _permute_profile(profile, order))
        argmax = tuple(sorted(order[p - 1] for p in res.argmax_i))
        skeleton = VertexSequence(tuple(order[p - 1] for p in res.main_sequence))
        return res.gamma, argmax, skeleton

    if all(gamma == 1 for gamma in profile):
        co = complement(quotient)
        order = _path_order(co) or _cycle_order(co)
        if order is not None and k >= 5:
            # complement of a path/cycle on >= 5 vertices: value 3, pattern (2,4,3)
            skeleton = VertexSequence((order[1], order[3], order[2]))
            return 3, (), skeleton

    if k <= prime_threshold:
        gamma, argmax = xjoin_gamma_generic(
            quotient, profile, lambda i: gamma_gr_given_I(quotient, i, max_n=prime_threshold)
        )
        found = gamma_gr_given_I_witness(quotient, argmax, max_n=prime_threshold)
        assert found is not None
        _, skeleton = found
        return gamma, tuple(sorted(argmax)), skeleton

    raise IntractablePrimeError(
        f"prime quotient with {k} vertices is unrecognized and exceeds threshold {prime_threshold}"
    )


def _solve_node(t: ModuleTree, prime_threshold: int) -> tuple[int, VertexSequence]:
    if t.kind == LEAF:
        return 1, VertexSequence((t.leaf_vertex,))
    solved = [_solve_node(c, prime_threshold) for c in t.children]
    if t.kind == PARALLEL:
        witness = VertexSequence()
        for _, child_witness in solved:
            witness = witness.concat(child_witness)
        return sum(gamma for gamma, _ in solved), witness
    if t.kind == SERIES:
        best = max(gamma for gamma, _ in solved)
        for gamma, child_witness in solved:
            if gamma == best:
                return best, child_witness
    assert t.kind == PRIME and t.quotient is not None
    profile = [gamma for gamma, _ in solved]
    gamma, argmax, skeleton = _solve_prime(t.quotient, profile, prime_threshold)
    expand = set(argmax)
    lifted: list[int] = []
    for qv in skeleton:
        if qv in expand:
            lifted.extend(solved[qv - 1][1])
        else:
            lifted.append(min(t.children[qv - 1].vertices))
    return gamma, VertexSequence(tuple(lifted))


def solve_tree(
    t: ModuleTree, prime_threshold: int = DEFAULT_PRIME_THRESHOLD
) -> tuple[int, VertexSequence]:
    return _solve_node(t, prime_threshold)


def solve(
    g: Graph, prime_threshold: int = DEFAULT_PRIME_THRESHOLD
) -> tuple[int, VertexSequence]:
    """Decompose, solve, and re-verify; the returned witness is always certified."""
    gamma, witness = solve_tree(decompose(g), prime_threshold)
    cert = verify_sequence(g, witness)
    if isinstance(cert, SequenceViolation) or len(witness) != gamma:
        raise SolverInconsistencyError(
            f"assembled witness of length {len(witness)} failed certification for gamma={gamma}"
        )
    return gamma, witness


def tree_node_counts(t: ModuleTree) -> dict[str, int]:
    counts = {LEAF: 0, PARALLEL: 0, SERIES: 0, PRIME: 0}

    def walk(node: ModuleTree) -> None:
        counts[node.kind] += 1
        for c in node.children:
            walk(c)

    walk(t)
    return counts


def tree_to_json(t: ModuleTree):
    """Nested-dict form: {kind, quotient_edges?, children[]}; leaves carry their vertex."""
    if t.kind == LEAF:
        return {"kind": LEAF, "vertex": t.leaf_vertex}
    node = {"kind": t.kind, "children": [tree_to_json(c) for c in t.children]}
    if t.kind == PRIME:
        assert t.quotient is not None
        node["quotient_edges"] = [[u, v] for u, v in t.quotient.edges()]
    return node
