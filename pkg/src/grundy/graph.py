"""Simple undirected graphs on vertex set {1..n}, structured families, and set predicates.

Vertices are 1-indexed throughout; cycle arithmetic maps residues onto the
representatives 1..n (so n+1 wraps to 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

PATH_POWER = "path_power"
CYCLE_POWER = "cycle_power"
COMPLETE = "complete"
EDGELESS = "edgeless"
CO_PATH = "co_path"
CO_CYCLE = "co_cycle"

_KINDS = (PATH_POWER, CYCLE_POWER, COMPLETE, EDGELESS, CO_PATH, CO_CYCLE)
_CYCLE_KINDS = (CYCLE_POWER, CO_CYCLE)

DEFAULT_ENUMERATION_LIMIT = 20


class GraphFormatError(ValueError):
    """Raised for malformed graph text input."""


class EnumerationLimitError(ValueError):
    """Raised when an exhaustive enumeration is asked for a graph above its size limit."""


def wrap(v: int, n: int) -> int:
    """Map an integer onto the cyclic representatives 1..n."""
    return (v - 1) % n + 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``n`` vertices named 1..n, ``adj[v]`` the open neighborhood."""

    n: int
    adj: tuple[frozenset[int], ...]  # index 0 unused

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n + 1:
            raise ValueError("adjacency table must have n+1 entries (slot 0 unused)")
        for v in self.vertices():
            if v in self.adj[v]:
                raise ValueError(f"self-loop at vertex {v}")
            for u in self.adj[v]:
                if not 1 <= u <= self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in self.vertices() for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(self.adj[v]) for v in self.vertices()) // 2

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.n):
            raise ValueError(f"vertex {v!r} out of range 1..{self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list; rejects loops and out-of-range endpoints."""
    nbrs: list[set[int]] = [set() for _ in range(n + 1)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


@dataclass(frozen=True)
class StructuredKind:
    """A parametric graph family member: kind, order n, and power exponent m.

    ``m`` is meaningful for path_power / cycle_power and fixed to 1 otherwise.
    """

    kind: str
    n: int
    m: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("order must be at least 1")
        if self.m < 1:
            raise ValueError("power exponent must be at least 1")
        if self.kind in _CYCLE_KINDS and self.n < 3:
            raise ValueError(f"{self.kind} requires n >= 3")


def make_structured(spec: StructuredKind) -> Graph:
    """Construct the graph described by ``spec``.

    Power graphs join vertices at (circular) base distance at most m; co_path
    and co_cycle are edge-complements of the plain path and cycle.
    """
    n, m = spec.n, spec.m
    if spec.kind == PATH_POWER:
        return graph_from_edges(
            n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, min(i + m, n) + 1))
        )
    if spec.kind == CYCLE_POWER:
        edges = set()
        for i in range(1, n + 1):
            for d in range(1, m + 1):
                j = wrap(i + d, n)
                if j != i:
                    edges.add((min(i, j), max(i, j)))
        return graph_from_edges(n, edges)
    if spec.kind == COMPLETE:
        return graph_from_edges(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))
    if spec.kind == EDGELESS:
        return graph_from_edges(n, ())
    if spec.kind == CO_PATH:
        return complement(make_structured(StructuredKind(PATH_POWER, n, 1)))
    if spec.kind == CO_CYCLE:
        return complement(make_structured(StructuredKind(CYCLE_POWER, n, 1)))
    raise AssertionError(spec.kind)


def path_power(n: int, m: int = 1) -> Graph:
    return make_structured(StructuredKind(PATH_POWER, n, m))


def cycle_power(n: int, m: int = 1) -> Graph:
    return make_structured(StructuredKind(CYCLE_POWER, n, m))


def complete_graph(n: int) -> Graph:
    return make_structured(StructuredKind(COMPLETE, n))


def edgeless_graph(n: int) -> Graph:
    return make_structured(StructuredKind(EDGELESS, n))


def complement(g: Graph) -> Graph:
    full = frozenset(g.vertices())
    return Graph(g.n, (frozenset(),) + tuple(full - g.adj[v] - {v} for v in g.vertices()))


def induced_subgraph(g: Graph, u: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``u``, plus the relabeling map old -> new.

    The new graph lives on 1..|u|; sorted(u) maps onto 1,2,... in order.
    """
    members = sorted(set(u))
    for v in members:
        g.check_vertex(v)
    relabel = {v: i + 1 for i, v in enumerate(members)}
    kept = set(members)
    adj = [frozenset()]
    for v in members:
        adj.append(frozenset(relabel[w] for w in g.adj[v] if w in kept))
    return Graph(len(members), tuple(adj)), relabel


def is_independent(g: Graph, u: Iterable[int]) -> bool:
    members = list(set(u))
    for v in members:
        g.check_vertex(v)
    return all(not g.has_edge(a, b) for i, a in enumerate(members) for b in members[i + 1 :])


def independent_sets(
    g: Graph, min_size: int = 0, max_n: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[frozenset[int]]:
    """Yield every independent set of size >= min_size, each exactly once.

    Order is lexicographic on the sorted membership tuple, which downstream
    tie-breaking relies on. Refuses graphs with more than ``max_n`` vertices.
    """
    if g.n > max_n:
        raise EnumerationLimitError(
            f"independent-set enumeration limited to {max_n} vertices (graph has {g.n})"
        )

    def extend(prefix: list[int], banned: frozenset[int], start: int) -> Iterator[frozenset[int]]:
        if len(prefix) >= min_size:
            yield frozenset(prefix)
        for v in range(start, g.n + 1):
            if v not in banned:
                prefix.append(v)
                yield from extend(prefix, banned | g.adj[v], v + 1)
                prefix.pop()

    yield from extend([], frozenset(), 1)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Connectivity partition of the vertex set, ordered by smallest member."""
    seen: set[int] = set()
    parts = []
    for root in g.vertices():
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return parts


def is_modular(g: Graph) -> bool:
    """True when both the graph and its complement are connected."""
    return len(connected_components(g)) == 1 and len(connected_components(complement(g))) == 1


# --- graph text format (shared with the CLI) ---------------------------------
#
#   p <n> <edge-count>
#   e <u> <v>          (one line per edge, 1-indexed)
#
# Duplicate and reversed duplicate edge lines are rejected.


def parse_graph_text(text: str) -> Graph:
    n = -1
    expected_edges = -1
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'p <n> <edge-count>'")
            try:
                n, expected_edges = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer problem parameters") from None
            if n < 0 or expected_edges < 0:
                raise GraphFormatError(f"line {lineno}: negative problem parameters")
        elif parts[0] == "e":
            if n < 0:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer edge endpoints") from None
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: edge ({u},{v}) out of range 1..{n}")
            key = (min(u, v), max(u, v))
            if key in edges:
                raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
            edges.add(key)
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized line {line!r}")
    if n < 0:
        raise GraphFormatError("missing problem line 'p <n> <edge-count>'")
    if len(edges) != expected_edges:
        raise GraphFormatError(f"problem line declares {expected_edges} edges, found {len(edges)}")
    return graph_from_edges(n, edges)


def read_graph_file(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.edge_count()}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
