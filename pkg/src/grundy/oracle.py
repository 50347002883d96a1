"""Ground truth for Grundy domination: legality certificates and exhaustive search.

A sequence of distinct vertices is legal dominating when every step footprints
at least one newly dominated vertex and the underlying set dominates the graph.
The exact searches below enumerate such sequences with a bitmask DFS, memoizing
the best achievable suffix per (dominated-set, used-set) state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, is_independent

DEFAULT_ORACLE_LIMIT = 14
DEFAULT_MEMO_LIMIT = 1 << 20


class OracleLimitError(ValueError):
    """Raised when an exact search is requested above the configured size limit."""


@dataclass(frozen=True)
class VertexSequence:
    """Ordered list of distinct vertices with 1-based order lookup and concatenation."""

    items: tuple[int, ...] = ()

    def __post_init__(self):
        if len(set(self.items)) != len(self.items):
            raise ValueError(f"repeated vertex in sequence {self.items}")

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.items)

    def order_of(self, v: int) -> int:
        """1-based position of v; raises for vertices not in the sequence."""
        return self.items.index(v) + 1

    def concat(self, other: VertexSequence) -> VertexSequence:
        if self.vertex_set & other.vertex_set:
            raise ValueError("concatenation requires vertex-disjoint sequences")
        return VertexSequence(self.items + other.items)

    def __add__(self, other: VertexSequence) -> VertexSequence:
        return self.concat(other)

    def reverse(self) -> VertexSequence:
        return VertexSequence(self.items[::-1])

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, idx):
        return self.items[idx]

    def __contains__(self, v) -> bool:
        return v in self.items

    def __repr__(self) -> str:
        return "seq(" + ",".join(map(str, self.items)) + ")"


def seq(*vertices: int) -> VertexSequence:
    return VertexSequence(tuple(vertices))


@dataclass(frozen=True)
class FootprintCertificate:
    """Witness that a sequence is legal dominating.

    ``private[k]`` is the private neighborhood of the k-th sequence vertex
    (closed neighborhood minus everything dominated earlier); the private sets
    partition V. ``footprinter`` maps each vertex to the sequence vertex that
    first dominated it, and ``self_set`` collects the self-footprinted vertices.
    """

    sequence: VertexSequence
    private: tuple[frozenset[int], ...]
    footprinter: dict[int, int]
    self_set: frozenset[int]


@dataclass(frozen=True)
class SequenceViolation:
    """Why a sequence is not legal dominating.

    kind is "empty_private" (with the offending 1-based position) or
    "not_dominating" (with the undominated vertex set).
    """

    kind: str
    position: int = 0
    undominated: frozenset[int] = frozenset()

    def describe(self) -> str:
        if self.kind == "empty_private":
            return f"empty private neighborhood at position {self.position}"
        return "not dominating; undominated vertices " + str(sorted(self.undominated))


def verify_sequence(g: Graph, s: VertexSequence) -> FootprintCertificate | SequenceViolation:
    """Check legality of ``s`` on ``g``; return a certificate or the first violation."""
    for v in s:
        g.check_vertex(v)

    dominated: set[int] = set()
    private: list[frozenset[int]] = []
    footprinter: dict[int, int] = {}
    for pos, v in enumerate(s, 1):
        pn = g.closed_neighborhood(v) - dominated
        if not pn:
            return SequenceViolation("empty_private", position=pos)
        private.append(pn)
        for w in pn:
            footprinter[w] = v
        dominated |= pn
    if len(dominated) != g.n:
        missing = frozenset(g.vertices()) - dominated
        return SequenceViolation("not_dominating", undominated=missing)
    self_set = frozenset(v for v in s if footprinter[v] == v)
    return FootprintCertificate(s, tuple(private), footprinter, self_set)


def _closed_masks(g: Graph) -> list[int]:
    masks = [0] * (g.n + 1)
    for v in g.vertices():
        m = 1 << (v - 1)
        for w in g.adj[v]:
            m |= 1 << (w - 1)
        masks[v] = m
    return masks


def _search(
    g: Graph,
    target_bits: Optional[int] = None,
    root_bit: int = 0,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
) -> tuple[int, tuple[int, ...]]:
    """Longest legal dominating sequence, optionally constrained on self-footprinters.

    target_bits fixes the exact self-footprint set; root_bit only requires one
    vertex to be in it. Returns (-1, ()) when no legal sequence satisfies the
    constraint. Among maximum-length sequences the lexicographically smallest
    is returned (children are explored in vertex order and ties keep the first
    hit, which the counting bound never skips in favor of a later sibling).
    """
    n = g.n
    full = (1 << n) - 1
    closed = _closed_masks(g)
    memo: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}

    def best_suffix(used: int, dominated: int) -> tuple[int, tuple[int, ...]]:
        key = (dominated, used)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if dominated == full:
            result = (0, ())
        else:
            best_len = -1
            best_tail: tuple[int, ...] = ()
            for v in range(1, n + 1):
                bit = 1 << (v - 1)
                if used & bit:
                    continue
                newdom = dominated | closed[v]
                if newdom == dominated:
                    continue  # empty private neighborhood
                undominated_before = not (dominated & bit)
                if target_bits is not None:
                    # v self-footprints iff undominated; that must agree with membership
                    if (bit & target_bits != 0) != undominated_before:
                        continue
                    # members not yet placed must stay undominated
                    if target_bits & ~(used | bit) & newdom:
                        continue
                if root_bit and not ((used | bit) & root_bit) and (newdom & root_bit):
                    continue
                if root_bit and bit == root_bit and not undominated_before:
                    continue
                if 1 + n - newdom.bit_count() <= best_len:
                    continue
                tail_len, tail = best_suffix(used | bit, newdom)
                if tail_len >= 0 and 1 + tail_len > best_len:
                    best_len = 1 + tail_len
                    best_tail = (v,) + tail
            result = (best_len, best_tail)
        if len(memo) < memo_limit:
            memo[key] = result
        return result

    return best_suffix(0, 0)


def _check_limit(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise OracleLimitError(f"exact search limited to {max_n} vertices (graph has {g.n})")


def gamma_gr_exact(
    g: Graph, max_n: int = DEFAULT_ORACLE_LIMIT, memo_limit: int = DEFAULT_MEMO_LIMIT
) -> tuple[int, VertexSequence]:
    """Grundy domination number with a lexicographically smallest witness."""
    _check_limit(g, max_n)
    length, tail = _search(g, memo_limit=memo_limit)
    if length < 0:
        raise AssertionError("no legal dominating sequence on a nonempty graph")
    return length, VertexSequence(tail)


def _search_given_I(
    g: Graph, i: Iterable[int], max_n: int, memo_limit: int
) -> tuple[int, tuple[int, ...]]:
    _check_limit(g, max_n)
    members = frozenset(i)
    if not is_independent(g, members):
        raise ValueError(f"target set {sorted(members)} is not independent")
    bits = 0
    for v in members:
        bits |= 1 << (v - 1)
    return _search(g, target_bits=bits, memo_limit=memo_limit)


def gamma_gr_given_I(
    g: Graph,
    i: Iterable[int],
    max_n: int = DEFAULT_ORACLE_LIMIT,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
) -> Optional[int]:
    """Longest legal dominating sequence whose self-footprint set is exactly ``i``.

    Returns None when no such sequence exists (the -infinity case).
    """
    length, _ = _search_given_I(g, i, max_n, memo_limit)
    return None if length < 0 else length


def gamma_gr_given_I_witness(
    g: Graph,
    i: Iterable[int],
    max_n: int = DEFAULT_ORACLE_LIMIT,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
) -> Optional[tuple[int, VertexSequence]]:
    """Like gamma_gr_given_I but also returns a maximum-length witness."""
    length, tail = _search_given_I(g, i, max_n, memo_limit)
    return None if length < 0 else (length, VertexSequence(tail))


def gamma_gr_rooted(
    g: Graph, u: int, max_n: int = DEFAULT_ORACLE_LIMIT, memo_limit: int = DEFAULT_MEMO_LIMIT
) -> int:
    """Longest legal dominating sequence whose self-footprint set contains ``u``."""
    _check_limit(g, max_n)
    g.check_vertex(u)
    length, _ = _search(g, root_bit=1 << (u - 1), memo_limit=memo_limit)
    if length < 0:
        raise AssertionError("rooted search is always feasible on a nonempty graph")
    return length
