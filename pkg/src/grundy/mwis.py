"""Maximum-weight independent set on powers of paths and cycles.

Weights are arbitrary integers. Independence in the m-th power means pairwise
index distance greater than m (circular distance for cycles). The empty set is
always admissible for the MWIS solvers, so their optimum is never negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import wrap


@dataclass(frozen=True)
class MwisResult:
    weight: int
    members: frozenset[int]

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def _check_weights(n: int, w: Sequence[int]) -> list[int]:
    if len(w) != n:
        raise ValueError(f"weight vector has {len(w)} entries for {n} vertices")
    return [0] + list(w)  # 1-indexed


def _path_dp(weights: list[int], m: int) -> tuple[int, list[int]]:
    """DP over a 0-padded 1-indexed weight list; ties prefer not taking a vertex."""
    n = len(weights) - 1
    best = [0] * (n + 1)
    for i in range(1, n + 1):
        take = (best[i - m - 1] if i - m - 1 >= 0 else 0) + weights[i]
        best[i] = max(best[i - 1], take)
    chosen = []
    i = n
    while i >= 1:
        if best[i] == best[i - 1]:
            i -= 1
        else:
            chosen.append(i)
            i -= m + 1
    chosen.reverse()
    return best[n], chosen


def mwis_path_power(n: int, m: int, w: Sequence[int]) -> MwisResult:
    """Maximum-weight independent set in the m-th power of the n-path."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    weights = _check_weights(n, w)
    value, chosen = _path_dp(weights, m)
    return MwisResult(value, frozenset(chosen))


def mwis_cycle_power(n: int, m: int, w: Sequence[int]) -> MwisResult:
    """Maximum-weight independent set in the m-th power of the n-cycle.

    Conditions on the (at most one) chosen vertex in the window [1, m+1]: each
    anchor v leaves a residual arc avoiding its closed neighborhood, which is an
    honest path-power instance; the anchor-free case restricts to [m+2, n].
    Anchored cases are tried first, in vertex order, then the anchor-free case;
    strictly better candidates replace the incumbent.
    """
    if n < 3 or m < 1:
        raise ValueError("need n >= 3 and m >= 1")
    weights = _check_weights(n, w)

    best_weight = None
    best_set: frozenset[int] = frozenset()
    arc_len = n - 2 * m - 1
    for v in range(1, min(m + 1, n) + 1):
        arc = [wrap(v + m + 1 + k, n) for k in range(max(arc_len, 0))]
        value, chosen = _path_dp([0] + [weights[u] for u in arc], m)
        cand_weight = weights[v] + value
        cand = frozenset([v] + [arc[k - 1] for k in chosen])
        if best_weight is None or cand_weight > best_weight:
            best_weight, best_set = cand_weight, cand
    free_arc = list(range(m + 2, n + 1))
    value, chosen = _path_dp([0] + [weights[u] for u in free_arc], m)
    if best_weight is None or value > best_weight:
        best_weight = value
        best_set = frozenset(free_arc[k - 1] for k in chosen)
    return MwisResult(best_weight, best_set)


def best_pair_cycle_power(n: int, m: int, w: Sequence[int]) -> MwisResult:
    """Best independent pair in the m-th power of the n-cycle (may be negative)."""
    if 2 * (m + 1) > n:
        raise ValueError(f"C_{n}^{m} has no independent pair")
    weights = _check_weights(n, w)
    best = None
    best_pair = None
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if j - i > m and n - (j - i) > m:
                value = weights[i] + weights[j]
                if best is None or value > best:
                    best, best_pair = value, (i, j)
    assert best_pair is not None
    return MwisResult(best, frozenset(best_pair))
