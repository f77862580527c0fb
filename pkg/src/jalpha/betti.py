"""Poincare polynomial of the nested-subspace variety X_alpha (type A_n) from
its torus fixed points, which are nested arrays of subsets T_{i,j} of a
totally ordered label set S = S_1 | ... | S_n.

Subsets are int bitmasks; bit s is the s-th smallest label.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .poly import IntPoly, ZERO
from .qseries import gaussian_binomial
from .rootsys import require_positive


@dataclass(frozen=True)
class LabelSet:
    sizes: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def block(self, k: int) -> int:
        """Mask of S_k (1-based)."""
        start = sum(self.sizes[: k - 1])
        return ((1 << self.sizes[k - 1]) - 1) << start

    def span(self, lo: int, hi: int) -> int:
        """Mask of S_lo | ... | S_hi (1-based, inclusive); empty if lo > hi."""
        m = 0
        for k in range(max(lo, 1), min(hi, len(self.sizes)) + 1):
            m |= self.block(k)
        return m


@dataclass(frozen=True)
class SubsetArray:
    """T_{i,j} for 1 <= i <= j <= n-1, keyed by (i, j)."""

    labels: LabelSet
    masks: tuple[tuple[tuple[int, int], int], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return dict(self.masks)[ij]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.masks)


def _positions(n: int) -> list[tuple[int, int]]:
    # parents (i-1, j) and (i, j+1) always come first
    return [(i, j) for j in range(n - 1, 0, -1) for i in range(1, j + 1)]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _inversions(new: int, gap: int) -> int:
    """Pairs (s, t) with s in new, t in gap and s > t."""
    return sum(bin(gap & ((1 << s) - 1)).count("1") for s in _bits(new))


def _allowed(labels: LabelSet, n: int, T: dict, i: int, j: int) -> int:
    allowed = labels.span(1, n)
    if i == 1:
        allowed &= labels.span(1, j + 1)
    else:
        allowed &= T[(i - 1, j)]
    if j == n - 1:
        allowed &= labels.span(i, n)
    else:
        allowed &= T[(i, j + 1)]
    return allowed


def _outer(labels: LabelSet, T: dict, i: int, j: int) -> int:
    """T_{i-1, j} with T_{0, j} = S_1 | ... | S_{j+1}."""
    return labels.span(1, j + 1) if i == 1 else T[(i - 1, j)]


def _walk(alpha: tuple[int, ...], with_dim: bool) -> Iterator[tuple[dict, int]]:
    n = len(alpha)
    labels = LabelSet(alpha)
    positions = _positions(n)
    sizes = {(i, j): sum(alpha[i - 1 : j]) for (i, j) in positions}
    offset = sum(alpha[i] * alpha[j] for i in range(n - 1) for j in range(i + 1, n - 1))
    T: dict[tuple[int, int], int] = {}

    def rec(k: int, partial: int):
        if k == len(positions):
            yield dict(T), partial - offset
            return
        i, j = positions[k]
        pool = _bits(_allowed(labels, n, T, i, j))
        for combo in itertools.combinations(pool, sizes[(i, j)]):
            mask = 0
            for s in combo:
                mask |= 1 << s
            T[(i, j)] = mask
            extra = 0
            if with_dim:
                if i == j:
                    extra += _inversions(mask, _outer(labels, T, i, i) & ~mask)
                if j < n - 1:
                    upper = T[(i, j + 1)]
                    extra += _inversions(upper & ~mask, _outer(labels, T, i, j + 1) & ~upper)
            yield from rec(k + 1, partial + extra)
        T.pop((i, j), None)

    yield from rec(0, 0)


def enumerate_fixed_points(alpha: Sequence[int]) -> Iterator[SubsetArray]:
    """Every admissible subset array; for n = 1 a single empty array."""
    alpha = require_positive(alpha)
    labels = LabelSet(alpha)
    for T, _ in _walk(alpha, with_dim=False):
        yield SubsetArray(labels, tuple(sorted(T.items())))


def bb_dimension(arr: SubsetArray) -> int:
    """d_T = sum_{i <= j} d_T^{i,j} - sum_{i < j <= n-1} a_i a_j."""
    labels = arr.labels
    a = labels.sizes
    n = len(a)
    T = arr.as_dict()
    total = 0
    for (i, j), mask in T.items():
        inner = T[(i, j - 1)] if j - 1 >= i else 0
        total += _inversions(mask & ~inner, _outer(labels, T, i, j) & ~mask)
    return total - sum(a[i] * a[j] for i in range(n - 1) for j in range(i + 1, n - 1))


def poincare_polynomial(alpha: Sequence[int]) -> IntPoly:
    """sum over fixed points of q^{d_T}, with q standing for t^2."""
    counts = Counter(d for _, d in _walk(require_positive(alpha), with_dim=True))
    if not counts:
        return ZERO
    return IntPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def euler_characteristic(alpha: Sequence[int]) -> int:
    return sum(1 for _ in _walk(require_positive(alpha), with_dim=False))


def variety_dimension(alpha: Sequence[int]) -> int:
    return sum(alpha[i] * alpha[i + 1] for i in range(len(alpha) - 1))


def nanjundiah_sides(i: int, j: int, a: int) -> tuple[IntPoly, IntPoly]:
    """Both sides of sum_k [i,k][a-i,j-k][a+k,a] q^{(i-k)(j-k)} = [a,j][i+j,j]."""
    lhs = ZERO
    for k in range(0, min(i, j) + 1):
        term = gaussian_binomial(i, k) * gaussian_binomial(a - i, j - k) * gaussian_binomial(a + k, a)
        lhs = lhs + term.shift((i - k) * (j - k))
    rhs = gaussian_binomial(a, j) * gaussian_binomial(i + j, j)
    return lhs, rhs
