"""Explicit numerators in type A_n: triangular arrays, the rank-peeling
recursion for H_alpha, and the Narayana / Apery special cases.

A triangular array ``m`` is stored as a tuple of rows, ``rows[k-1]`` being
row k (length k); the top row n is alpha itself.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .poly import ONE, ZERO, IntPoly
from .qseries import gaussian_binomial
from .rootsys import require_positive


@dataclass(frozen=True)
class TriangularArray:
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ki: tuple[int, int]) -> int:
        """m[k, i] with 1-based indices as in the formula."""
        k, i = ki
        return self.rows[k - 1][i - 1]

    def is_valid(self) -> bool:
        for k in range(1, self.n):
            row, up = self.rows[k - 1], self.rows[k]
            if len(row) != k:
                return False
            if any(x < 0 or x > up[i] or x > up[i + 1] for i, x in enumerate(row)):
                return False
        return True


def enumerate_arrays(alpha: Sequence[int]) -> Iterator[TriangularArray]:
    """All arrays with top row alpha and m_{k,i} <= m_{k+1,i}, m_{k+1,i+1}."""
    top = require_positive(alpha)
    n = len(top)
    if n == 0:
        yield TriangularArray(())
        return

    def descend(row: tuple[int, ...], below: list[tuple[int, ...]]):
        if len(row) == 1:
            yield TriangularArray(tuple(reversed(below)))
            return
        bounds = [range(min(row[i], row[i + 1]) + 1) for i in range(len(row) - 1)]
        for nxt in itertools.product(*bounds):
            yield from descend(nxt, below + [nxt])

    yield from descend(top, [top])


def d_statistic(m: TriangularArray) -> int:
    """D(m) = sum over rows k < n of sum m_{k,i}^2 - sum m_{k,i} m_{k,i+1}."""
    total = 0
    for row in m.rows[:-1]:
        total += sum(x * x for x in row) - sum(row[i] * row[i + 1] for i in range(len(row) - 1))
    return total


def array_weight(m: TriangularArray) -> IntPoly:
    """q^D(m) times the product of Gaussian binomials attached to m."""
    w = ONE
    for k in range(m.n - 1):
        row, up = m.rows[k], m.rows[k + 1]
        for i, x in enumerate(row):
            w = w * gaussian_binomial(up[i], x) * gaussian_binomial(up[i + 1], x)
    return w.shift(d_statistic(m))


def h_direct(alpha: Sequence[int]) -> IntPoly:
    """Numerator as a sum over all triangular arrays."""
    total = ZERO
    for m in enumerate_arrays(alpha):
        total = total + array_weight(m)
    return total


def _norm_half_a(b: Sequence[int]) -> int:
    return sum(x * x for x in b) - sum(b[i] * b[i + 1] for i in range(len(b) - 1))


@lru_cache(maxsize=None)
def _h_rec(alpha: tuple[int, ...]) -> IntPoly:
    n = len(alpha)
    if n == 0:
        return ONE
    total = ZERO
    ranges = [range(min(alpha[j], alpha[j + 1]) + 1) for j in range(n - 1)]
    for beta in itertools.product(*ranges):
        w = ONE
        for j, b in enumerate(beta):
            w = w * gaussian_binomial(alpha[j], b) * gaussian_binomial(alpha[j + 1], b)
        total = total + (w * _h_rec(beta)).shift(_norm_half_a(beta))
    return total


def h_recursive(alpha: Sequence[int]) -> IntPoly:
    """Numerator by peeling off one rank at a time (the production path)."""
    return _h_rec(require_positive(alpha))


def h_a3_closed_form(a1: int, a2: int, a3: int) -> IntPoly:
    """Type A_3 double sum with the inner sum collapsed to [i+j choose i]."""
    total = ZERO
    for i in range(min(a1, a2) + 1):
        for j in range(min(a2, a3) + 1):
            w = (
                gaussian_binomial(a1, i)
                * gaussian_binomial(a2, i)
                * gaussian_binomial(a2, j)
                * gaussian_binomial(a3, j)
                * gaussian_binomial(i + j, i)
            )
            total = total + w.shift(i * i + j * j - i * j)
    return total


def k_alpha_arrays(alpha: Sequence[int]) -> Fraction:
    """K_alpha as the ordinary-binomial array sum over prod (a_i!)^2."""
    total = 0
    for m in enumerate_arrays(alpha):
        w = 1
        for k in range(m.n - 1):
            row, up = m.rows[k], m.rows[k + 1]
            for i, x in enumerate(row):
                w *= comb(up[i], x) * comb(up[i + 1], x)
        total += w
    return Fraction(total, prod(factorial(x) for x in alpha) ** 2)


# -- Dyck paths ------------------------------------------------------------


@dataclass(frozen=True)
class DyckPath:
    """Steps +1 (up) / -1 (down); never below the axis, ends at height 0."""

    steps: tuple[int, ...]

    def is_valid(self) -> bool:
        h = 0
        for s in self.steps:
            if s not in (1, -1):
                return False
            h += s
            if h < 0:
                return False
        return h == 0


def dyck_paths(n: int) -> Iterator[DyckPath]:
    def walk(prefix: list[int], ups: int, downs: int):
        if ups == downs == n:
            yield DyckPath(tuple(prefix))
            return
        if ups < n:
            yield from walk(prefix + [1], ups + 1, downs)
        if downs < ups:
            yield from walk(prefix + [-1], ups, downs + 1)

    yield from walk([], 0, 0)


def dyck_valley_statistic(path: DyckPath) -> int:
    """Number of valleys: a down step immediately followed by an up step."""
    s = path.steps
    return sum(1 for k in range(len(s) - 1) if s[k] == -1 and s[k + 1] == 1)


def narayana_polynomial(n: int) -> IntPoly:
    """sum over Dyck paths of length 2n of q^(n - 1 - valleys)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = Counter(n - 1 - dyck_valley_statistic(p) for p in dyck_paths(n))
    return IntPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def apery_numerator_at_one(m: int) -> int:
    """H_alpha(1) for alpha = m(alpha_1 + alpha_2 + alpha_3)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return sum(h_recursive((m, m, m)).c)

