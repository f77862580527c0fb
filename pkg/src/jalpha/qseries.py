"""q-combinatorics: Pochhammer products, Gaussian binomials, truncated series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .poly import ONE, ZERO, IntPoly, RatFunc, divisors
from .rootsys import RootSystemSpec, require_positive


@lru_cache(maxsize=None)
def one_minus_q_power(k: int) -> IntPoly:
    """1 - q**k."""
    return IntPoly.monomial(0) - IntPoly.monomial(k) if k else ZERO


@lru_cache(maxsize=None)
def q_factorial_product(d: int, a: int) -> IntPoly:
    """prod_{j=1..a} (1 - q**(d j))."""
    if a == 0:
        return ONE
    return q_factorial_product(d, a - 1) * one_minus_q_power(d * a)


def q_pochhammer_alpha(spec: RootSystemSpec, alpha: Sequence[int]) -> IntPoly:
    """(q)_alpha = prod_i prod_{j<=a_i} (1 - q**(d_i j))."""
    a = require_positive(spec.check(alpha))
    out = ONE
    for d, x in zip(spec.symmetrizers, a):
        if x:
            out = out * q_factorial_product(d, x)
    return out


def pochhammer_cyclotomic_exponents(spec: RootSystemSpec, alpha: Sequence[int]) -> dict[int, int]:
    """Exponents e with (q)_alpha = (-1)**|alpha| prod Phi_m**e_m."""
    exps: dict[int, int] = {}
    for d, x in zip(spec.symmetrizers, alpha):
        for j in range(1, x + 1):
            for m in divisors(d * j):
                exps[m] = exps.get(m, 0) + 1
    return exps


@lru_cache(maxsize=None)
def gaussian_binomial(a: int, b: int) -> IntPoly:
    """[a choose b]_q via the q-Pascal rule; 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return ZERO
    if b == 0 or b == a:
        return ONE
    # [a, b] = [a-1, b] + q^(a-b) [a-1, b-1]
    return gaussian_binomial(a - 1, b) + gaussian_binomial(a - 1, b - 1).shift(a - b)


def gaussian_binomial_quotient(a: int, b: int) -> IntPoly:
    """Same value from the product formula; used as an independent check."""
    if b < 0 or b > a:
        return ZERO
    num = q_factorial_product(1, a)
    den = q_factorial_product(1, b) * q_factorial_product(1, a - b)
    return num // den


# -- predicates ---------------------------------------------------------------


def is_palindromic(p: IntPoly) -> bool:
    return p.c == p.c[::-1]


def is_unimodal(p: IntPoly) -> bool:
    """Coefficients weakly increase, then weakly decrease."""
    c = p.c
    k = 0
    while k + 1 < len(c) and c[k] <= c[k + 1]:
        k += 1
    while k + 1 < len(c) and c[k] >= c[k + 1]:
        k += 1
    return k + 1 >= len(c)


def eval_at_one(p: IntPoly) -> int:
    return sum(p.c)


def invert_q(f: RatFunc) -> RatFunc:
    """f(1/q) as a reduced rational function."""
    if not f:
        raise ZeroDivisionError("invert_q of the zero function")
    num, den = f.num, f.den
    # f(1/q) = q**(deg den - deg num) * rev(num) / rev(den), reversing full length
    num_r = IntPoly(reversed(num.c))
    den_r = IntPoly(reversed(den.c))
    shift = den.degree - num.degree
    if shift >= 0:
        return RatFunc(num_r.shift(shift), den_r)
    return RatFunc(num_r, den_r.shift(-shift))


# -- truncated power series ---------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series coefficients of q**0 .. q**order."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("series length must be order + 1")

    @classmethod
    def from_poly(cls, p: IntPoly, order: int) -> "TruncatedSeries":
        return cls(order, tuple(p[k] for k in range(order + 1)))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,) + (0,) * order)

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise ValueError("series of different orders")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order + 1
        res = [0] * n
        for i, x in enumerate(self.coeffs):
            if x:
                for j in range(n - i):
                    res[i + j] += x * other.coeffs[j]
        return TruncatedSeries(self.order, tuple(res))

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q**k, dropping terms past the order."""
        if k > self.order:
            return TruncatedSeries.zero(self.order)
        return TruncatedSeries(self.order, (0,) * k + self.coeffs[: self.order + 1 - k])

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])


def series_expand(f: RatFunc, order: int) -> TruncatedSeries:
    """Taylor coefficients of f at q = 0 through q**order."""
    num, den = f.num, f.den
    c0 = den[0]
    if not c0:
        raise ZeroDivisionError("denominator vanishes at q = 0")
    out: list = []
    for k in range(order + 1):
        acc = num[k] - sum(den[j] * out[k - j] for j in range(1, min(k, den.degree) + 1))
        if abs(c0) == 1:
            out.append(acc * c0)
        else:
            out.append(Fraction(acc, c0))
    if any(isinstance(x, Fraction) and x.denominator != 1 for x in out):
        raise ValueError("series has non-integer coefficients")
    return TruncatedSeries(order, tuple(int(x) for x in out))


@lru_cache(maxsize=None)
def inverse_q_factorial_series(mult: int, order: int) -> TruncatedSeries:
    """Series of prod_{k=1..mult} 1/(1 - q**k)."""
    s = TruncatedSeries.one(order)
    for k in range(1, mult + 1):
        geo = tuple(1 if j % k == 0 else 0 for j in range(order + 1))
        s = s * TruncatedSeries(order, geo)
    return s
