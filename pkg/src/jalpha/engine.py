"""J_alpha by the fermionic recursion (any type) and the Toda recursion (type A).

Every denominator produced by either recursion is a product of cyclotomic
polynomials, so values are stored internally as ``num / prod Phi_d**e_d``.
Sums then take an lcm of exponent vectors instead of a polynomial gcd, and
reduction is trial division by the few Phi_d that occur.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import NonIntegerCoefficient, NotPolynomial, TodaError
from .poly import ONE, ZERO, IntPoly, RatFunc, cyclotomic, cyclotomic_factorization, divisors, poly_gcd
from .qseries import eval_at_one, pochhammer_cyclotomic_exponents, q_pochhammer_alpha
from .rootsys import (
    LatticeVector,
    RootSystemSpec,
    enumerate_interval,
    norm_half,
    require_positive,
    simple_root,
    sub,
)

Exps = tuple[tuple[int, int], ...]


@lru_cache(maxsize=4096)
def _phi_product(exps: Exps) -> IntPoly:
    out = ONE
    for d, e in exps:
        if e:
            out = out * cyclotomic(d) ** e
    return out


def _freeze(exps: dict[int, int]) -> Exps:
    return tuple(sorted((d, e) for d, e in exps.items() if e))


def _lcm_exps(parts: Iterable[dict[int, int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        for d, e in p.items():
            if e > out.get(d, 0):
                out[d] = e
    return out


def _plus(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for d, e in b.items():
        out[d] = out.get(d, 0) + e
    return out


def _minus(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    return {d: e - b.get(d, 0) for d, e in a.items() if e - b.get(d, 0)}


def _reduce(num: IntPoly, exps: dict[int, int]) -> tuple[IntPoly, dict[int, int]]:
    exps = dict(exps)
    if not num:
        return ZERO, {}
    for d in sorted(exps):
        phi = cyclotomic(d)
        while exps[d]:
            quo = num.exact_div(phi)
            if quo is None:
                break
            num = quo
            exps[d] -= 1
    return num, {d: e for d, e in exps.items() if e}


def _combine(terms: list[tuple[IntPoly, dict[int, int]]]) -> tuple[IntPoly, dict[int, int]]:
    """Sum of num_k / Phi**e_k over a common (lcm) denominator, unreduced."""
    common = _lcm_exps(e for _, e in terms)
    total = ZERO
    for num, e in terms:
        if num:
            total = total + num * _phi_product(_freeze(_minus(common, e)))
    return total, common


class JTable:
    """Memo of J_alpha values over a downward-closed set of alpha.

    ``method`` is ``"fermionic"`` or ``"toda"``; the two are kept apart so
    that one can serve as an oracle for the other.
    """

    def __init__(self, spec: RootSystemSpec, method: str = "fermionic"):
        if method not in ("fermionic", "toda"):
            raise ValueError(f"unknown method {method!r}")
        if method == "toda" and spec.family != "A":
            raise TodaError("the Toda recursion is only available in type A")
        self.spec = spec
        self.method = method
        self._vals: dict[LatticeVector, tuple[IntPoly, dict[int, int]]] = {
            (0,) * spec.rank: (ONE, {})
        }
        self._rat: dict[LatticeVector, RatFunc] = {}

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in self._vals

    def __len__(self):
        return len(self._vals)

    def keys(self) -> list[LatticeVector]:
        return sorted(self._vals)

    @property
    def entries(self) -> dict[LatticeVector, RatFunc]:
        return {a: self.get(a) for a in self.keys()}

    def get(self, alpha: Sequence[int]) -> RatFunc:
        """J_alpha, computing it (and everything below it) if needed."""
        alpha = require_positive(self.spec.check(alpha))
        if alpha not in self._vals:
            self.fill(alpha)
        r = self._rat.get(alpha)
        if r is None:
            num, exps = self._vals[alpha]
            r = RatFunc._reduced(num, _phi_product(_freeze(exps)))
            self._rat[alpha] = r
        return r

    def put(self, alpha: Sequence[int], value: RatFunc) -> None:
        """Seed an entry (e.g. from a cache file)."""
        alpha = require_positive(self.spec.check(alpha))
        fac = cyclotomic_factorization(value.den)
        if fac is None or fac[0] != 1:
            raise ValueError(f"denominator of J{alpha} is not a product of cyclotomic polynomials")
        self._vals[alpha] = (value.num, fac[1])
        self._rat[alpha] = value

    def fill(self, alpha: Sequence[int]) -> None:
        """Compute every missing entry below alpha, lexicographically."""
        step = self._fermionic_step if self.method == "fermionic" else self._toda_step
        for beta in enumerate_interval(alpha):
            if beta not in self._vals:
                self._vals[beta] = step(beta)

    def _fermionic_step(self, alpha: LatticeVector) -> tuple[IntPoly, dict[int, int]]:
        spec = self.spec
        terms = []
        for beta in enumerate_interval(alpha):
            if beta == alpha:
                continue
            num, exps = self._vals[beta]
            gap = sub(alpha, beta)
            # 1/(q)_gap = (-1)^|gap| / prod Phi**e
            sign = -1 if sum(gap) % 2 else 1
            coeff = num.shift(norm_half(spec, beta)) * sign
            terms.append((coeff, _plus(exps, pochhammer_cyclotomic_exponents(spec, gap))))
        total, common = _combine(terms)
        # 1/(1 - q^N) = -1 / prod_{d | N} Phi_d
        n_half = norm_half(spec, alpha)
        total = -total
        common = _plus(common, {d: 1 for d in divisors(n_half)})
        return _reduce(total, common)

    def _toda_step(self, alpha: LatticeVector) -> tuple[IntPoly, dict[int, int]]:
        n = self.spec.rank
        ext = (0,) + alpha + (0,)
        steps = [ext[i + 1] - ext[i] for i in range(n + 1)]
        s = -min(0, *steps)
        left = ZERO
        for e in steps:
            left = left + IntPoly.monomial(e + s) - IntPoly.monomial(s)
        if not left:
            raise TodaError(f"Toda left coefficient vanishes identically at {alpha}")
        terms = []
        for i in range(1, n + 1):
            if alpha[i - 1]:
                num, exps = self._vals[sub(alpha, simple_root(n, i - 1))]
                terms.append((num.shift(steps[i] + s), exps))
        num, common = _combine(terms)
        g = poly_gcd(num, left)
        num, left = num // g, left // g
        fac = cyclotomic_factorization(left)
        if fac is None:
            raise TodaError(f"non-cyclotomic denominator {left} at {alpha}")
        unit, lexps = fac
        return _reduce(num * unit, _plus(common, lexps))


def _table_for(spec: RootSystemSpec, method: str, table: JTable | None) -> JTable:
    if table is None:
        return JTable(spec, method)
    if table.spec != spec or table.method != method:
        raise ValueError("table does not match the requested root system and method")
    return table


def j_fermionic(spec: RootSystemSpec, alpha: Sequence[int], table: JTable | None = None) -> RatFunc:
    """J_alpha from the defining fermionic recursion."""
    return _table_for(spec, "fermionic", table).get(alpha)


def j_toda_typeA(n: int, alpha: Sequence[int], table: JTable | None = None) -> RatFunc:
    """J_alpha in type A_n from the Toda recursion."""
    spec = RootSystemSpec.of("A", n)
    return _table_for(spec, "toda", table).get(alpha)


def numerator(spec: RootSystemSpec, alpha: Sequence[int], table: JTable | None = None) -> IntPoly:
    """(q)_alpha**2 * J_alpha, which must lie in Z[q].

    Raises NotPolynomial or NonIntegerCoefficient if it does not.
    """
    j = j_fermionic(spec, alpha, table)
    prod_ = RatFunc(q_pochhammer_alpha(spec, alpha) ** 2) * j
    if prod_.den.degree > 0:
        raise NotPolynomial(f"(q)^2 J{tuple(alpha)} has denominator {prod_.den}")
    if prod_.den != ONE:
        raise NonIntegerCoefficient(f"(q)^2 J{tuple(alpha)} = {prod_.num} / {prod_.den}")
    return prod_.num


def k_alpha_limit(spec: RootSystemSpec, alpha: Sequence[int], table: JTable | None = None) -> Fraction:
    """Leading coefficient K_alpha = H_alpha(1) / prod (a_i!)**2."""
    h = numerator(spec, alpha, table)
    return Fraction(eval_at_one(h), prod(factorial(x) for x in alpha) ** 2)


@lru_cache(maxsize=None)
def _k_rec(spec: RootSystemSpec, alpha: LatticeVector) -> Fraction:
    if not any(alpha):
        return Fraction(1)
    total = Fraction(0)
    for i, d in enumerate(spec.symmetrizers):
        if alpha[i]:
            total += d * _k_rec(spec, sub(alpha, simple_root(spec.rank, i)))
    return total / norm_half(spec, alpha)


def k_alpha_recursive(spec: RootSystemSpec, alpha: Sequence[int]) -> Fraction:
    """K_alpha from (alpha, alpha)/2 K_alpha = sum_i d_i K_{alpha - alpha_i}."""
    return _k_rec(spec, require_positive(spec.check(alpha)))
