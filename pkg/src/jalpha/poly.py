"""Exact univariate polynomials, Laurent polynomials and rational functions in q.

Coefficients are Python ints throughout, so nothing ever overflows.  Storage
is dense: index k holds the coefficient of q**k.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence


class IntPoly:
    """Polynomial with integer coefficients, lowest degree first.

    Canonical form has no trailing zeros; the zero polynomial is ``()``.

    >>> IntPoly([1, -1]) * IntPoly([1, 1])
    IntPoly([1, 0, -1])
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.c = tuple(int(x) for x in c)

    @classmethod
    def _raw(cls, c: tuple) -> "IntPoly":
        p = object.__new__(cls)
        p.c = c
        return p

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent in IntPoly.monomial")
        if not coeff:
            return ZERO
        return cls._raw((0,) * k + (coeff,))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls._raw((c,)) if c else ZERO

    # -- basic queries --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def __getitem__(self, k):
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __iter__(self):
        return iter(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"IntPoly({list(self.c)})"

    def __str__(self):
        return format_poly(self.c)

    def low_degree(self) -> int:
        """Exponent of the lowest nonzero term (0 for the zero polynomial)."""
        for k, x in enumerate(self.c):
            if x:
                return k
        return 0

    def content(self) -> int:
        g = 0
        for x in self.c:
            g = gcd(g, x)
            if g == 1:
                break
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if not self.c:
            return self
        g = self.content()
        if self.c[-1] < 0:
            g = -g
        if g == 1:
            return self
        return IntPoly._raw(tuple(x // g for x in self.c))

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    # -- ring operations ------------------------------------------------

    def __neg__(self):
        return IntPoly._raw(tuple(-x for x in self.c))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, x in enumerate(b):
            res[i] += x
        return IntPoly(res)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return IntPoly._raw(tuple(x * other for x in self.c))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._raw(_convolve(self.c, other.c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of IntPoly")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q**k (k >= 0) or divide by q**-k when that is exact."""
        if not self.c or k == 0:
            return self
        if k > 0:
            return IntPoly._raw((0,) * k + self.c)
        if any(self.c[:-k]):
            raise ValueError("shift would produce a negative power of q")
        return IntPoly._raw(self.c[-k:])

    def reversed(self) -> "IntPoly":
        """Coefficient reversal q**deg * p(1/q) (drops factors of q)."""
        return IntPoly(reversed(self.c))

    def divmod(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division with remainder over the integers.

        Raises ``ArithmeticError`` if a quotient coefficient is not an
        integer, which cannot happen when ``other`` has leading coefficient
        +-1.
        """
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        db = len(other.c) - 1
        lead = other.c[-1]
        b = other.c
        if len(rem) <= db:
            return ZERO, self
        quo = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            x = rem[k]
            if not x:
                continue
            t, r = divmod(x, lead)
            if r:
                raise ArithmeticError("quotient has non-integer coefficients")
            quo[k - db] = t
            off = k - db
            for j in range(db + 1):
                rem[off + j] -= t * b[j]
        return IntPoly(quo), IntPoly(rem[:db])

    def exact_div(self, other: "IntPoly") -> "IntPoly | None":
        """Quotient if ``other`` divides ``self`` in Z[q], else None."""
        try:
            q, r = self.divmod(other)
        except ArithmeticError:
            return None
        return q if not r.c else None

    def __floordiv__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        q = self.exact_div(other)
        if q is None:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Pseudo-remainder of self by other (lc(other)**k * self mod other)."""
        rem = list(self.c)
        b = other.c
        db = len(b) - 1
        lead = b[-1]
        while len(rem) - 1 >= db and rem:
            x = rem[-1]
            off = len(rem) - 1 - db
            rem = [r * lead for r in rem]
            for j in range(db + 1):
                rem[off + j] -= x * b[j]
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return IntPoly(rem)


def _convolve(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    res = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a, j):
                res[i] += x * y
    while res and not res[-1]:
        res.pop()
    return tuple(res)


ZERO = IntPoly._raw(())
ONE = IntPoly._raw((1,))
Q = IntPoly._raw((0, 1))


def format_poly(coeffs: Sequence[int], var: str = "q", offset: int = 0) -> str:
    """Render ``1+3q+q^2`` style text, lowest degree first."""
    parts = []
    for k, x in enumerate(coeffs, offset):
        if not x:
            continue
        if k == 0:
            mono = str(abs(x))
        else:
            mag = "" if abs(x) == 1 else str(abs(x))
            mono = mag + (var if k == 1 else f"{var}^{k}")
        sign = "-" if x < 0 else "+"
        parts.append((sign, mono))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        out += sign + mono
    return out


# -- gcd ------------------------------------------------------------------


def _prs_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive polynomial remainder sequence; slow but always correct."""
    cont = gcd(f.content(), g.content())
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b.c:
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r.c else r)
    return a.primitive() * cont


def _heu_gcd(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Heuristic gcd by evaluation at a large integer and digit recovery."""
    norm = min(max(abs(x) for x in f.c), max(abs(x) for x in g.c))
    xi = 2 * norm + 29
    for _ in range(6):
        h = gcd(f(xi), g(xi))
        digits = []
        while h:
            r = h % xi
            if r > xi // 2:
                r -= xi
            digits.append(r)
            h = (h - r) // xi
        cand = IntPoly(digits).primitive()
        if cand.c and f.exact_div(cand) is not None and g.exact_div(cand) is not None:
            return cand
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011
    return None


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[q], primitive with positive leading coeff.

    The integer content is included: ``poly_gcd(2q, 4)`` is ``2``.
    """
    if not f.c:
        return g.primitive() * g.content() if g.c else ZERO
    if not g.c:
        return f.primitive() * f.content()
    cont = gcd(f.content(), g.content())
    fp, gp = f.primitive(), g.primitive()
    if fp.degree == 0 or gp.degree == 0:
        return IntPoly.const(cont)
    # strip common powers of q first; cheap and keeps evaluations small
    k = min(fp.low_degree(), gp.low_degree())
    fp, gp = fp.shift(-fp.low_degree()), gp.shift(-gp.low_degree())
    h = _heu_gcd(fp, gp) if fp.degree and gp.degree else IntPoly.const(1)
    if h is None:
        h = _prs_gcd(fp, gp).primitive()
    return h.shift(k) * cont


# -- Laurent polynomials --------------------------------------------------


class LaurentPoly:
    """Integer Laurent polynomial: ``sum coeffs[k] q**(offset+k)``.

    >>> (LaurentPoly([1, 1], offset=-1) * LaurentPoly.monomial(1)).to_intpoly()
    IntPoly([1, 1])
    """

    __slots__ = ("offset", "c")

    def __init__(self, coeffs: Iterable[int] = (), offset: int = 0):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        lead = 0
        while lead < len(c) and not c[lead]:
            lead += 1
        self.c = tuple(int(x) for x in c[lead:])
        self.offset = offset + lead if self.c else 0

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "LaurentPoly":
        return cls([coeff], offset=k)

    @classmethod
    def from_intpoly(cls, p: IntPoly, shift: int = 0) -> "LaurentPoly":
        return cls(p.c, offset=shift)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and (self.offset, self.c) == (other.offset, other.c)

    def __hash__(self):
        return hash((self.offset, self.c))

    def __repr__(self):
        return f"LaurentPoly({list(self.c)}, offset={self.offset})"

    def __str__(self):
        return format_poly(self.c, offset=self.offset)

    @property
    def min_exp(self) -> int:
        return self.offset

    @property
    def max_exp(self) -> int:
        return self.offset + len(self.c) - 1

    def __neg__(self):
        return LaurentPoly([-x for x in self.c], self.offset)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.c:
            return other
        if not other.c:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.max_exp, other.max_exp)
        res = [0] * (hi - lo + 1)
        for k, x in enumerate(self.c, self.offset - lo):
            res[k] += x
        for k, x in enumerate(other.c, other.offset - lo):
            res[k] += x
        return LaurentPoly(res, lo)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly([x * other for x in self.c], self.offset)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(_convolve(self.c, other.c), self.offset + other.offset)

    __rmul__ = __mul__

    def to_intpoly(self) -> IntPoly:
        """Exact conversion; raises if a negative power is present."""
        if self.c and self.offset < 0:
            raise ValueError("Laurent polynomial has negative powers of q")
        return IntPoly((0,) * self.offset + self.c) if self.c else ZERO

    def cleared(self) -> tuple[IntPoly, int]:
        """Return (p, k) with self = q**k * p and p(0) != 0."""
        return IntPoly(self.c), self.offset


# -- rational functions ---------------------------------------------------


class RatFunc:
    """Reduced quotient num/den of integer polynomials.

    Canonical form: gcd(num, den) = 1 in Z[q] (contents included) and the
    leading coefficient of den is positive, so ``==`` is structural.

    >>> RatFunc(IntPoly([1, 0, -1]), IntPoly([1, -1]))
    RatFunc(IntPoly([1, 1]), IntPoly([1]))
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = IntPoly.const(den)
        if not den.c:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.c:
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g != ONE:
            num, den = num // g, den // g
        if den.lc < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def _reduced(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = RatFunc(other)
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __neg__(self):
        return RatFunc._reduced(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        # cross-cancel first so the final gcd works on smaller inputs
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        if not num.c:
            return RatFunc(ZERO)
        if den.lc < 0:
            num, den = -num, -den
        return RatFunc._reduced(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero rational function")
        num, den = self.den, self.num
        if den.lc < 0:
            num, den = -num, -den
        return RatFunc._reduced(num, den)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_ratfunc(other) * self.inverse()

    def eval(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("rational function has a pole at this point")
        return Fraction(self.num(x), d)


def _as_ratfunc(x) -> RatFunc | None:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, IntPoly)):
        return RatFunc(x)
    return None


# -- cyclotomic polynomials ----------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, via q**n - 1 = prod_{d | n} Phi_d."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPoly.monomial(n) - ONE
    for d in range(1, n):
        if n % d == 0:
            p = p // cyclotomic(d)
    return p


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def cyclotomic_factorization(p: IntPoly) -> tuple[int, dict[int, int]] | None:
    """Write p = unit * prod Phi_d**e_d, returning (unit, {d: e_d}).

    Returns None when p has a factor that is not cyclotomic (or a constant
    other than +-1 is left over).
    """
    if not p.c:
        return None
    exps: dict[int, int] = {}
    rest = p
    d = 1
    # phi(d) >= sqrt(d/2), so no cyclotomic factor of rest has d > 2*deg**2
    while rest.degree > 0 and d <= 2 * rest.degree**2 + 2:
        phi = cyclotomic(d)
        if phi.degree <= rest.degree:
            while True:
                quo = rest.exact_div(phi)
                if quo is None:
                    break
                rest = quo
                exps[d] = exps.get(d, 0) + 1
        d += 1
    if rest.degree != 0 or abs(rest.lc) != 1:
        return None
    return rest.lc, exps


# -- serialization ---------------------------------------------------------


def poly_to_json(p: IntPoly) -> list[str]:
    """Coefficients as decimal strings, lowest degree first."""
    return [str(x) for x in p.c]


def poly_from_json(data: Sequence) -> IntPoly:
    return IntPoly(int(x) for x in data)


def laurent_to_json(p: LaurentPoly) -> dict:
    return {"offset": p.offset, "coeffs": [str(x) for x in p.c]}


def laurent_from_json(data: dict) -> LaurentPoly:
    return LaurentPoly((int(x) for x in data["coeffs"]), int(data["offset"]))
