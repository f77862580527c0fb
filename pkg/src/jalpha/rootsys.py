"""Cartan data for the finite root systems and the invariant form on Q.

Node numbering follows Bourbaki.  The Cartan matrix convention is
``a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`` and the form is
normalized so that short roots have squared length 2, i.e.
``(alpha_i, alpha_j) = d_i * a_ij`` with ``d_i`` = 1 on short roots.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterator, Sequence

FAMILIES = "ABCDEFG"

LatticeVector = tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid root system selector or malformed lattice vector."""


def _chain(n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix of a finite type, Bourbaki numbering."""
    family = family.upper()
    n = rank
    if family == "A" and n >= 1:
        return _chain(n)
    if family == "B" and n >= 2:
        m = _chain(n)
        # alpha_n is short
        m[n - 1][n - 2] = -2
        return m
    if family == "C" and n >= 2:
        m = _chain(n)
        # alpha_n is long
        m[n - 2][n - 1] = -2
        return m
    if family == "D" and n >= 4:
        m = _chain(n)
        m[n - 2][n - 1] = m[n - 1][n - 2] = 0
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        return m
    if family == "E" and n in (6, 7, 8):
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 2
        # 1-3-4-5-6-7-8 chain with 2 attached to 4 (1-based)
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
        for i, j in edges:
            m[i - 1][j - 1] = m[j - 1][i - 1] = -1
        return m
    if family == "F" and n == 4:
        m = _chain(4)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        m[2][1] = -2
        return m
    if family == "G" and n == 2:
        # alpha_1 short, alpha_2 long
        return [[2, -3], [-1, 2]]
    raise RootSystemError(f"no root system of type {family}{rank}")


def symmetrizers(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Smallest positive integers d_i with d_i a_ij = d_j a_ji.

    Components are normalized independently so that the short simple roots
    of each get d_i = 1.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j]:
                    if not cartan[j][i]:
                        raise RootSystemError("Cartan matrix is not symmetrizable")
                    val = d[i] * cartan[i][j] / cartan[j][i]
                    if d[j] is None:
                        d[j] = val
                        comp.append(j)
                        stack.append(j)
                    elif d[j] != val:
                        raise RootSystemError("Cartan matrix is not symmetrizable")
        scale = lcm(*(d[i].denominator for i in comp))
        ints = {i: d[i] * scale for i in comp}
        low = min(ints.values())
        for i in comp:
            d[i] = ints[i] / low
    out = []
    for x in d:
        if x.denominator != 1:
            raise RootSystemError("symmetrizers are not integral")
        out.append(int(x))
    return tuple(out)


@dataclass(frozen=True)
class RootSystemSpec:
    """Cartan datum of a finite root system."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    symmetrizers: tuple[int, ...] = field(repr=False)

    @classmethod
    def of(cls, family: str, rank: int) -> "RootSystemSpec":
        family = family.upper()
        cm = cartan_matrix(family, rank)
        return cls(family, rank, tuple(map(tuple, cm)), symmetrizers(cm))

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        """Parse a selector such as ``"A3"`` or ``"g2"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse root system {text!r}")
        return cls.of(m.group(1), int(m.group(2)))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name

    @property
    def simply_laced(self) -> bool:
        return all(d == 1 for d in self.symmetrizers)

    def form(self, i: int, j: int) -> int:
        """(alpha_i, alpha_j), zero-based indices."""
        return self.symmetrizers[i] * self.cartan[i][j]

    def edges(self) -> list[tuple[int, int]]:
        """Edges of the Dynkin diagram as pairs i < j (zero-based)."""
        n = self.rank
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.cartan[i][j]]

    def check(self, v: Sequence[int]) -> LatticeVector:
        v = tuple(int(x) for x in v)
        if len(v) != self.rank:
            raise RootSystemError(f"{self.name} needs {self.rank} coefficients, got {len(v)}")
        return v


def pairing(spec: RootSystemSpec, beta: Sequence[int], gamma: Sequence[int]) -> int:
    """The invariant form (beta, gamma) in the simple-root basis."""
    b, c = spec.check(beta), spec.check(gamma)
    n = spec.rank
    return sum(b[i] * c[j] * spec.form(i, j) for i in range(n) if b[i] for j in range(n) if c[j])


def norm_half(spec: RootSystemSpec, beta: Sequence[int]) -> int:
    """(beta, beta)/2, always an integer."""
    b = spec.check(beta)
    n = spec.rank
    total = sum(b[i] * b[i] * spec.symmetrizers[i] for i in range(n))
    for i in range(n):
        if b[i]:
            for j in range(i + 1, n):
                if b[j] and spec.cartan[i][j]:
                    total += b[i] * b[j] * spec.form(i, j)
    return total


def rho_pairing(spec: RootSystemSpec, alpha: Sequence[int]) -> int:
    """(rho, alpha) = sum d_i a_i."""
    a = spec.check(alpha)
    return sum(d * x for d, x in zip(spec.symmetrizers, a))


def enumerate_interval(alpha: Sequence[int]) -> Iterator[LatticeVector]:
    """All beta with 0 <= beta <= alpha, lexicographically."""
    if any(x < 0 for x in alpha):
        raise RootSystemError(f"{tuple(alpha)} is not in the positive cone")
    return itertools.product(*(range(x + 1) for x in alpha))


def require_positive(alpha: Sequence[int]) -> LatticeVector:
    a = tuple(int(x) for x in alpha)
    if any(x < 0 for x in a):
        raise RootSystemError(f"{a} is not in the positive cone")
    return a


def simple_root(rank: int, i: int) -> LatticeVector:
    return tuple(1 if k == i else 0 for k in range(rank))


def sub(a: Sequence[int], b: Sequence[int]) -> LatticeVector:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> LatticeVector:
    return tuple(x + y for x, y in zip(a, b))


SUPPORTED = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2")
