"""Truncated Hilbert series of J_alpha from the monopole formula.

The sum runs over multipartitions lambda shaped by alpha, each contributing
q^{d_lambda} P_lambda(q).  It is infinite, so parts are capped at a bound B.
Peeling off the positive parts of lambda one layer at a time raises d_lambda
by at least 1 per layer, so d_lambda >= max part and B = N already captures
every term through q^N; the result is still certified by rerunning at B + 1.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, MonopoleAnomaly
from .qseries import TruncatedSeries, inverse_q_factorial_series
from .rootsys import RootSystemSpec, require_positive

Multipartition = tuple[tuple[int, ...], ...]

MAX_GRID = 20_000_000


@dataclass(frozen=True)
class DynkinGraph:
    nodes: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, spec: RootSystemSpec) -> "DynkinGraph":
        if not spec.simply_laced:
            raise ValueError(f"{spec.name} is not simply laced")
        return cls(spec.rank, frozenset(spec.edges()))


def d_lambda(graph: DynkinGraph, lam: Multipartition) -> int:
    """sum_i sum_j (2j-1) lam^(i)_j - sum over edges of sum min(lam^(i1)_j1, lam^(i2)_j2)."""
    total = sum((2 * j + 1) * x for part in lam for j, x in enumerate(part))
    for i1, i2 in graph.edges:
        total -= sum(min(x, y) for x in lam[i1] for y in lam[i2])
    return total


def _multiplicity_key(part: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(Counter(part).values()))


def _key_series(key: tuple[int, ...], order: int) -> TruncatedSeries:
    s = TruncatedSeries.one(order)
    for m in key:
        s = s * inverse_q_factorial_series(m, order)
    return s


def p_lambda(lam: Multipartition, order: int) -> TruncatedSeries:
    """prod over nodes and part values j of prod_{k <= m_j} 1/(1 - q^k)."""
    s = TruncatedSeries.one(order)
    for part in lam:
        s = s * _key_series(_multiplicity_key(part), order)
    return s


def _partitions(size: int, bound: int, positive: int | None = None) -> list[tuple[int, ...]]:
    """Weakly decreasing tuples of length size with entries in [0, bound].

    With ``positive`` set, exactly that many leading entries are nonzero.
    """
    if positive is None:
        return list(itertools.combinations_with_replacement(range(bound, -1, -1), size))
    head = itertools.combinations_with_replacement(range(bound, 0, -1), positive)
    return [h + (0,) * (size - positive) for h in head]


def monopole_sum(
    spec: RootSystemSpec,
    alpha: Sequence[int],
    order: int,
    bound: int,
    pattern: Sequence[int] | None = None,
) -> TruncatedSeries:
    """Sum of q^{d_lambda} P_lambda through q^order over parts <= bound.

    ``pattern`` restricts to multipartitions whose node i has exactly
    pattern[i] positive parts.
    """
    graph = DynkinGraph.of(spec)
    alpha = require_positive(spec.check(alpha))
    n = spec.rank
    parts = [
        _partitions(a, bound, None if pattern is None else pattern[i])
        for i, a in enumerate(alpha)
    ]
    shape = tuple(len(p) for p in parts)
    if int(np.prod(shape, dtype=np.int64)) > MAX_GRID:
        raise BudgetExceeded(f"monopole enumeration of {shape} multipartitions is too large")
    if 0 in shape:
        return TruncatedSeries.zero(order)

    def axis(i: int, arr: np.ndarray) -> np.ndarray:
        return arr.reshape(tuple(len(arr) if k == i else 1 for k in range(n)))

    d = np.zeros(shape, dtype=np.int64)
    arrays = []
    for i, plist in enumerate(parts):
        arr = np.array(plist, dtype=np.int64).reshape(len(plist), alpha[i])
        arrays.append(arr)
        weights = 2 * np.arange(alpha[i], dtype=np.int64) + 1
        d = d + axis(i, arr @ weights)
    for i1, i2 in sorted(graph.edges):
        a1, a2 = arrays[i1], arrays[i2]
        mins = np.minimum(a1[:, None, :, None], a2[None, :, None, :]).sum(axis=(2, 3))
        view = tuple(len(parts[k]) if k in (i1, i2) else 1 for k in range(n))
        d = d - mins.reshape(view)
    if (d < 0).any():
        bad = tuple(int(x) for x in np.argwhere(d < 0)[0])
        lam = tuple(parts[i][bad[i]] for i in range(n))
        raise MonopoleAnomaly(f"negative charge d_lambda = {int(d[bad])} at {lam}")

    keys = [[_multiplicity_key(p) for p in plist] for plist in parts]
    tally: Counter = Counter()
    for idx in np.argwhere(d <= order):
        idx = tuple(int(x) for x in idx)
        tally[(int(d[idx]),) + tuple(keys[i][idx[i]] for i in range(n))] += 1
    coeffs = [0] * (order + 1)
    for (deg, *node_keys), count in sorted(tally.items()):
        s = TruncatedSeries.one(order)
        for key in node_keys:
            s = s * _key_series(key, order)
        for k, x in enumerate(s.shift(deg).coeffs):
            coeffs[k] += count * x
    return TruncatedSeries(order, tuple(coeffs))


def monopole_series_certified(
    spec: RootSystemSpec, alpha: Sequence[int], order: int, bound: int | None = None
) -> tuple[TruncatedSeries, int]:
    """Monopole series through q^order plus the part bound that certified it.

    Runs at bound B and B + 1 and raises B until the two agree.
    """
    if not spec.simply_laced:
        raise ValueError(f"monopole formula needs a simply-laced type, got {spec.name}")
    b = order if bound is None else bound
    prev = monopole_sum(spec, alpha, order, b)
    while True:
        nxt = monopole_sum(spec, alpha, order, b + 1)
        if nxt == prev:
            return nxt, b
        b, prev = b + 1, nxt


def monopole_series(spec: RootSystemSpec, alpha: Sequence[int], order: int) -> TruncatedSeries:
    return monopole_series_certified(spec, alpha, order)[0]
