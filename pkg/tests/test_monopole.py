import itertools

import pytest

from jalpha.engine import JTable, j_fermionic
from jalpha.errors import BudgetExceeded
from jalpha.monopole import (
    DynkinGraph,
    _partitions,
    d_lambda,
    monopole_series,
    monopole_series_certified,
    monopole_sum,
    p_lambda,
)
from jalpha.poly import IntPoly, RatFunc
from jalpha.qseries import TruncatedSeries, q_pochhammer_alpha, series_expand
from jalpha.rootsys import RootSystemSpec, enumerate_interval, norm_half, sub


def spec(name):
    return RootSystemSpec.parse(name)


def test_d_lambda_examples():
    a1, a2 = DynkinGraph.of(spec("A1")), DynkinGraph.of(spec("A2"))
    assert d_lambda(a2, ((0,), (0,))) == 0
    for k in range(5):
        assert d_lambda(a1, ((k,),)) == k
    assert d_lambda(a2, ((1,), (1,))) == 1


def test_dynkin_graph_requires_simply_laced():
    with pytest.raises(ValueError):
        DynkinGraph.of(spec("B2"))
    with pytest.raises(ValueError):
        monopole_series(spec("G2"), (1, 1), 3)


def test_p_lambda_examples():
    assert p_lambda(((1, 1),), 4).coeffs == (1, 1, 2, 2, 3)
    assert p_lambda(((2, 1),), 3).coeffs == (1, 2, 3, 4)
    assert p_lambda(((),), 3) == TruncatedSeries.one(3)


def test_partitions():
    assert _partitions(2, 1) == [(1, 1), (1, 0), (0, 0)]
    assert _partitions(3, 2, positive=1) == [(2, 0, 0), (1, 0, 0)]
    assert _partitions(0, 3) == [()]


def test_vectorized_charge_matches_scalar():
    # the numpy grid inside monopole_sum must agree with d_lambda term by term
    s = spec("A3")
    graph = DynkinGraph.of(s)
    alpha, bound, order = (2, 1, 2), 3, 12
    total = [0] * (order + 1)
    parts = [_partitions(a, bound) for a in alpha]
    for lam in itertools.product(*parts):
        d = d_lambda(graph, lam)
        assert d >= max(max(p, default=0) for p in lam)
        if d <= order:
            for k, x in enumerate(p_lambda(lam, order).shift(d).coeffs):
                total[k] += x
    assert monopole_sum(s, alpha, order, bound).coeffs == tuple(total)


@pytest.mark.parametrize("name,alpha", [("A1", (1,)), ("A2", (1, 1)), ("A2", (2, 1)), ("A3", (1, 2, 1)), ("D4", (1, 1, 1, 1))])
def test_series_matches_expansion(name, alpha):
    s = spec(name)
    series, bound = monopole_series_certified(s, alpha, 8)
    assert series == series_expand(j_fermionic(s, alpha), 8)
    assert bound >= 8
    assert monopole_sum(s, alpha, 8, bound + 2) == series


def test_series_examples():
    assert monopole_series(spec("A1"), (1,), 3).coeffs == (1, 2, 3, 4)
    assert monopole_series(spec("A2"), (0, 0), 3).coeffs == (1, 0, 0, 0)


@pytest.mark.parametrize("name,alpha", [("A2", (2, 2)), ("A3", (2, 1, 1)), ("D4", (1, 1, 1, 1))])
def test_pattern_slices_are_fermionic_terms(name, alpha):
    """Multipartitions with beta_i positive parts give q^{(b,b)/2} J_beta / (q)_{alpha-beta}."""
    s = spec(name)
    order, bound = 8, 10
    table = JTable(s)
    for beta in enumerate_interval(alpha):
        term = RatFunc(IntPoly.monomial(norm_half(s, beta))) * j_fermionic(s, beta, table)
        term = term / RatFunc(q_pochhammer_alpha(s, sub(alpha, beta)))
        assert monopole_sum(s, alpha, order, bound, pattern=beta) == series_expand(term, order)


def test_budget():
    with pytest.raises(BudgetExceeded):
        monopole_sum(spec("A3"), (6, 6, 6), 30, 30)
