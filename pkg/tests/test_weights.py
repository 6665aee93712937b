import pytest

from rmweights.dims import CodeParams, rho
from rmweights.macaulay import INFINITY, decompose
from rmweights.oracle import e_bar_lex, enumerate_tuples
from rmweights.weights import (
    WeightHierarchy,
    coeffs_to_mu,
    e_bar,
    first_weight,
    ghw,
    hierarchy,
    mu_tuple,
)


def _sweep():
    for q in (2, 3):
        for m in range(1, 4):
            for d in range(1, m * (q - 1) + 1):
                yield CodeParams(q, d, m)
    yield CodeParams(4, 2, 2)


def test_e_bar_examples():
    p = CodeParams(4, 3, 3)
    assert p.dimension == 20
    assert e_bar(p, 8) == 18
    assert ghw(p, 8) == 46

    p = CodeParams(2, 3, 5)
    assert p.dimension == 26
    assert e_bar(p, 10) == 17
    assert ghw(p, 10) == 15
    assert e_bar(p, 1) == 28
    assert ghw(p, 26) == 32  # top weight is the block length


def test_r_out_of_range():
    p = CodeParams(2, 3, 5)
    for r in (0, 27, -3):
        with pytest.raises(ValueError, match=r"r must be in \[1, 26\]"):
            e_bar(p, r)
    with pytest.raises(ValueError):
        mu_tuple(p, 0)


def test_hierarchy_examples():
    assert tuple(hierarchy(CodeParams(2, 1, 3))) == (4, 6, 7, 8)
    assert tuple(hierarchy(CodeParams(2, 2, 3))) == (2, 3, 4, 5, 6, 7, 8)


def test_hierarchy_object():
    p = CodeParams(3, 2, 2)
    h = hierarchy(p)
    assert len(h) == p.dimension == 6
    assert h[1] == first_weight(p)
    assert h[len(h)] == p.length == 9
    assert list(h) == sorted(set(h))
    with pytest.raises(IndexError):
        h[0]
    with pytest.raises(IndexError):
        h[len(h) + 1]


def test_weight_hierarchy_validation():
    p = CodeParams(2, 1, 2)  # k = 3, length 4
    WeightHierarchy(p, (2, 3, 4))
    with pytest.raises(ValueError):
        WeightHierarchy(p, (2, 3))
    with pytest.raises(ValueError):
        WeightHierarchy(p, (3, 3, 4))
    with pytest.raises(ValueError):
        WeightHierarchy(p, (2, 3, 5))


def test_mu_examples():
    assert mu_tuple(CodeParams(4, 3, 3), 8) == (1, 0, 2)
    assert mu_tuple(CodeParams(2, 3, 5), 10) == (1, 0, 0, 0, 1)
    # rank k decomposes zero, so every digit vanishes
    assert mu_tuple(CodeParams(2, 3, 5), 26) == (0, 0, 0, 0, 0)


def test_coeffs_to_mu_errors():
    with pytest.raises(ValueError):
        coeffs_to_mu(decompose(12, 3, INFINITY), 5)
    rep = decompose(25, 3, 2)  # leading coefficient 4
    with pytest.raises(ValueError):
        coeffs_to_mu(rep, 4)
    assert coeffs_to_mu(rep, 5) == (1, 1, 1, 0, 0)


def test_mu_ranks_enumerate_tuples_in_descending_order():
    # rank r maps to the r-th largest exponent tuple with digit sum <= d
    for p in _sweep():
        tuples = list(enumerate_tuples(p.q, p.d, p.m))
        ranked = [mu_tuple(p, r) for r in range(1, p.dimension + 1)]
        assert ranked == tuples, (p.q, p.d, p.m)


def test_mu_digit_bounds():
    for p in _sweep():
        for r in range(1, p.dimension + 1):
            mu = coeffs_to_mu(decompose(p.dimension - r, p.d, p.q), p.m)
            assert all(0 <= digit <= p.q - 1 for digit in mu)
            assert sum(mu) <= p.d


def test_coefficient_sum_equals_digit_valuation():
    for p in _sweep():
        for r in range(1, p.dimension + 1):
            mu = mu_tuple(p, r)
            valuation = sum(
                digit * p.q ** (p.m - j) for j, digit in enumerate(mu, start=1)
            )
            assert e_bar(p, r) == valuation, (p.q, p.d, p.m, r)


def test_rank_one_tuple():
    for p in _sweep():
        a, b = divmod(p.d - 1, p.q - 1)
        b += 1
        expected = (p.q - 1,) * a + (b,) + (0,) * (p.m - a - 1)
        assert mu_tuple(p, 1) == expected


def test_first_weight_closed_form():
    for q in (2, 3, 4, 5):
        for m in range(1, 5):
            for d in range(1, m * (q - 1) + 1):
                p = CodeParams(q, d, m)
                assert first_weight(p) == ghw(p, 1), (q, d, m)


def test_matches_lex_oracle():
    for p in _sweep():
        for r in range(1, p.dimension + 1):
            assert e_bar(p, r) == e_bar_lex(p, r), (p.q, p.d, p.m, r)


def test_weights_strictly_increase():
    for p in (CodeParams(2, 3, 5), CodeParams(3, 3, 3), CodeParams(4, 3, 3)):
        values = list(hierarchy(p))
        assert all(a < b for a, b in zip(values, values[1:]))
        assert values[-1] == p.length
        assert rho(p.q, p.d, p.m) == len(values)
