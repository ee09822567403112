from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sp6lab.gaussrat import GaussRat
from sp6lab.lfunc import (
    GammaFactor,
    HodgeNumbers,
    PoleError,
    SatakeData,
    UnitCharLabel,
    count_poles,
    dirichlet_coefficients,
    dirichlet_sum,
    gamma_c,
    gamma_factor,
    gamma_r,
    gamma_value,
    local_factor_value,
    partial_l,
    pole_order,
    spin_factor,
)

nonzero = st.fractions(min_value=-3, max_value=3, max_denominator=7).filter(bool)


def test_all_ones_is_binomial():
    d = SatakeData(2, (1, 1, 1, 1))
    assert spin_factor(d) == [Fraction((-1) ** k * math.comb(8, k)) for k in range(9)]


@given(st.tuples(nonzero, nonzero, nonzero, nonzero), st.permutations([1, 2, 3]))
def test_symmetric_in_chi123(vals, perm):
    d = SatakeData(5, vals)
    e = SatakeData(5, (vals[0],) + tuple(vals[i] for i in perm))
    assert spin_factor(d) == spin_factor(e)
    assert len(spin_factor(d)) == 9


def test_ramified_labels_compose():
    half = UnitCharLabel(2, 1)
    assert (half * half).unramified
    assert (UnitCharLabel(2, 1) * UnitCharLabel(3, 1)) == UnitCharLabel(6, 5)
    d = SatakeData(3, (1, 2, 3, 5), (UnitCharLabel(), half, half, UnitCharLabel()))
    # S avoiding {1,2} or containing both survive: {}, {3}, {1,2}, {1,2,3}
    assert len(spin_factor(d)) == 5
    assert spin_factor(d)[-1] == Fraction(1 * 1 * 5 * 6 * 30)


def test_value_kinds():
    with pytest.raises(TypeError):
        SatakeData(2, (1, complex(1), 1, 1))
    with pytest.raises(ValueError):
        SatakeData(2, (0, 1, 1, 1))
    d = SatakeData(2, (GaussRat(0, 1), 1, 1, 1))
    assert d.exact


def test_satake_json_round_trip():
    d = SatakeData(7, (Fraction(1, 2), GaussRat(1, 1), 3, 1), (UnitCharLabel(4, 3),) * 4)
    assert SatakeData.from_json(d.to_json()) == d
    f = SatakeData(7, (complex(0.5, 0.1), complex(1), complex(2), complex(1)))
    assert SatakeData.from_json(f.to_json()) == f


def _brute_local(d: SatakeData, k: int):
    """Complete homogeneous sum of the surviving parameters."""
    alphas = []
    for r in range(4):
        for s in itertools.combinations((1, 2, 3), r):
            lab, val = d.labels[0], d.values[0]
            for i in s:
                lab, val = lab * d.labels[i], val * d.values[i]
            if lab.unramified:
                alphas.append(val)
    total = Fraction(0)
    for combo in itertools.combinations_with_replacement(alphas, k):
        term = Fraction(1)
        for a in combo:
            term *= a
        total += term
    return total


def test_dirichlet_against_brute_force():
    data = [SatakeData(2, (Fraction(1, 2), 2, Fraction(1, 3), 1)),
            SatakeData(3, (1, -1, 2, Fraction(1, 2)))]
    coeffs = dirichlet_coefficients(data, 60)
    for n, a in coeffs.items():
        e2 = (n & -n).bit_length() - 1
        e3 = 0
        m = n >> e2
        while m % 3 == 0:
            m //= 3
            e3 += 1
        assert m == 1
        assert a == _brute_local(data[0], e2) * _brute_local(data[1], e3)
    assert set(coeffs) == {2 ** i * 3 ** j for i in range(6) for j in range(4) if 2 ** i * 3 ** j <= 60}


def test_product_matches_dirichlet_expansion():
    rng = random.Random(3)
    data = []
    for p in (2, 3, 5, 7):
        vals = tuple(complex(math.cos(t), math.sin(t)) for t in (rng.uniform(0, 6.3) for _ in range(4)))
        data.append(SatakeData(p, vals))
    s = 3.0
    coeffs = dirichlet_coefficients(data, 10 ** 6)
    assert abs(partial_l(data, s) - dirichlet_sum(coeffs, s)) < 1e-10


def test_partial_l_cutoff():
    data = [SatakeData(2, (1, 1, 1, 1)), SatakeData(3, (1, 1, 1, 1))]
    assert partial_l(data, 2.0, cutoff=2) == pytest.approx((1 - 2 ** -2) ** -8)


def test_pole_reported():
    d = SatakeData(2, (2, 1, 1, 1))
    with pytest.raises(PoleError, match="l=2"):
        local_factor_value(d, 1.0)


@pytest.mark.parametrize("s", [0.3, 1.7, 2.5, 4.0, 6.2])
def test_gamma_c_is_product_of_gamma_r(s):
    assert gamma_c(s) == pytest.approx(gamma_r(s) * gamma_r(s + 1), rel=1e-12)


def _random_hodge(rng):
    h = {(p, 6 - p): rng.randint(0, 3) for p in range(3)}
    return HodgeNumbers(h, rng.randint(0, 3), rng.randint(0, 3))


def test_pole_order_matches_oracle():
    rng = random.Random(11)
    for _ in range(50):
        h = _random_hodge(rng)
        for m in range(-10, 11):
            assert pole_order(h, m) == count_poles(gamma_factor(h), m)


def test_hodge_33_case():
    h = HodgeNumbers({(3, 3): 1}, 1, 0)
    assert pole_order(h, 3) == h.h3plus == 1
    assert pole_order(HodgeNumbers({}, 0, 0), 99) == 0


@given(st.integers(0, 4), st.integers(0, 4), st.integers(-10, 10))
@settings(max_examples=60)
def test_pole_order_is_monotone_in_gamma_c_part(a, b, m):
    h = HodgeNumbers({(0, 6): a, (1, 5): b}, 0, 0)
    assert pole_order(h, m) >= pole_order(h, m + 1)


def test_gamma_value_finite_away_from_poles():
    h = HodgeNumbers({(0, 6): 1, (1, 5): 1, (2, 4): 1}, 1, 1)
    v = gamma_value(h, 4.5)
    expect = 1
    for g in gamma_factor(h):
        expect *= g.value(4.5)
    assert v == pytest.approx(expect)
    assert GammaFactor("R", 3, 1).value(5.0) == pytest.approx(gamma_r(2.0))


def test_hodge_validation_and_json():
    with pytest.raises(ValueError):
        HodgeNumbers({(2, 3): 1})
    with pytest.raises(ValueError):
        HodgeNumbers({(0, 6): 1, (6, 0): 2})
    with pytest.raises(ValueError):
        HodgeNumbers({(3, 3): 2}, 1, 0)
    h = HodgeNumbers({(1, 5): 2}, 1, 0)
    assert h[(5, 1)] == 2
    assert HodgeNumbers.from_json(h.to_json()) == h
