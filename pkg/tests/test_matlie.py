from __future__ import annotations

import itertools

import pytest

from sp6lab.gaussrat import I, GaussRat
from sp6lab.matlie import (
    GaussRatMatrix,
    NotInSpan,
    all_generators,
    bracket,
    cartan,
    coordinates,
    generator,
    in_k,
    in_p_minus,
    in_p_plus,
    root_vector,
    similitude_factor,
    weight_of,
)
from sp6lab.rootsys import ROOTS


def test_gaussrat_field_ops():
    a = GaussRat(1, 2)
    b = GaussRat("1/3", -1)
    assert a * a.inverse() == 1
    assert (a + b) - b == a
    assert (a / b) * b == a
    assert I * I == -1
    assert GaussRat.from_json(a.to_json()) == a


def test_every_root_vector_has_its_weight():
    for r in ROOTS:
        assert weight_of(root_vector(r.weight)) == r.weight


def test_cartan_has_weight_zero():
    for j in (1, 2, 3):
        assert weight_of(cartan(j)) == (0, 0, 0)


def test_generators_are_infinitesimal_symplectic():
    for m in all_generators().values():
        assert similitude_factor(m) == 0


def test_cartan_decomposition_membership():
    for r in ROOTS:
        m = root_vector(r.weight)
        assert in_k(m) == r.compact
        if not r.compact:
            assert in_p_plus(m) == r.positive
            assert in_p_minus(m) == (not r.positive)


def test_bracket_of_opposite_roots_is_cartan():
    for r in ROOTS:
        c = coordinates(bracket(root_vector(r.weight), root_vector(tuple(-x for x in r.weight))))
        assert c and all(isinstance(k, str) for k in c)


def test_jacobi_identity_on_generators():
    gens = list(all_generators().values())
    for x, y, z in itertools.combinations(gens, 3):
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert total.is_zero()


def test_coordinates_reconstruct():
    gens = all_generators()
    m = gens["T1"].scale(GaussRat(2)) + gens[(1, 1, 0)].scale(I) - gens[(0, -1, 1)]
    c = coordinates(m)
    assert c == {"T1": GaussRat(2), (1, 1, 0): I, (0, -1, 1): GaussRat(-1)}


def test_identity_not_in_span():
    with pytest.raises(NotInSpan):
        coordinates(GaussRatMatrix.identity())


def test_generator_lookup():
    assert generator("X_2e1") == root_vector((2, 0, 0))
    assert generator("e1-e2") == root_vector((1, -1, 0))
    with pytest.raises(KeyError):
        generator("e1+e4")


def test_matrix_json_round_trip():
    m = generator("-(e1+e3)")
    assert GaussRatMatrix.from_json(m.to_json()) == m
