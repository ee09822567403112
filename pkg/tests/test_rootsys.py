from __future__ import annotations

import itertools

from hypothesis import given, strategies as st

from sp6lab.rootsys import (
    COMPACT_ROOTS,
    NONCOMPACT_NEGATIVE,
    NONCOMPACT_POSITIVE,
    POSITIVE_ROOTS,
    ROOTS,
    IDENTITY,
    SignedPermutation,
    coset_representatives,
    compact_weyl_group,
    delta_k,
    half_sum,
    pairing,
    parse_root_label,
    rho,
    root_label,
    weyl_group,
)

weights = st.tuples(*[st.integers(-20, 20)] * 3)


def test_root_counts():
    assert len(ROOTS) == 18
    assert len(POSITIVE_ROOTS) == 9
    assert len(COMPACT_ROOTS) == 6
    assert len(NONCOMPACT_POSITIVE) == len(NONCOMPACT_NEGATIVE) == 6


def test_root_list_closed_under_negation():
    ws = {r.weight for r in ROOTS}
    assert all(tuple(-c for c in w) in ws for w in ws)


def test_rho_and_delta_k():
    assert rho() == (3, 2, 1)
    assert delta_k() == (1, 0, -1)
    assert half_sum(POSITIVE_ROOTS) == rho()


def test_labels_round_trip():
    for r in ROOTS:
        assert parse_root_label(root_label(r.weight)) == r.weight
    assert root_label((2, 0, 0)) == "2e1"
    assert root_label((-1, 0, -1)) == "-(e1+e3)"


def test_weyl_group_order_and_closure():
    W = weyl_group()
    assert len(W) == 48
    assert len(set(W)) == 48
    assert all(a * b in set(W) for a, b in itertools.product(W[:8], W))
    assert len(compact_weyl_group()) == 6


def test_weyl_group_permutes_roots():
    ws = {r.weight for r in ROOTS}
    for w in weyl_group():
        assert {w(r) for r in ws} == ws


def test_coset_representatives():
    reps = coset_representatives()
    assert len(reps) == 8
    assert [w(rho()) for w in reps][0] == (3, 2, 1)
    assert [w(rho()) for w in reps][-1] == (-1, -2, -3)
    assert [w.length() for w in reps] == [0, 1, 2, 3, 3, 4, 5, 6]
    # distinct cosets: no two differ by a compact element
    K = compact_weyl_group()
    cosets = {frozenset(k * w for k in K) for w in reps}
    assert len(cosets) == 8


@given(weights)
def test_weyl_action_preserves_pairing(v):
    for w in weyl_group()[::5]:
        assert pairing(w(v), w(v)) == pairing(v, v)


@given(st.sampled_from(weyl_group()), st.sampled_from(weyl_group()), weights)
def test_composition_is_action(a, b, v):
    assert (a * b)(v) == a(b(v))
    assert (a * a.inverse()) == IDENTITY


def test_signed_permutation_json_round_trip():
    for w in weyl_group():
        assert SignedPermutation.from_json(w.to_json()) == w
