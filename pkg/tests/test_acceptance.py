"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from sp6lab import bmquad, lfunc, matlie, packets, uchar, wedge
from sp6lab.gaussrat import GaussRat
from sp6lab.rootsys import ROOTS, compact_root

# Reference decomposition of wedge^p p+ (x) wedge^q p- into U(3) irreducibles.
REFERENCE_TABLE = {
    (6, 0): {(4, 4, 4): 1},
    (5, 1): {(4, 2, 2): 1, (4, 3, 1): 1, (4, 4, 0): 1},
    (4, 2): {(2, 1, 1): 1, (2, 2, 0): 1, (3, 1, 0): 2, (3, 2, -1): 2, (3, 3, -2): 1,
             (4, 0, 0): 1, (4, 1, -1): 1, (4, 2, -2): 1},
    (3, 3): {(0, 0, 0): 2, (1, 1, -2): 1, (1, 0, -1): 2, (2, -1, -1): 1, (2, 1, -3): 1,
             (2, 2, -4): 1, (2, 0, -2): 4, (3, -1, -2): 1, (3, 0, -3): 2, (4, -2, -2): 1},
    (2, 4): {(-1, -1, -2): 1, (1, -2, -3): 2, (1, -1, -4): 1, (2, -3, -3): 1,
             (2, -2, -4): 1, (0, -2, -2): 1, (0, -1, -3): 2, (0, 0, -4): 1},
    (1, 5): {(-2, -2, -4): 1, (-1, -3, -4): 1, (0, -4, -4): 1},
    (0, 6): {(-4, -4, -4): 1},
}


@pytest.fixture
def verdict(capsys):
    def emit(number: int, name: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            tag = "PASS" if ok else "FAIL"
            print(f"\n[criterion {number:2d}] {tag}  {name}" + (f"  ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def test_criterion_01_ktype_table(verdict):
    t0 = time.perf_counter()
    mismatches = []
    for (p, q), expected in REFERENCE_TABLE.items():
        got = uchar.decompose(uchar.wedge_tensor_char(p, q)).entries
        if got != expected:
            mismatches.append((p, q))
    elapsed = time.perf_counter() - t0
    verdict(1, "K-type decomposition table", not mismatches and elapsed < 5,
            f"mismatched lines {mismatches}, {elapsed:.2f}s")


def test_criterion_02_dimension_audit(verdict):
    ok = True
    for p in range(7):
        q = 6 - p
        total = uchar.decompose(uchar.wedge_tensor_char(p, q)).total_dimension()
        ok &= total == math.comb(6, p) * math.comb(6, q)
    spot = {(3, 3): 400, (4, 2): 225, (5, 1): 36, (6, 0): 1}
    for pq, d in spot.items():
        ok &= uchar.DecompTable(REFERENCE_TABLE[pq]).total_dimension() == d
    verdict(2, "dimension audit", ok)


def test_criterion_03_projector_constants(verdict):
    t0 = time.perf_counter()
    results = {t: wedge.projection_data(t) for t in ((2, 2, -4), (4, -2, -2))}
    elapsed = time.perf_counter() - t0
    ref_step1 = GaussRat(2 ** 6)
    ref_step2 = GaussRat(2 ** 10 * 3 ** 2 * 5 ** 2)
    ok = elapsed < 10
    detail = []
    for t, d in results.items():
        ok &= d.step1 == ref_step1 and d.step2 == ref_step2
        ok &= wedge.projection_coefficient(t) == Fraction(1, 3600)
        detail.append(f"{t}: step1={d.step1} step2={d.step2} alpha={d.alpha}")
    verdict(3, "projector constants 2^6, 2^10*3^2*5^2, 1/3600", ok,
            "; ".join(detail) + f"; {elapsed:.2f}s")


def test_criterion_04_highest_weight_annihilation(verdict):
    ok = all(all(wedge.raising_annihilates(f()).values())
             for f in (wedge.x_224, wedge.x_422))
    verdict(4, "highest weight vectors annihilated", ok)


def test_criterion_05_packet(verdict):
    pk = packets.packet((0, 0, 0))
    hc = [(3, 2, 1), (3, 2, -1), (3, 1, -2), (2, 1, -3),
          (3, -1, -2), (2, -1, -3), (1, -2, -3), (-1, -2, -3)]
    kt = [(4, 4, 4), (4, 4, 0), (4, 2, -2), (2, 2, -4),
          (4, -2, -2), (2, -2, -4), (0, -4, -4), (-4, -4, -4)]
    ok = [d.hc_param for d in pk] == hc and [d.min_ktype for d in pk] == kt
    ok &= packets.hodge_type((2, 1, -3)) == (3, 3)
    ok &= packets.hodge_type((3, 1, -2)) == (4, 2)
    verdict(5, "discrete series packet of lambda = 0", ok)


def test_criterion_06_root_vector_weights(verdict):
    bad = [r.weight for r in ROOTS if matlie.weight_of(matlie.root_vector(r.weight)) != r.weight]
    verdict(6, "weight_of(X_alpha) = alpha for all 18 roots", not bad, f"bad: {bad}")


def test_criterion_07_character_oracle(verdict):
    t0 = time.perf_counter()
    bad = []
    for hw in itertools.product(range(-5, 6), repeat=3):
        if hw[0] >= hw[1] >= hw[2] and uchar.irrep_char(hw) != uchar.gt_character(hw):
            bad.append(hw)
    elapsed = time.perf_counter() - t0
    verdict(7, "Weyl character = Gelfand-Tsetlin enumeration", not bad and elapsed < 30,
            f"{len(bad)} mismatches, {elapsed:.2f}s")


def test_criterion_08_spin_factor(verdict):
    rng = random.Random(2024)
    ones = lfunc.spin_factor(lfunc.SatakeData(2, (1, 1, 1, 1)))
    ok = len(ones) - 1 == 8
    ok &= ones == [Fraction((-1) ** k * math.comb(8, k)) for k in range(9)]
    for _ in range(100):
        vals = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)) for _ in range(4)]
        base = lfunc.spin_factor(lfunc.SatakeData(3, tuple(vals)))
        for perm in itertools.permutations(vals[1:]):
            ok &= lfunc.spin_factor(lfunc.SatakeData(3, (vals[0], *perm))) == base
    data = []
    for p in (2, 3, 5, 7, 11):
        vals = tuple(complex(math.cos(a), math.sin(a)) for a in (rng.uniform(0, 2 * math.pi) for _ in range(4)))
        data.append(lfunc.SatakeData(p, vals))
    gap = abs(lfunc.partial_l(data, 3.0) - lfunc.dirichlet_sum(lfunc.dirichlet_coefficients(data, 10 ** 6), 3.0))
    ok &= gap < 1e-10
    verdict(8, "Spin factor identities", ok, f"product vs Dirichlet gap {gap:.2e}")


def test_criterion_09_gamma_poles(verdict):
    rng = random.Random(7)
    ok = True
    for _ in range(50):
        h = lfunc.HodgeNumbers({(p, 6 - p): rng.randint(0, 4) for p in range(3)},
                               rng.randint(0, 4), rng.randint(0, 4))
        factors = lfunc.gamma_factor(h)
        ok &= all(lfunc.pole_order(h, m) == lfunc.count_poles(factors, m) for m in range(-10, 11))
    h33 = lfunc.HodgeNumbers({(3, 3): 1}, 1, 0)
    ok &= lfunc.pole_order(h33, 3) == h33.h3plus
    verdict(9, "Gamma pole orders", ok)


def test_criterion_10_bochner_martinelli(verdict):
    t0 = time.perf_counter()
    bump = bmquad.CompactBump()
    res = bmquad.homotopy_residual(bump.g, bump.dg_dzbar, bmquad.default_grid(16, bump),
                                   bmquad.QuadratureConfig())
    fits = {N: bmquad.decay_sweep(bmquad.RadialTestForm(N, balanced=True)).exponent for N in (4, 6, 8)}
    elapsed = time.perf_counter() - t0
    ok = res.points == 16 and res.residual < 1e-3
    ok &= all(abs(e - (N - 1)) <= 0.1 for N, e in fits.items())
    ok &= elapsed < 60
    fit_text = ", ".join(f"N={N}: {e:.4f}" for N, e in fits.items())
    verdict(10, "Bochner-Martinelli homotopy and decay", ok,
            f"residual {res.residual:.2e}; exponents {fit_text}; {elapsed:.1f}s")
