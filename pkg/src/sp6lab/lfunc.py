"""Spin L-factors of GSp6 principal series and archimedean Gamma factors.

A local Spin factor is returned through its denominator, a polynomial in
t = l^{-s} stored as a coefficient list (constant term first).
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from scipy.special import gamma as _gamma

from .gaussrat import GaussRat

Exact = Union[Fraction, GaussRat]
Value = Union[Exact, complex]


class PoleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class UnitCharLabel:
    """Restriction of a character to Z_l^x, as residue r in Z/mZ (0 = unramified)."""

    modulus: int = 1
    residue: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def phase(self) -> Fraction:
        """Position in Q/Z; labels of different moduli compose through it."""
        return Fraction(self.residue, self.modulus)

    @property
    def unramified(self) -> bool:
        return self.residue == 0

    def __mul__(self, other: UnitCharLabel) -> UnitCharLabel:
        m = math.lcm(self.modulus, other.modulus)
        r = (self.residue * (m // self.modulus) + other.residue * (m // other.modulus)) % m
        return UnitCharLabel(m, r)

    def to_json(self) -> dict:
        return {"m": self.modulus, "r": self.residue}

    @classmethod
    def from_json(cls, obj: Mapping | None) -> UnitCharLabel:
        if not obj:
            return cls()
        return cls(int(obj.get("m", 1)), int(obj.get("r", 0)))


UNRAMIFIED = UnitCharLabel()


def _parse_value(v) -> Value:
    if isinstance(v, (list, tuple)):
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, dict):
        return GaussRat.from_json(v)
    if isinstance(v, complex):
        return v
    if isinstance(v, float):
        return complex(v)
    return Fraction(v)


def _value_json(v: Value):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, GaussRat):
        return str(v.re) if v.is_rational else v.to_json()
    return str(v)


@dataclass(frozen=True)
class SatakeData:
    """chi_0..chi_3 at one prime: (value at l, restriction to units)."""

    prime: int
    values: tuple[Value, Value, Value, Value]
    labels: tuple[UnitCharLabel, ...] = field(default=(UNRAMIFIED,) * 4)

    def __post_init__(self) -> None:
        if self.prime < 2:
            raise ValueError("prime must be >= 2")
        if len(self.values) != 4 or len(self.labels) != 4:
            raise ValueError("need exactly four characters chi_0..chi_3")
        vals = tuple(_parse_value(v) if not isinstance(v, (Fraction, GaussRat, complex)) else v
                     for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(not v for v in vals):
            raise ValueError("Satake values must be nonzero")
        kinds = {isinstance(v, complex) for v in vals}
        if len(kinds) > 1:
            raise TypeError("mix of exact and float Satake values")

    @property
    def exact(self) -> bool:
        return not isinstance(self.values[0], complex)

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "chi": [
                {"value": _value_json(v), "label": lab.to_json()}
                for v, lab in zip(self.values, self.labels)
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> SatakeData:
        chi = obj["chi"]
        if len(chi) != 4:
            raise ValueError("'chi' must list four characters")
        return cls(
            int(obj["prime"]),
            tuple(_parse_value(c["value"]) for c in chi),  # type: ignore[arg-type]
            tuple(UnitCharLabel.from_json(c.get("label")) for c in chi),
        )


def _one(exact: bool):
    return Fraction(1) if exact else complex(1)


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def subset_factors(d: SatakeData) -> list[tuple[tuple[int, ...], Value | None]]:
    """For each S subset of {1,2,3}: (S, chi_0 prod_S chi_i at l) or (S, None) when ramified."""
    out = []
    for k in range(4):
        for s in itertools.combinations((1, 2, 3), k):
            label = d.labels[0]
            val = d.values[0]
            for i in s:
                label = label * d.labels[i]
                val = val * d.values[i]
            out.append((s, val if label.unramified else None))
    return out


def spin_factor(d: SatakeData) -> list:
    """Denominator of L(pi_l, Spin, s) as coefficients in t = l^{-s}."""
    poly = [_one(d.exact)]
    for _, val in subset_factors(d):
        if val is not None:
            poly = poly_mul(poly, [_one(d.exact), -val])
    return poly


def poly_eval(poly: Sequence, t):
    acc = 0
    for c in reversed(poly):
        acc = acc * t + c
    return acc


def local_factor_value(d: SatakeData, s: float) -> complex:
    t = d.prime ** (-s)
    den = complex(poly_eval([complex(c) for c in spin_factor(d)], t))
    if abs(den) < 1e-300:
        raise PoleError(f"local factor at l={d.prime} has a pole at s={s}")
    return 1 / den


def partial_l(data: Iterable[SatakeData], s: float, cutoff: int | None = None) -> complex:
    """Product of local Spin factors over the primes l <= cutoff present in ``data``."""
    out = complex(1)
    for d in data:
        if cutoff is not None and d.prime > cutoff:
            continue
        out *= local_factor_value(d, s)
    return out


def inverse_series(poly: Sequence, n: int) -> list:
    """First n+1 power-series coefficients of 1/poly (poly[0] must be 1)."""
    if poly[0] != 1:
        raise ValueError("constant term must be 1")
    out = [poly[0] * 0 + 1]
    for k in range(1, n + 1):
        acc = 0
        for j in range(1, min(k, len(poly) - 1) + 1):
            acc = acc - poly[j] * out[k - j]
        out.append(acc)
    return out


def dirichlet_coefficients(data: Iterable[SatakeData], bound: int) -> dict[int, Value]:
    """a(n) for n <= bound supported on the listed primes: L = sum a(n) n^{-s}."""
    coeffs: dict[int, Value] = {1: Fraction(1)}
    for d in data:
        p = d.prime
        kmax = 0
        while p ** (kmax + 1) <= bound:
            kmax += 1
        local = inverse_series(spin_factor(d), kmax)
        new = dict(coeffs)
        for n, a in coeffs.items():
            pk = 1
            for k in range(1, kmax + 1):
                pk *= p
                if n * pk > bound:
                    break
                new[n * pk] = a * local[k]
        coeffs = new
    return dict(sorted(coeffs.items()))


def dirichlet_sum(coeffs: Mapping[int, Value], s: float) -> complex:
    return sum(complex(a) * n ** (-s) for n, a in coeffs.items())


# --- archimedean side --------------------------------------------------------------

def gamma_r(s: complex) -> complex:
    return cmath.exp(-s / 2 * math.log(math.pi)) * complex(_gamma(s / 2))


def gamma_c(s: complex) -> complex:
    return 2 * cmath.exp(-s * math.log(2 * math.pi)) * complex(_gamma(s))


@dataclass(frozen=True)
class HodgeNumbers:
    """h^{p,q} for p + q = 6 with h(p,q) = h(q,p), and the split h^{3,3} = h3plus + h3minus."""

    h: Mapping[tuple[int, int], int]
    h3plus: int = 0
    h3minus: int = 0

    def __post_init__(self) -> None:
        full: dict[tuple[int, int], int] = {}
        for (p, q), v in self.h.items():
            if p + q != 6 or not 0 <= p <= 6:
                raise ValueError(f"Hodge index ({p},{q}) does not have weight 6")
            if v < 0:
                raise ValueError("Hodge numbers must be nonnegative")
            for key in ((p, q), (q, p)):
                if key in full and full[key] != v:
                    raise ValueError(f"asymmetric Hodge numbers at {key}")
                full[key] = int(v)
        if self.h3plus < 0 or self.h3minus < 0:
            raise ValueError("h3plus/h3minus must be nonnegative")
        h33 = self.h3plus + self.h3minus
        if (3, 3) in full and full[(3, 3)] != h33:
            raise ValueError("h^{3,3} must equal h3plus + h3minus")
        full[(3, 3)] = h33
        for p in range(7):
            full.setdefault((p, 6 - p), 0)
        object.__setattr__(self, "h", dict(sorted(full.items())))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.h[pq]

    def h_sign(self, sign: int) -> int:
        return self.h3plus if sign > 0 else self.h3minus

    def to_json(self) -> dict:
        return {
            "h": {f"{p},{q}": v for (p, q), v in self.h.items()},
            "h3plus": self.h3plus,
            "h3minus": self.h3minus,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> HodgeNumbers:
        h = {}
        for k, v in obj.get("h", {}).items():
            p, q = (int(x) for x in str(k).split(","))
            h[(p, q)] = int(v)
        return cls(h, int(obj.get("h3plus", 0)), int(obj.get("h3minus", 0)))


@dataclass(frozen=True)
class GammaFactor:
    """Gamma_kind(s - shift) ** exponent, kind in {'R', 'C'}."""

    kind: str
    shift: int
    exponent: int

    def value(self, s: complex) -> complex:
        f = gamma_c if self.kind == "C" else gamma_r
        return f(s - self.shift) ** self.exponent

    def to_json(self) -> dict:
        return {"kind": self.kind, "shift": self.shift, "exponent": self.exponent}


def gamma_factor(h: HodgeNumbers) -> list[GammaFactor]:
    out = [GammaFactor("C", p, h[(p, 6 - p)]) for p in range(3)]
    # only p = 3 has p == q in weight 6
    out.append(GammaFactor("R", 3, h.h3plus))
    out.append(GammaFactor("R", 2, h.h3minus))
    return [g for g in out if g.exponent]


def pole_order(h: HodgeNumbers, m: int) -> int:
    """Order of the pole of the Gamma factor at the integer s = m (closed form)."""
    total = sum(h[(p, 6 - p)] for p in range(3) if p >= m)
    if m <= 3:
        total += h.h_sign((-1) ** ((m - 3) % 2))
    return total


def gamma_value(h: HodgeNumbers, s: complex) -> complex:
    out = complex(1)
    for g in gamma_factor(h):
        out *= g.value(s)
    return out


def count_poles(factors: Iterable[GammaFactor], m: int) -> int:
    """Pole order at s = m by inspecting each Gamma(.) argument; independent of pole_order."""
    total = 0
    for g in factors:
        arg = m - g.shift
        if g.kind == "C":
            # Gamma_C(x) ~ Gamma(x): poles at x = 0, -1, -2, ...
            hit = arg <= 0
        else:
            # Gamma_R(x) ~ Gamma(x/2): poles at x = 0, -2, -4, ...
            hit = arg <= 0 and arg % 2 == 0
        if hit:
            total += g.exponent
    return total
