"""C3 root data of sp6 in compact-Cartan coordinates, plus its Weyl group.

Weights are plain integer triples ``(k1, k2, k3)`` standing for
``k1*e1 + k2*e2 + k3*e3``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Weight = tuple[int, int, int]

ZERO: Weight = (0, 0, 0)


def weight(coords: Iterable[int]) -> Weight:
    w = tuple(int(c) for c in coords)
    if len(w) != 3:
        raise ValueError(f"weights have three coordinates, got {w!r}")
    return w  # type: ignore[return-value]


def wadd(a: Weight, b: Weight) -> Weight:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def wsub(a: Weight, b: Weight) -> Weight:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def wscale(c: int, a: Weight) -> Weight:
    return (c * a[0], c * a[1], c * a[2])


def wneg(a: Weight) -> Weight:
    return (-a[0], -a[1], -a[2])


def pairing(a: Sequence, b: Sequence) -> Fraction:
    """Standard scalar product on R^3."""
    return Fraction(sum(Fraction(x) * Fraction(y) for x, y in zip(a, b, strict=True)))


def is_k_dominant(w: Sequence) -> bool:
    return w[0] >= w[1] >= w[2]


def is_dominant(w: Sequence) -> bool:
    """Dominance for the Sp6 positive system (simple roots e1-e2, e2-e3, 2e3)."""
    return w[0] >= w[1] >= w[2] >= 0


def unit(j: int) -> Weight:
    v = [0, 0, 0]
    v[j] = 1
    return tuple(v)  # type: ignore[return-value]


@dataclass(frozen=True, order=True)
class Root:
    weight: Weight

    @property
    def compact(self) -> bool:
        # compact roots are +-(e_j - e_k): two nonzero entries of opposite sign
        nz = [c for c in self.weight if c]
        return len(nz) == 2 and nz[0] == -nz[1]

    @property
    def kind(self) -> str:
        return "compact" if self.compact else "noncompact"

    @property
    def positive(self) -> bool:
        # Delta+ = {2e_j, e_j + e_k, e_j - e_k (j<k)}: first nonzero entry positive
        return next(c for c in self.weight if c) > 0

    def __neg__(self) -> Root:
        return Root(wneg(self.weight))

    def label(self) -> str:
        return root_label(self.weight)


def _all_root_weights() -> list[Weight]:
    out: list[Weight] = []
    for j in range(3):
        for s in (1, -1):
            out.append(wscale(2 * s, unit(j)))
    for j, k in itertools.combinations(range(3), 2):
        for s in (1, -1):
            out.append(wscale(s, wadd(unit(j), unit(k))))
            out.append(wscale(s, wsub(unit(j), unit(k))))
    return out


ROOTS: tuple[Root, ...] = tuple(Root(w) for w in _all_root_weights())
POSITIVE_ROOTS: tuple[Root, ...] = tuple(r for r in ROOTS if r.positive)
COMPACT_ROOTS: tuple[Root, ...] = tuple(r for r in ROOTS if r.compact)
NONCOMPACT_ROOTS: tuple[Root, ...] = tuple(r for r in ROOTS if not r.compact)
POSITIVE_COMPACT: tuple[Root, ...] = tuple(r for r in POSITIVE_ROOTS if r.compact)

# Fixed enumeration of the noncompact positive roots; p^+ and p^- bases follow it.
NONCOMPACT_POSITIVE: tuple[Weight, ...] = (
    (2, 0, 0),
    (0, 2, 0),
    (0, 0, 2),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
)
NONCOMPACT_NEGATIVE: tuple[Weight, ...] = tuple(wneg(a) for a in NONCOMPACT_POSITIVE)

SIMPLE_ROOTS: tuple[Weight, ...] = ((1, -1, 0), (0, 1, -1), (0, 0, 2))


def root(coords: Iterable[int]) -> Root:
    w = weight(coords)
    r = Root(w)
    if r not in ROOTS:
        raise ValueError(f"{w} is not a root of C3")
    return r


def compact_root(i: int, j: int) -> Root:
    """The compact root e_i - e_j, 1-based indices."""
    if i == j or not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError(f"bad compact root indices ({i}, {j})")
    return Root(wsub(unit(i - 1), unit(j - 1)))


def root_label(w: Weight) -> str:
    """Human label like '2e1', '-(e1+e3)', 'e2-e3'."""
    nz = [(j + 1, c) for j, c in enumerate(w) if c]
    if len(nz) == 1:
        (j, c), = nz
        return f"{c}e{j}" if c > 0 else f"-{-c}e{j}"
    (j, a), (k, b) = nz
    if a == b == 1:
        return f"e{j}+e{k}"
    if a == b == -1:
        return f"-(e{j}+e{k})"
    if a == 1:
        return f"e{j}-e{k}"
    return f"e{k}-e{j}"


def parse_root_label(label: str) -> Weight:
    lookup = {root_label(r.weight): r.weight for r in ROOTS}
    key = label.replace(" ", "")
    if key not in lookup:
        raise ValueError(f"unknown root label {label!r}")
    return lookup[key]


def half_sum(roots: Iterable[Root]) -> tuple[Fraction, Fraction, Fraction]:
    total = [Fraction(0)] * 3
    for r in roots:
        for i in range(3):
            total[i] += r.weight[i]
    return tuple(t / 2 for t in total)  # type: ignore[return-value]


def rho() -> Weight:
    return (3, 2, 1)


def delta_k() -> Weight:
    """Half-sum of the positive compact roots."""
    return (1, 0, -1)


@dataclass(frozen=True)
class SignedPermutation:
    """Element of {+-1}^3 x| S3 acting by  (w.v)_i = signs[i] * v[perm[i]].

    ``perm`` is 0-based here; JSON uses 1-based entries.
    """

    signs: tuple[int, int, int] = (1, 1, 1)
    perm: tuple[int, int, int] = (0, 1, 2)

    def __post_init__(self) -> None:
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"not a permutation of (0, 1, 2): {self.perm}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1: {self.signs}")

    def __call__(self, v: Sequence) -> tuple:
        return tuple(self.signs[i] * v[self.perm[i]] for i in range(3))

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        # (w1 w2).v = w1.(w2.v)
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(3))
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        return SignedPermutation(signs, perm)  # type: ignore[arg-type]

    def inverse(self) -> SignedPermutation:
        perm = [0, 0, 0]
        signs = [1, 1, 1]
        for i in range(3):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return SignedPermutation(tuple(signs), tuple(perm))  # type: ignore[arg-type]

    @property
    def is_compact(self) -> bool:
        return self.signs == (1, 1, 1)

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for r in POSITIVE_ROOTS if not Root(self(r.weight)).positive)

    def to_json(self) -> dict:
        return {"signs": list(self.signs), "perm": [p + 1 for p in self.perm]}

    @classmethod
    def from_json(cls, obj: dict) -> SignedPermutation:
        return cls(tuple(obj["signs"]), tuple(p - 1 for p in obj["perm"]))


IDENTITY = SignedPermutation()


def apply(w: SignedPermutation, v: Sequence) -> tuple:
    return w(v)


def sigma(j: int) -> SignedPermutation:
    """Reflection in the hyperplane orthogonal to 2e_j (1-based)."""
    signs = [1, 1, 1]
    signs[j - 1] = -1
    return SignedPermutation(tuple(signs))  # type: ignore[arg-type]


def sigma_pair(j: int, k: int) -> SignedPermutation:
    """Reflection in the hyperplane orthogonal to e_j - e_k (1-based)."""
    perm = [0, 1, 2]
    perm[j - 1], perm[k - 1] = perm[k - 1], perm[j - 1]
    return SignedPermutation(perm=tuple(perm))  # type: ignore[arg-type]


def weyl_group() -> list[SignedPermutation]:
    return [
        SignedPermutation(signs, perm)  # type: ignore[arg-type]
        for perm in itertools.permutations(range(3))
        for signs in itertools.product((1, -1), repeat=3)
    ]


def compact_weyl_group() -> list[SignedPermutation]:
    return [g for g in weyl_group() if g.is_compact]


# Images of rho under w_1..w_8; this order fixes the packet indices.
COSET_RHO_IMAGES: tuple[Weight, ...] = (
    (3, 2, 1),
    (3, 2, -1),
    (3, 1, -2),
    (2, 1, -3),
    (3, -1, -2),
    (2, -1, -3),
    (1, -2, -3),
    (-1, -2, -3),
)


def coset_representatives() -> list[SignedPermutation]:
    """w_1..w_8, one per coset of W(Sp6)/W(K), with w_i(rho) K-dominant.

    rho is regular, so each image determines its group element uniquely.
    """
    group = weyl_group()
    reps = []
    for target in COSET_RHO_IMAGES:
        (w,) = [g for g in group if g(rho()) == target]
        reps.append(w)
    return reps
