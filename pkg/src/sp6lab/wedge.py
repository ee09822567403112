"""The spaces  wedge^p p+ (x) wedge^q p-  with the adjoint action of k.

Basis monomials are pairs of strictly increasing index tuples into the fixed
root enumerations ``NONCOMPACT_POSITIVE`` / ``NONCOMPACT_NEGATIVE``
(2e1, 2e2, 2e3, e1+e2, e1+e3, e2+e3 and their negatives).  A wedge written in
any other order is brought to this one with the sign of the sorting
permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .gaussrat import ONE, ZERO, GaussRat
from .matlie import GaussRatMatrix, bracket, coordinates, generator
from .rootsys import (
    NONCOMPACT_NEGATIVE,
    NONCOMPACT_POSITIVE,
    Root,
    Weight,
    compact_root,
    parse_root_label,
    root_label,
    wadd,
)
from .uchar import wedge_tensor_char

SPACES = (NONCOMPACT_POSITIVE, NONCOMPACT_NEGATIVE)


class WedgeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class WedgeBasisIndex:
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self) -> None:
        for part in (self.pos, self.neg):
            if any(not 0 <= i < 6 for i in part):
                raise WedgeError(f"root index out of range in {part}")
            if any(a >= b for a, b in zip(part, part[1:])):
                raise WedgeError(f"indices must be strictly increasing: {part}")

    @property
    def grading(self) -> tuple[int, int]:
        return len(self.pos), len(self.neg)

    @property
    def weight(self) -> Weight:
        w = (0, 0, 0)
        for i in self.pos:
            w = wadd(w, NONCOMPACT_POSITIVE[i])
        for i in self.neg:
            w = wadd(w, NONCOMPACT_NEGATIVE[i])
        return w

    def labels(self) -> tuple[list[str], list[str]]:
        return (
            [root_label(NONCOMPACT_POSITIVE[i]) for i in self.pos],
            [root_label(NONCOMPACT_NEGATIVE[i]) for i in self.neg],
        )


def _sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sign of the sorting permutation and the sorted tuple; None on a repeat."""
    if len(set(idx)) != len(idx):
        return None
    sign = 1
    for a, b in itertools.combinations(range(len(idx)), 2):
        if idx[a] > idx[b]:
            sign = -sign
    return sign, tuple(sorted(idx))


class WedgeVector:
    """Sparse element of a single graded piece, coefficients in Q(i)."""

    __slots__ = ("coeffs", "grading")

    def __init__(self, coeffs: Mapping[WedgeBasisIndex, object] | None = None,
                 grading: tuple[int, int] | None = None) -> None:
        clean: dict[WedgeBasisIndex, GaussRat] = {}
        for k, c in (coeffs or {}).items():
            c = GaussRat.coerce(c)
            if c:
                clean[k] = c
        gradings = {k.grading for k in clean}
        if len(gradings) > 1:
            raise WedgeError(f"mixed gradings {sorted(gradings)}")
        if grading is None:
            grading = gradings.pop() if gradings else (0, 0)
        elif gradings and gradings != {tuple(grading)}:
            raise WedgeError(f"declared grading {grading} but terms have {gradings}")
        self.coeffs = dict(sorted(clean.items()))
        self.grading = tuple(grading)

    def __add__(self, other: WedgeVector) -> WedgeVector:
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return WedgeVector(out, self.grading if self.coeffs else other.grading)

    def __sub__(self, other: WedgeVector) -> WedgeVector:
        return self + other.scale(-1)

    def scale(self, c) -> WedgeVector:
        c = GaussRat.coerce(c)
        return WedgeVector({k: c * v for k, v in self.coeffs.items()}, self.grading)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WedgeVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(f"{c}*{k.labels()}" for k, c in self.coeffs.items())
        return f"WedgeVector({body or '0'})"

    def ratio_to(self, other: WedgeVector) -> GaussRat | None:
        """c with self == c*other, or None if not proportional."""
        if not other:
            raise WedgeError("ratio to the zero vector")
        if not self:
            return ZERO
        k = next(iter(other.coeffs))
        c = self.coeffs.get(k, ZERO) / other.coeffs[k]
        return c if self == other.scale(c) else None

    def to_json(self) -> list[dict]:
        out = []
        for k, c in self.coeffs.items():
            pos, neg = k.labels()
            out.append({"pos": pos, "neg": neg, "coeff": c.to_json()})
        return out

    @classmethod
    def from_json(cls, obj: Iterable[dict]) -> WedgeVector:
        v = WedgeVector()
        for term in obj:
            v = v + from_factors(term["pos"], term["neg"]).scale(
                GaussRat.from_json(term["coeff"])
            )
        return v


def basis_vector(idx: WedgeBasisIndex) -> WedgeVector:
    return WedgeVector({idx: ONE})


def _root_index(label, space: int) -> int:
    w = parse_root_label(label) if isinstance(label, str) else tuple(label)
    try:
        return SPACES[space].index(w)
    except ValueError:
        side = "p+" if space == 0 else "p-"
        raise WedgeError(f"{label!r} is not a root vector of {side}") from None


def from_factors(pos: Sequence, neg: Sequence) -> WedgeVector:
    """Wedge of the given root vectors, in the given order (labels or weights)."""
    ip = [_root_index(x, 0) for x in pos]
    ineg = [_root_index(x, 1) for x in neg]
    sp, sn = _sort_with_sign(ip), _sort_with_sign(ineg)
    if sp is None or sn is None:
        return WedgeVector(grading=(len(ip), len(ineg)))
    return WedgeVector({WedgeBasisIndex(sp[1], sn[1]): GaussRat(sp[0] * sn[0])})


def x0() -> WedgeVector:
    return from_factors([(2, 0, 0), (0, 2, 0), (0, 0, 2)], [(-2, 0, 0), (0, -2, 0), (0, 0, -2)])


def x_224() -> WedgeVector:
    """Highest weight vector of tau(2,2,-4) inside wedge^3 p+ (x) wedge^3 p-."""
    return from_factors(
        [(2, 0, 0), (0, 2, 0), (1, 1, 0)], [(-1, 0, -1), (0, -1, -1), (0, 0, -2)]
    )


def x_422() -> WedgeVector:
    """Highest weight vector of tau(4,-2,-2) inside wedge^3 p+ (x) wedge^3 p-."""
    return from_factors(
        [(2, 0, 0), (1, 1, 0), (1, 0, 1)], [(0, -1, -1), (0, -2, 0), (0, 0, -2)]
    )


HIGHEST_WEIGHT_VECTORS = {(2, 2, -4): x_224, (4, -2, -2): x_422}


def graded_basis(p: int, q: int) -> Iterator[WedgeBasisIndex]:
    for pos in itertools.combinations(range(6), p):
        for neg in itertools.combinations(range(6), q):
            yield WedgeBasisIndex(pos, neg)


# --- adjoint action ------------------------------------------------------------

@lru_cache(maxsize=None)
def _ad_on_root_vector(m: GaussRatMatrix, space: int, i: int) -> tuple[tuple[int, GaussRat], ...]:
    """[M, X_b] for b the i-th root of p+ (space 0) or p- (space 1), in that basis."""
    b = SPACES[space][i]
    coords = coordinates(bracket(m, generator(b)))
    out = []
    for key, c in coords.items():
        if isinstance(key, str) or key not in SPACES[space]:
            raise WedgeError(
                f"[M, X_{root_label(b)}] leaves the {'p+' if space == 0 else 'p-'} span"
            )
        out.append((SPACES[space].index(key), c))
    return tuple(out)


def ad_element(m: GaussRatMatrix, v: WedgeVector) -> WedgeVector:
    """Derivation extension of ad(M) to wedge tensors, M in the complexified k."""
    out: dict[WedgeBasisIndex, GaussRat] = {}
    for idx, c in v.coeffs.items():
        parts = (idx.pos, idx.neg)
        for space in (0, 1):
            factors = parts[space]
            for slot, i in enumerate(factors):
                for j, cc in _ad_on_root_vector(m, space, i):
                    new = list(factors)
                    new[slot] = j
                    srt = _sort_with_sign(new)
                    if srt is None:
                        continue
                    sign, tup = srt
                    key = WedgeBasisIndex(tup, idx.neg) if space == 0 else WedgeBasisIndex(idx.pos, tup)
                    out[key] = out.get(key, ZERO) + c * cc * sign
    return WedgeVector(out, v.grading)


def _as_compact(r) -> Root:
    if isinstance(r, Root):
        root = r
    elif isinstance(r, str):
        root = Root(parse_root_label(r))
    else:
        root = Root(tuple(r))
    if not root.compact:
        raise WedgeError(f"{root.weight} is not a compact root")
    return root


def ad(r, v: WedgeVector) -> WedgeVector:
    """Adjoint action of the compact root vector X_r."""
    root = _as_compact(r)
    return ad_element(generator(root.weight), v)


def ad_power(r, v: WedgeVector, n: int = 2) -> WedgeVector:
    for _ in range(n):
        v = ad(r, v)
    return v


def apply_ad_squares(roots: Sequence, v: WedgeVector) -> WedgeVector:
    """Apply Ad^2 for each root in order (first entry acts first)."""
    for r in roots:
        v = ad_power(r, v, 2)
    return v


def weight_decompose(v: WedgeVector) -> dict[Weight, WedgeVector]:
    groups: dict[Weight, dict] = {}
    for idx, c in v.coeffs.items():
        groups.setdefault(idx.weight, {})[idx] = c
    return {w: WedgeVector(terms, v.grading) for w, terms in sorted(groups.items())}


def weight_space_dimension(p: int, q: int, w: Weight) -> int:
    return sum(1 for idx in graded_basis(p, q) if idx.weight == tuple(w))


# --- the projector ---------------------------------------------------------------

# Raising sequences carry X_0 (weight 0) to the highest weight; lowering sequences
# are the reverse walk.  Entries are (i, j) for e_i - e_j, applied first to last.
RAISING = {
    (2, 2, -4): ((2, 3), (1, 3)),
    (4, -2, -2): ((1, 2), (1, 3)),
}
LOWERING = {
    (2, 2, -4): ((3, 1), (3, 2)),
    (4, -2, -2): ((3, 1), (2, 1)),
}


@dataclass(frozen=True)
class ProjectionData:
    target: Weight
    step1: GaussRat  # raising(X_0) = step1 * X_target
    step2: GaussRat  # raising(lowering(X_target)) = step2 * X_target

    @property
    def alpha(self) -> GaussRat:
        return self.step1 / self.step2

    def to_json(self) -> dict:
        def fmt(x: GaussRat):
            return str(x.re) if x.is_rational else x.to_json()

        return {
            "target": list(self.target),
            "alpha": fmt(self.alpha),
            "step1": fmt(self.step1),
            "step2": fmt(self.step2),
        }


def _roots(seq) -> list[Root]:
    return [compact_root(i, j) for i, j in seq]


def projection_data(target: Weight) -> ProjectionData:
    target = tuple(target)
    if target not in HIGHEST_WEIGHT_VECTORS:
        raise WedgeError(f"target must be one of {sorted(HIGHEST_WEIGHT_VECTORS)}")
    ambient = wedge_tensor_char(3, 3)[target]
    if ambient != 1 or weight_space_dimension(3, 3, target) != 1:
        raise WedgeError(f"weight {target} is not multiplicity-free in the ambient space")
    hw = HIGHEST_WEIGHT_VECTORS[target]()
    up = _roots(RAISING[target])
    down = _roots(LOWERING[target])
    s1 = apply_ad_squares(up, x0()).ratio_to(hw)
    s2 = apply_ad_squares(up, apply_ad_squares(down, hw)).ratio_to(hw)
    if s1 is None or s2 is None:
        raise WedgeError("composite did not return a multiple of the highest weight vector")
    return ProjectionData(target, s1, s2)


def projection_coefficient(target: Weight) -> Fraction:
    """alpha with pr_tau(X_0) = alpha * lowering(X_target); exact rational."""
    a = projection_data(target).alpha
    if not a.is_rational:
        raise WedgeError(f"projection coefficient {a} is not rational")
    return a.re


def lowering_image(target: Weight) -> WedgeVector:
    """The weight-0 vector obtained from X_target by the lowering composite."""
    return apply_ad_squares(_roots(LOWERING[tuple(target)]), HIGHEST_WEIGHT_VECTORS[tuple(target)]())


def raising_annihilates(v: WedgeVector) -> dict[str, bool]:
    return {
        root_label(compact_root(i, j).weight): not ad(compact_root(i, j), v)
        for i, j in ((1, 2), (2, 3), (1, 3))
    }
