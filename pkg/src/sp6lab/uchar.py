"""Character ring of U(3): Weyl characters as Laurent polynomials and their decomposition.

A character is a finitely supported map from weights to integer multiplicities.
Irreducible characters come from the alternant ratio a_{hw+delta} / a_delta
computed by exact Laurent division, so a non-zero remainder signals a bug
rather than being silently absorbed.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .rootsys import NONCOMPACT_NEGATIVE, NONCOMPACT_POSITIVE, Weight, is_k_dominant, wadd

SHIFT: Weight = (2, 1, 0)


class NotACharacter(ValueError):
    pass


@dataclass(frozen=True)
class LaurentChar:
    terms: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {tuple(w): int(c) for w, c in self.terms.items() if c}
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def monomial(cls, w: Weight, c: int = 1) -> LaurentChar:
        return cls({w: c})

    def __add__(self, other: LaurentChar) -> LaurentChar:
        out = Counter(self.terms)
        out.update(other.terms)
        return LaurentChar(out)

    def __sub__(self, other: LaurentChar) -> LaurentChar:
        out = Counter(self.terms)
        out.subtract(other.terms)
        return LaurentChar(out)

    def scale(self, c: int) -> LaurentChar:
        return LaurentChar({w: c * m for w, m in self.terms.items()})

    def __mul__(self, other: LaurentChar) -> LaurentChar:
        out: dict[Weight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = wadd(w1, w2)
                out[w] = out.get(w, 0) + c1 * c2
        return LaurentChar(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentChar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, w: Weight) -> int:
        return self.terms.get(tuple(w), 0)

    def dimension(self) -> int:
        """Value at (1, 1, 1)."""
        return sum(self.terms.values())

    def is_symmetric(self) -> bool:
        for w, c in self.terms.items():
            for p in itertools.permutations(w):
                if self.terms.get(p, 0) != c:
                    return False
        return True

    def swap(self, i: int, j: int) -> LaurentChar:
        def sw(w):
            w = list(w)
            w[i], w[j] = w[j], w[i]
            return tuple(w)

        return LaurentChar({sw(w): c for w, c in self.terms.items()})

    def dual(self) -> LaurentChar:
        return LaurentChar({(-w[0], -w[1], -w[2]): c for w, c in self.terms.items()})


def _alternant(w: Weight) -> LaurentChar:
    """sum over S3 of sign(s) x^{s(w)}."""
    out: dict[Weight, int] = {}
    for perm in itertools.permutations(range(3)):
        sign = 1
        for a, b in itertools.combinations(range(3), 2):
            if perm[a] > perm[b]:
                sign = -sign
        key = tuple(w[perm[i]] for i in range(3))
        out[key] = out.get(key, 0) + sign
    return LaurentChar(out)


def divide_by_difference(p: LaurentChar, a: int, b: int) -> LaurentChar:
    """Exact quotient of p by (x_a - x_b); raises ArithmeticError on a remainder."""
    rem = dict(p.terms)
    if not rem:
        return LaurentChar()
    floor = min(w[a] for w in rem)
    quot: dict[Weight, int] = {}
    while rem:
        # leading term in x_a, ties broken deterministically
        w = max(rem, key=lambda u: (u[a], u))
        c = rem.pop(w)
        q = list(w)
        q[a] -= 1
        q = tuple(q)
        if q[a] < floor:
            raise ArithmeticError(f"not divisible by (x{a + 1} - x{b + 1})")
        quot[q] = quot.get(q, 0) + c
        shifted = list(q)
        shifted[b] += 1
        shifted = tuple(shifted)
        # subtract c * x^q * (x_a - x_b): the x^w part is gone, add back c*x^q*x_b
        rem[shifted] = rem.get(shifted, 0) + c
        if rem[shifted] == 0:
            del rem[shifted]
    return LaurentChar(quot)


def _check_dominant(hw: Weight) -> Weight:
    hw = tuple(int(x) for x in hw)
    if len(hw) != 3 or not is_k_dominant(hw):
        raise ValueError(f"highest weight must satisfy k1 >= k2 >= k3, got {hw}")
    return hw  # type: ignore[return-value]


@lru_cache(maxsize=None)
def irrep_char(hw: Weight) -> LaurentChar:
    """Character of tau_hw via the alternant ratio."""
    hw = _check_dominant(hw)
    num = _alternant(wadd(hw, SHIFT))
    q = divide_by_difference(num, 0, 1)
    q = divide_by_difference(q, 0, 2)
    q = divide_by_difference(q, 1, 2)
    # a_delta = (x1 - x2)(x1 - x3)(x2 - x3) x^{(0,0,0)}; SHIFT = (2,1,0) matches its leading term
    return q


def dim(hw: Weight) -> int:
    a, b, c = _check_dominant(hw)
    return (a - b + 1) * (b - c + 1) * (a - c + 2) // 2


NONCOMPACT = {"p+": NONCOMPACT_POSITIVE, "p-": NONCOMPACT_NEGATIVE}


def wedge_char(space: str, k: int) -> LaurentChar:
    """k-th elementary symmetric polynomial in the six weight monomials of p+ or p-."""
    if space not in NONCOMPACT:
        raise ValueError(f"space must be 'p+' or 'p-', got {space!r}")
    if not 0 <= k <= 6:
        raise ValueError(f"wedge degree must be in 0..6, got {k}")
    out: dict[Weight, int] = {}
    for subset in itertools.combinations(NONCOMPACT[space], k):
        w = (0, 0, 0)
        for r in subset:
            w = wadd(w, r)
        out[w] = out.get(w, 0) + 1
    return LaurentChar(out)


def wedge_tensor_char(p: int, q: int) -> LaurentChar:
    return wedge_char("p+", p) * wedge_char("p-", q)


@dataclass(frozen=True)
class DecompTable:
    entries: Mapping[Weight, int]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "entries", dict(sorted(self.entries.items(), reverse=True))
        )

    def total_dimension(self) -> int:
        return sum(m * dim(hw) for hw, m in self.entries.items())

    def character(self) -> LaurentChar:
        out = LaurentChar()
        for hw, m in self.entries.items():
            out = out + irrep_char(hw).scale(m)
        return out

    def to_json(self) -> list[dict]:
        return [{"hw": list(hw), "mult": m} for hw, m in self.entries.items()]

    @classmethod
    def from_json(cls, obj: Iterable[dict]) -> DecompTable:
        return cls({tuple(e["hw"]): int(e["mult"]) for e in obj})


def decompose(ch: LaurentChar) -> DecompTable:
    """Greedy leading-term subtraction of irreducible characters."""
    rest = ch
    found: dict[Weight, int] = {}
    budget = ch.dimension()
    rounds = 0
    while rest:
        if any(c < 0 for c in rest.terms.values()) and rounds == 0:
            raise NotACharacter("negative multiplicity in input")
        dominant = [w for w in rest.terms if is_k_dominant(w)]
        if not dominant:
            raise NotACharacter("remainder has no dominant weight")
        top = max(dominant)
        m = rest.terms[top]
        if m < 0:
            raise NotACharacter(f"negative leading multiplicity at {top}")
        rest = rest - irrep_char(top).scale(m)
        found[top] = found.get(top, 0) + m
        rounds += 1
        if rounds > budget:
            raise NotACharacter("decomposition did not terminate within dim(ch) rounds")
    return DecompTable(found)


def gt_patterns(top: Weight) -> Iterable[tuple[Weight, tuple[int, int], int]]:
    """Gelfand-Tsetlin patterns with top row ``top``: (top, middle, bottom)."""
    l1, l2, l3 = _check_dominant(top)
    for m1 in range(l2, l1 + 1):
        for m2 in range(l3, l2 + 1):
            for b in range(m2, m1 + 1):
                yield top, (m1, m2), b


def gt_character(top: Weight) -> LaurentChar:
    """Weight multiset of tau_top by Gelfand-Tsetlin enumeration."""
    out: Counter = Counter()
    s = sum(top)
    for _, (m1, m2), b in gt_patterns(top):
        out[(b, m1 + m2 - b, s - m1 - m2)] += 1
    return LaurentChar(out)


def expected_dimension(p: int, q: int) -> int:
    return comb(6, p) * comb(6, q)
