"""Explicit 6x6 matrices over Q(i) for the compact Cartan and root vectors of sp6.

Block notation ``(A, B; C, D)`` means the 6x6 matrix with 3x3 blocks A, B in
the top row and C, D in the bottom row.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Union

from .gaussrat import I, ONE, ZERO, GaussRat
from .rootsys import ROOTS, Root, Weight, parse_root_label, root_label

Label = Union[str, Weight, Root]


class GaussRatMatrix:
    """Immutable dense 6x6 matrix over Q(i)."""

    __slots__ = ("rows", "_hash")
    n = 6

    def __init__(self, rows: Iterable[Iterable]) -> None:
        self.rows = tuple(tuple(GaussRat.coerce(x) for x in row) for row in rows)
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError("GaussRatMatrix must be 6x6")
        self._hash = None

    @classmethod
    def zero(cls) -> GaussRatMatrix:
        return cls([[ZERO] * cls.n for _ in range(cls.n)])

    @classmethod
    def identity(cls) -> GaussRatMatrix:
        return cls([[ONE if i == j else ZERO for j in range(cls.n)] for i in range(cls.n)])

    @classmethod
    def from_blocks(cls, a, b, c, d) -> GaussRatMatrix:
        rows = [list(a[i]) + list(b[i]) for i in range(3)]
        rows += [list(c[i]) + list(d[i]) for i in range(3)]
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]) -> GaussRat:
        return self.rows[ij[0]][ij[1]]

    def entries(self) -> list[GaussRat]:
        return [x for row in self.rows for x in row]

    def block(self, bi: int, bj: int) -> list[list[GaussRat]]:
        return [list(self.rows[3 * bi + i][3 * bj: 3 * bj + 3]) for i in range(3)]

    def __add__(self, other: GaussRatMatrix) -> GaussRatMatrix:
        return GaussRatMatrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: GaussRatMatrix) -> GaussRatMatrix:
        return GaussRatMatrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> GaussRatMatrix:
        return GaussRatMatrix([[-x for x in r] for r in self.rows])

    def scale(self, c) -> GaussRatMatrix:
        c = GaussRat.coerce(c)
        return GaussRatMatrix([[c * x for x in r] for r in self.rows])

    __rmul__ = scale

    def __matmul__(self, other: GaussRatMatrix) -> GaussRatMatrix:
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = ZERO
                for x, y in zip(r, col):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return GaussRatMatrix(out)

    def transpose(self) -> GaussRatMatrix:
        return GaussRatMatrix(list(zip(*self.rows)))

    def conjugate_transpose(self) -> GaussRatMatrix:
        return GaussRatMatrix([[x.conjugate() for x in col] for col in zip(*self.rows)])

    def trace(self) -> GaussRat:
        acc = ZERO
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussRatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return "GaussRatMatrix(\n" + "\n".join(
            "  [" + ", ".join(str(x) for x in r) + "]" for r in self.rows
        ) + "\n)"

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj: list) -> GaussRatMatrix:
        return cls([[GaussRat.from_json(x) for x in r] for r in obj])


def _m3(entries: dict[tuple[int, int], int]) -> list[list[GaussRat]]:
    m = [[ZERO] * 3 for _ in range(3)]
    for (i, j), v in entries.items():
        m[i][j] = GaussRat(v)
    return m


def _smul(c: GaussRat, a: list[list[GaussRat]]) -> list[list[GaussRat]]:
    return [[c * x for x in row] for row in a]


def d_mat(j: int) -> list[list[GaussRat]]:
    return _m3({(j, j): 1})


def e_mat(j: int, k: int) -> list[list[GaussRat]]:
    return _m3({(j, k): 1, (k, j): 1})


def f_mat(j: int, k: int) -> list[list[GaussRat]]:
    return _m3({(j, k): 1, (k, j): -1})


_ZERO3 = [[ZERO] * 3 for _ in range(3)]


def cartan(j: int) -> GaussRatMatrix:
    """T_j = -i (0, D_j; -D_j, 0), 1-based j."""
    d = d_mat(j - 1)
    return GaussRatMatrix.from_blocks(_ZERO3, _smul(-I, d), _smul(I, d), _ZERO3)


def _noncompact_vector(a: list[list[GaussRat]], sign: int) -> GaussRatMatrix:
    # (A, +-iA; +-iA, -A)
    return GaussRatMatrix.from_blocks(
        a, _smul(sign * I, a), _smul(sign * I, a), _smul(GaussRat(-1), a)
    )


def root_vector(w: Weight) -> GaussRatMatrix:
    nz = [(j, c) for j, c in enumerate(w) if c]
    if len(nz) == 1:
        (j, c), = nz
        if abs(c) != 2:
            raise KeyError(f"no root {w}")
        return _noncompact_vector(d_mat(j), 1 if c > 0 else -1)
    if len(nz) != 2:
        raise KeyError(f"no root {w}")
    (j, a), (k, b) = nz
    if a == b and abs(a) == 1:
        return _noncompact_vector(e_mat(j, k), a)
    if a == -b and abs(a) == 1:
        # X_{+-(e_j-e_k)} = (+-F_jk, -i E_jk; i E_jk, +-F_jk)
        s = GaussRat(a)
        f = _smul(s, f_mat(j, k))
        e = e_mat(j, k)
        return GaussRatMatrix.from_blocks(f, _smul(-I, e), _smul(I, e), f)
    raise KeyError(f"no root {w}")


CARTAN_LABELS = ("T1", "T2", "T3")
ROOT_WEIGHTS: tuple[Weight, ...] = tuple(r.weight for r in ROOTS)
LABELS: tuple[str, ...] = CARTAN_LABELS + tuple(root_label(w) for w in ROOT_WEIGHTS)


def _normalize_label(label: Label) -> str | Weight:
    if isinstance(label, Root):
        return label.weight
    if isinstance(label, str):
        key = label.strip()
        if key in CARTAN_LABELS:
            return key
        if key.startswith("X_"):
            key = key[2:]
        return parse_root_label(key)
    w = tuple(label)
    if w not in ROOT_WEIGHTS:
        raise KeyError(f"unknown generator label {label!r}")
    return w  # type: ignore[return-value]


@lru_cache(maxsize=None)
def _generator(key: str | Weight) -> GaussRatMatrix:
    if isinstance(key, str):
        return cartan(int(key[1]))
    return root_vector(key)


def generator(label: Label) -> GaussRatMatrix:
    """T1..T3 (by name) or X_alpha (by root weight, Root, or label such as 'e1-e2')."""
    try:
        key = _normalize_label(label)
    except ValueError as exc:
        raise KeyError(str(exc)) from None
    return _generator(key)


def all_generators() -> dict[str | Weight, GaussRatMatrix]:
    out: dict[str | Weight, GaussRatMatrix] = {t: generator(t) for t in CARTAN_LABELS}
    for w in ROOT_WEIGHTS:
        out[w] = generator(w)
    return out


def bracket(a: GaussRatMatrix, b: GaussRatMatrix) -> GaussRatMatrix:
    return (a @ b) - (b @ a)


def weight_of(m: GaussRatMatrix) -> Weight | None:
    """(c1, c2, c3) with [T_j, M] = c_j M for all j, or None if M is not a weight vector."""
    if m.is_zero():
        return None
    pivot = next(x for x in m.entries() if x)
    idx = m.entries().index(pivot)
    coords = []
    for j in (1, 2, 3):
        b = bracket(cartan(j), m)
        c = b.entries()[idx] / pivot
        if not c.is_rational or c.re.denominator != 1:
            return None
        if b != m.scale(c):
            return None
        coords.append(int(c.re))
    return tuple(coords)  # type: ignore[return-value]


J = GaussRatMatrix.from_blocks(_ZERO3, _m3({(0, 0): 1, (1, 1): 1, (2, 2): 1}),
                               _m3({(0, 0): -1, (1, 1): -1, (2, 2): -1}), _ZERO3)


def similitude_factor(x: GaussRatMatrix) -> GaussRat | None:
    """c with  X^t J + J X = c J  (the infinitesimal similitude), or None."""
    lhs = x.transpose() @ J + J @ x
    c = lhs[0, 3]  # J[0, 3] = 1
    return c if lhs == J.scale(c) else None


def _is_symmetric(a: list[list[GaussRat]]) -> bool:
    return all(a[i][j] == a[j][i] for i in range(3) for j in range(3))


def in_p_plus(x: GaussRatMatrix) -> bool:
    a = x.block(0, 0)
    return (
        _is_symmetric(a)
        and x.block(0, 1) == _smul(I, a)
        and x.block(1, 0) == _smul(I, a)
        and x.block(1, 1) == _smul(GaussRat(-1), a)
    )


def in_p_minus(x: GaussRatMatrix) -> bool:
    a = x.block(0, 0)
    return (
        _is_symmetric(a)
        and x.block(0, 1) == _smul(-I, a)
        and x.block(1, 0) == _smul(-I, a)
        and x.block(1, 1) == _smul(GaussRat(-1), a)
    )


def in_k(x: GaussRatMatrix) -> bool:
    """Complexified k: (A, B; -B, A) with A antisymmetric and B symmetric."""
    a, b = x.block(0, 0), x.block(0, 1)
    return (
        all(a[i][j] == -a[j][i] for i in range(3) for j in range(3))
        and _is_symmetric(b)
        and x.block(1, 0) == _smul(GaussRat(-1), b)
        and x.block(1, 1) == a
    )


# --- coordinates in the 21-generator basis --------------------------------------

class NotInSpan(ValueError):
    pass


@lru_cache(maxsize=1)
def _coordinate_system() -> tuple[tuple[str | Weight, ...], list[int], list[list[GaussRat]]]:
    """Pick 21 independent entry positions and invert the restricted basis matrix."""
    gens = all_generators()
    keys = tuple(gens)
    cols = [gens[k].entries() for k in keys]
    n = len(keys)
    # rows of B (36 x 21): B[r][c] = entry r of generator c
    rows = [[cols[c][r] for c in range(n)] for r in range(36)]
    pivots: list[int] = []
    work = [list(r) for r in rows]
    reduced: list[list[GaussRat]] = []
    for r in range(36):
        v = list(work[r])
        for pr, prow, pc in reduced:
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, prow)]
        nz = next((c for c in range(n) if v[c]), None)
        if nz is None:
            continue
        inv = v[nz].inverse()
        v = [x * inv for x in v]
        reduced.append((r, v, nz))
        pivots.append(r)
        if len(pivots) == n:
            break
    if len(pivots) != n:
        raise RuntimeError("generators are not linearly independent")
    square = [list(rows[r]) for r in pivots]
    inverse = _invert(square)
    return keys, pivots, inverse


def _invert(m: list[list[GaussRat]]) -> list[list[GaussRat]]:
    n = len(m)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=4096)
def coordinates(m: GaussRatMatrix) -> dict[str | Weight, GaussRat]:
    """Exact coefficients of M in the basis T1..T3, X_alpha; raises NotInSpan."""
    keys, pivots, inverse = _coordinate_system()
    entries = m.entries()
    rhs = [entries[r] for r in pivots]
    coeffs = []
    for row in inverse:
        acc = ZERO
        for x, y in zip(row, rhs):
            if x and y:
                acc = acc + x * y
        coeffs.append(acc)
    recon = GaussRatMatrix.zero()
    gens = all_generators()
    for k, c in zip(keys, coeffs):
        if c:
            recon = recon + gens[k].scale(c)
    if recon != m:
        raise NotInSpan("matrix is not in the span of the sp6 generators")
    return {k: c for k, c in zip(keys, coeffs) if c}


def compact_pairs() -> list[tuple[Weight, Weight]]:
    ws = [r.weight for r in ROOTS if r.compact]
    return list(itertools.permutations(ws, 2))
