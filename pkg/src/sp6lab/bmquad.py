"""Numerical Bochner-Martinelli operator on the punctured disc (dimension one).

For a (0,1)-form h(w) dw-bar on the punctured disc of radius 1/2 the operator is

    K(h)(z) = (1/pi) * integral of h(w) / (z - w) dA(w),

the sign being the one for which  dbar K + K dbar = id  holds (checked on
dbar of compactly supported g).  Read literally with dw ^ dw-bar = -2i dA,
the kernel (m-1)!/(2 pi i)^m at m = 1 gives the opposite sign; pass
``convention="literal"`` to get that version.

Quadrature: a smooth partition of unity splits the integrand into a disc of
radius |z|/2 around z, integrated in polar coordinates centred at z (the
1/|z-w| singularity cancels against the Jacobian), and the rest, integrated in
log-polar coordinates centred at 0 with Gauss-Legendre panels that are equal
in log|w|.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

log = logging.getLogger(__name__)

OUTER_RADIUS = 0.5
CONVENTION = "K(h dwbar)(z) = (1/pi) * int h(w) / (z - w) dA(w)"

Coefficient = Callable[[np.ndarray], np.ndarray]


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, diagnostics: dict) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics


class TruncationZoneError(ValueError):
    pass


@dataclass(frozen=True)
class QuadratureConfig:
    radial_points: int = 24     # Gauss-Legendre nodes per dyadic panel in log|w|
    angular_points: int = 256   # trapezoid nodes in the angle
    eps: float = 1e-12          # inner truncation radius
    tol: float = 1e-3           # allowed disagreement between a level and its refinement
    breakpoints: tuple[float, ...] = ()   # extra radial panel edges

    def __post_init__(self) -> None:
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        if self.radial_points < 4 or self.angular_points < 4:
            raise ValueError("point counts must be at least 4")

    def refined(self, factor: int = 2) -> QuadratureConfig:
        return replace(
            self,
            radial_points=self.radial_points * factor,
            angular_points=self.angular_points * factor,
        )


# --- smooth cutoffs ---------------------------------------------------------------

def _flat(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    pos = t > 0
    out[pos] = np.exp(-1.0 / t[pos])
    return out


def _dflat(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    pos = t > 0
    out[pos] = np.exp(-1.0 / t[pos]) / t[pos] ** 2
    return out


def smooth_step(u: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for u <= 0, 1 for u >= 1."""
    a, b = _flat(u), _flat(1.0 - np.asarray(u, dtype=float))
    return a / (a + b)


def smooth_step_derivative(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    a, b = _flat(u), _flat(1.0 - u)
    da, db = _dflat(u), _dflat(1.0 - u)
    den = (a + b) ** 2
    return (da * b + a * db) / den


def cutoff(rho: np.ndarray, inner: float, outer: float) -> np.ndarray:
    """1 for rho <= inner, 0 for rho >= outer, smooth in between."""
    return 1.0 - smooth_step((np.asarray(rho) - inner) / (outer - inner))


def cutoff_derivative(rho: np.ndarray, inner: float, outer: float) -> np.ndarray:
    return -smooth_step_derivative((np.asarray(rho) - inner) / (outer - inner)) / (outer - inner)


def bump(x: np.ndarray) -> np.ndarray:
    """exp(-1/(1-x^2)) on (-1, 1), zero outside."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1
    out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return out


def bump_derivative(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1
    xi = x[inside]
    out[inside] = np.exp(-1.0 / (1.0 - xi ** 2)) * (-2.0 * xi / (1.0 - xi ** 2) ** 2)
    return out


# --- test forms -------------------------------------------------------------------

@dataclass(frozen=True)
class RadialTestForm:
    """f(z) = |log|z||^{-N} * cutoff(|z|) - mu * psi(|z|).

    ``cutoff`` is 1 up to cutoff/2 and vanishes from ``cutoff`` on.  With
    ``balanced=True`` the compensating bump psi, supported in
    [cutoff/4, cutoff/2], is weighted so that  int_0 f(rho) drho/rho = 0;
    otherwise mu = 0.
    """

    N: int
    cutoff: float = 0.25
    balanced: bool = False
    mu: float = field(init=False, default=0.0)

    def __post_init__(self) -> None:
        if not 0 < self.cutoff < OUTER_RADIUS:
            raise ValueError("cutoff radius must lie in (0, 1/2)")
        if self.N < 1:
            raise ValueError("decay exponent N must be positive")
        if self.balanced:
            object.__setattr__(self, "mu", self._balancing_weight())

    @property
    def breakpoints(self) -> tuple[float, ...]:
        # the transitions are flat but steep; give each several panels
        r = self.cutoff
        pieces = 6
        return tuple(r / 4 * 4 ** (k / (2 * pieces)) for k in range(2 * pieces + 1))

    def _log_part(self, rho):
        with np.errstate(divide="ignore"):
            return np.abs(np.log(rho)) ** (-self.N)

    def _psi(self, rho):
        lo, hi = self.cutoff / 4, self.cutoff / 2
        return bump((2 * np.asarray(rho) - lo - hi) / (hi - lo))

    def _dpsi(self, rho):
        lo, hi = self.cutoff / 4, self.cutoff / 2
        return bump_derivative((2 * np.asarray(rho) - lo - hi) / (hi - lo)) * 2 / (hi - lo)

    def _quad_u(self, fn, a: float, b: float) -> float:
        """int_a^b fn(e^{-u}) du, split at the breakpoints."""
        cuts = sorted({a, b, *(-math.log(x) for x in self.breakpoints if a < -math.log(x) < b)})
        total = 0.0
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            val, _ = integrate.quad(lambda u: float(fn(np.array(math.exp(-u)))), lo, hi,
                                    epsabs=1e-15, epsrel=1e-12, limit=200)
            total += val
        return total

    def _tail(self, u0: float) -> float:
        """int_{u0}^inf u^{-N} du."""
        return u0 ** (1 - self.N) / (self.N - 1)

    def _balancing_weight(self) -> float:
        r = self.cutoff
        inner = -math.log(r / 2)
        main = self._quad_u(lambda p: self._log_part(p) * cutoff(p, r / 2, r), -math.log(r), inner)
        main += self._tail(inner)
        return main / self._quad_u(self._psi, inner, -math.log(r / 4))

    def log_moment(self) -> float:
        """int_0^{1/2} f(rho) drho/rho; zero for a balanced form."""
        u_pure = -math.log(self.cutoff / 4)
        return self._quad_u(self.profile, -math.log(OUTER_RADIUS), u_pure) + self._tail(u_pure)

    def profile(self, rho: np.ndarray) -> np.ndarray:
        rho = np.asarray(rho, dtype=float)
        r = self.cutoff
        out = np.zeros_like(rho)
        ok = (rho > 0) & (rho < r)
        p = rho[ok]
        out[ok] = self._log_part(p) * cutoff(p, r / 2, r)
        if self.mu:
            out = out - self.mu * self._psi(rho)
        return out

    def profile_derivative(self, rho: np.ndarray) -> np.ndarray:
        rho = np.asarray(rho, dtype=float)
        r = self.cutoff
        out = np.zeros_like(rho)
        ok = (rho > 0) & (rho < r)
        p = rho[ok]
        L = np.abs(np.log(p))
        dlog = self.N * L ** (-self.N - 1) / p
        out[ok] = dlog * cutoff(p, r / 2, r) + L ** (-self.N) * cutoff_derivative(p, r / 2, r)
        if self.mu:
            out = out - self.mu * self._dpsi(rho)
        return out

    def f(self, z: np.ndarray) -> np.ndarray:
        return self.profile(np.abs(z)).astype(complex)

    def df_dzbar(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        rho = np.abs(z)
        out = np.zeros_like(z)
        nz = rho > 0
        out[nz] = self.profile_derivative(rho[nz]) * z[nz] / (2 * rho[nz])
        return out

    def log_form(self, w: np.ndarray) -> np.ndarray:
        """Coefficient of dw-bar in  f dw-bar / w-bar."""
        w = np.asarray(w, dtype=complex)
        return self.f(w) / np.conj(w)

    def exact_k_log_form(self, rho: float) -> float:
        """K(f dwbar/wbar) at |z| = rho: equals -2 int_rho^{1/2} f drho'/rho' for radial f."""
        return -2.0 * self._quad_u(self.profile, -math.log(OUTER_RADIUS), -math.log(rho))


@dataclass(frozen=True)
class CompactBump:
    """g(w) = (conj(w) + shift) * exp(-1/(1 - |w-c|^2/a^2)): compactly supported in the disc."""

    center: complex = 0.2 + 0.05j
    radius: float = 0.12
    shift: complex = 0.3 - 0.1j

    def _s(self, w):
        return np.abs(w - self.center) ** 2 / self.radius ** 2

    def _phi(self, s):
        out = np.zeros_like(s)
        inside = s < 1
        out[inside] = np.exp(-1.0 / (1.0 - s[inside]))
        return out

    def _dphi(self, s):
        out = np.zeros_like(s)
        inside = s < 1
        si = s[inside]
        out[inside] = -np.exp(-1.0 / (1.0 - si)) / (1.0 - si) ** 2
        return out

    def g(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=complex)
        return (np.conj(w) + self.shift) * self._phi(self._s(w))

    def dg_dzbar(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=complex)
        s = self._s(w)
        # d s / d wbar = (w - c) / a^2
        return self._phi(s) + (np.conj(w) + self.shift) * self._dphi(s) * (w - self.center) / self.radius ** 2


# --- the operator -------------------------------------------------------------------

def _gauss(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _panels(lo: float, hi: float, breaks: Sequence[float]) -> list[tuple[float, float]]:
    """Panels in log-radius: dyadic from hi downward, split at any breakpoints."""
    edges = {math.log(hi), math.log(lo)}
    k = 1
    while hi / 2 ** k > lo:
        edges.add(math.log(hi / 2 ** k))
        k += 1
    for b in breaks:
        if lo < b < hi:
            edges.add(math.log(b))
    e = sorted(edges)
    return [(a, b) for a, b in zip(e[:-1], e[1:]) if b - a > 1e-14]


def _masked(coeff: Coefficient, w: np.ndarray) -> np.ndarray:
    vals = np.asarray(coeff(w), dtype=complex)
    return np.where(np.abs(w) < OUTER_RADIUS, vals, 0.0)


def _raw_apply(coeff: Coefficient, z: complex, cfg: QuadratureConfig) -> complex:
    r = abs(z)
    a = r / 2
    m = cfg.angular_points
    phi = 2 * np.pi * np.arange(m) / m

    def chi(w):
        return cutoff(np.abs(w - z), a / 4, a)

    # near part: w = z + s e^{i phi}; h chi / (z - w) dA = -h chi e^{-i phi} ds dphi
    # panels split where the partition of unity starts to fall off
    xs, ws = _gauss(cfg.radial_points)
    near = 0j
    for lo, hi in ((0.0, a / 4), (a / 4, a)):
        s = lo + (hi - lo) * (xs + 1) / 2
        sw = ws * (hi - lo) / 2
        W = z + s[:, None] * np.exp(1j * phi)[None, :]
        vals = _masked(coeff, W) * chi(W) * np.exp(-1j * phi)[None, :]
        near -= (sw[:, None] * vals).sum() * (2 * np.pi / m)

    # far part in log-polar coordinates: w = e^{u + i theta}, dA = e^{2u} du dtheta
    breaks = (r - a, r - a / 4, r + a / 4, r + a) + tuple(cfg.breakpoints)
    xs, ws = _gauss(cfg.radial_points)
    far = 0j
    theta = phi
    e_it = np.exp(1j * theta)
    for lo, hi in _panels(cfg.eps, OUTER_RADIUS, breaks):
        u = lo + (hi - lo) * (xs + 1) / 2
        uw = ws * (hi - lo) / 2
        rho = np.exp(u)
        W = rho[:, None] * e_it[None, :]
        h = _masked(coeff, W) * (1.0 - chi(W))
        diff = z - W
        safe = np.where(np.abs(diff) > 0, diff, 1.0)
        integrand = np.where(np.abs(diff) > 0, h / safe, 0.0) * (rho ** 2)[:, None]
        far += (uw[:, None] * integrand).sum() * (2 * np.pi / m)
    return complex((near + far) / np.pi)


def bm_apply(
    coeff: Coefficient,
    z: complex,
    cfg: QuadratureConfig | None = None,
    *,
    check: bool = True,
    convention: str = "homotopy",
) -> complex:
    """Quadrature value of the Bochner-Martinelli operator on h dw-bar at z.

    With ``check`` the value is recomputed on a refined rule and a
    disagreement above ``cfg.tol`` raises ConvergenceError.
    """
    cfg = cfg or QuadratureConfig()
    r = abs(z)
    if not 2 * cfg.eps < r < OUTER_RADIUS:
        raise TruncationZoneError(f"|z| = {r:g} outside (2 eps, 1/2)")
    sign = {"homotopy": 1.0, "literal": -1.0}[convention]
    value = _raw_apply(coeff, z, cfg)
    if check:
        finer = _raw_apply(coeff, z, cfg.refined())
        gap = abs(finer - value)
        if gap > cfg.tol:
            raise ConvergenceError(
                f"refinement changed K at z={z} by {gap:.3e} > tol {cfg.tol:g}",
                {"z": [z.real, z.imag], "coarse": [value.real, value.imag],
                 "fine": [finer.real, finer.imag], "gap": gap, "tol": cfg.tol},
            )
        value = finer
    return sign * value


def dbar_numeric(fn: Callable[[complex], complex], z: complex, h: float) -> complex:
    """d/dz-bar by fourth-order central differences."""
    def d(direction):
        return (-fn(z + 2 * h * direction) + 8 * fn(z + h * direction)
                - 8 * fn(z - h * direction) + fn(z - 2 * h * direction)) / (12 * h)
    return 0.5 * (d(1.0) + 1j * d(1j))


@dataclass
class HomotopyResult:
    residual: float
    degree0: float
    degree1: float
    skipped: int
    points: int


def homotopy_residual(
    g: Callable[[np.ndarray], np.ndarray],
    dg: Callable[[np.ndarray], np.ndarray],
    grid: Sequence[complex],
    cfg: QuadratureConfig | None = None,
    *,
    degree1: bool = True,
    check: bool = False,
) -> HomotopyResult:
    """max over the grid of |dbar K + K dbar - id|, evaluated in degrees 0 and 1.

    Degree 0 (functions): K g = 0, so the residual is |K(dbar g) - g|.
    Degree 1 (forms g dw-bar): K dbar = 0, and dbar(K g) is taken by finite
    differences of the quadrature, an independent route from degree 0.
    """
    cfg = cfg or QuadratureConfig()
    r0, r1, skipped, used = 0.0, 0.0, 0, 0
    for z in grid:
        z = complex(z)
        if not 2 * cfg.eps < abs(z) < OUTER_RADIUS:
            skipped += 1
            continue
        used += 1
        gz = complex(np.asarray(g(np.array([z])))[0])
        k_dg = bm_apply(dg, z, cfg, check=check)
        r0 = max(r0, abs(k_dg - gz))
        if degree1:
            h = 1e-3 * abs(z)
            dk = dbar_numeric(lambda x: bm_apply(g, x, cfg, check=False), z, h)
            r1 = max(r1, abs(dk - gz))
    if skipped:
        log.warning("skipped %d grid point(s) inside the truncation zone", skipped)
    return HomotopyResult(max(r0, r1), r0, r1, skipped, used)


def default_grid(n: int = 16, bump_: CompactBump | None = None) -> list[complex]:
    """n points spread over and around the support of the compact test bump."""
    b = bump_ or CompactBump()
    rings = max(1, n // 4)
    per = math.ceil(n / rings)
    pts = []
    for i in range(rings):
        rad = b.radius * (0.15 + 1.1 * i / max(1, rings - 1))
        for j in range(per):
            ang = 2 * math.pi * (j + 0.5 * i) / per
            pts.append(b.center + rad * complex(math.cos(ang), math.sin(ang)))
    return pts[:n]


# --- decay ------------------------------------------------------------------------

DECAY_RADII = tuple(2.0 ** -k for k in range(4, 11))


@dataclass
class DecayFit:
    N: int
    exponent: float          # fitted e in |K f| ~ C |log rho|^{-e}
    constant: float
    radii: list[float]
    values: list[float]
    constants: list[float]   # |K f| * |log rho|^{N-1} per radius

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "exponent": self.exponent,
            "expected": self.N - 1,
            "constant": self.constant,
            "radii": self.radii,
            "values": self.values,
            "constants": self.constants,
        }


def decay_sweep(
    form: RadialTestForm,
    radii: Sequence[float] = DECAY_RADII,
    angles: int = 4,
    cfg: QuadratureConfig | None = None,
) -> DecayFit:
    """max over |z| = rho of |K(f dwbar/wbar)| and a log-log fit against |log rho|."""
    cfg = cfg or QuadratureConfig(breakpoints=form.breakpoints)
    if not cfg.breakpoints:
        cfg = replace(cfg, breakpoints=form.breakpoints)
    values = []
    for rho in radii:
        zs = [rho * np.exp(2j * np.pi * (k + 0.25) / angles) for k in range(angles)]
        values.append(max(abs(bm_apply(form.log_form, complex(z), cfg, check=False)) for z in zs))
    x = np.log(np.abs(np.log(radii)))
    y = np.log(values)
    slope, intercept = np.polyfit(x, y, 1)
    consts = [v * abs(math.log(r)) ** (form.N - 1) for r, v in zip(radii, values)]
    return DecayFit(form.N, float(-slope), float(math.exp(intercept)), list(radii),
                    [float(v) for v in values], consts)


# --- report ---------------------------------------------------------------------

def verify(N: int = 6, grid: int = 16, levels: int = 3, tol: float = 1e-3,
           cfg: QuadratureConfig | None = None) -> dict:
    """Convergence report: homotopy residuals per refinement level and a decay fit."""
    base = cfg or QuadratureConfig(radial_points=6, angular_points=32, tol=tol)
    bump_ = CompactBump()
    pts = default_grid(grid, bump_)
    rd = RadialTestForm(N)
    rd_grid = [0.05 * np.exp(2j * np.pi * k / 4) for k in range(4)]
    levels_out = []
    c = base
    for lev in range(levels):
        res = homotopy_residual(bump_.g, bump_.dg_dzbar, pts, c, degree1=(lev == levels - 1))
        rres = homotopy_residual(rd.f, rd.df_dzbar, rd_grid, c, degree1=False)
        levels_out.append({
            "level": lev,
            "radial_points": c.radial_points,
            "angular_points": c.angular_points,
            "compact_residual": res.degree0,
            "compact_residual_degree1": res.degree1 if lev == levels - 1 else None,
            "rapid_decay_residual": rres.degree0,
        })
        c = c.refined()
    fit = decay_sweep(RadialTestForm(N, balanced=True))
    final = levels_out[-1]
    return {
        "mode": "float",
        "convention": CONVENTION,
        "N": N,
        "grid_points": len(pts),
        "tol": tol,
        "levels": levels_out,
        "decay": fit.to_json(),
        "passed": bool(final["compact_residual"] < tol
                       and (final["compact_residual_degree1"] or 0.0) < tol
                       and abs(fit.exponent - (N - 1)) <= 0.1),
    }
