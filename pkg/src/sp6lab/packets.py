"""Discrete-series L-packets of Sp6(R): Harish-Chandra parameters, minimal K-types, Hodge types."""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import (
    NONCOMPACT_POSITIVE,
    ROOTS,
    Weight,
    coset_representatives,
    is_dominant,
    is_k_dominant,
    pairing,
    rho,
    wadd,
    wscale,
    wsub,
)


class SingularParameter(ValueError):
    pass


@dataclass(frozen=True)
class DiscreteSeriesDescriptor:
    index: int
    hc_param: Weight
    min_ktype: Weight
    hodge: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "hc_param": list(self.hc_param),
            "min_ktype": list(self.min_ktype),
            "hodge": list(self.hodge),
        }


def hodge_type(hc_param: Weight) -> tuple[int, int]:
    """(p, q) with p = number of positive noncompact roots pairing positively with the parameter."""
    if any(pairing(hc_param, r.weight) == 0 for r in ROOTS):
        raise SingularParameter(f"{tuple(hc_param)} is singular")
    p = sum(1 for a in NONCOMPACT_POSITIVE if pairing(hc_param, a) > 0)
    return p, 6 - p


def chamber_rho(hc_param: Weight) -> Weight:
    """Half-sum of the roots positive on hc_param (delta_Sp6 for its chamber)."""
    total = (0, 0, 0)
    for r in ROOTS:
        if pairing(hc_param, r.weight) > 0:
            total = wadd(total, r.weight)
    return tuple(c // 2 for c in total)  # type: ignore[return-value]


def two_delta_k(hc_param: Weight) -> Weight:
    total = (0, 0, 0)
    for r in ROOTS:
        if r.compact and pairing(hc_param, r.weight) > 0:
            total = wadd(total, r.weight)
    return total


def packet(lam: Weight) -> list[DiscreteSeriesDescriptor]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != 3 or not is_dominant(lam):
        raise ValueError(f"lambda must satisfy l1 >= l2 >= l3 >= 0, got {lam}")
    out = []
    for i, w in enumerate(coset_representatives(), start=1):
        hc = w(wadd(lam, rho()))
        # delta_Sp6 for the chamber of hc is w(rho); 2 delta_K is (2,0,-2) since hc is K-dominant
        ktype = wsub(wadd(hc, w(rho())), wscale(2, (1, 0, -1)))
        out.append(DiscreteSeriesDescriptor(i, hc, ktype, hodge_type(hc)))
    return out


def check_descriptor(d: DiscreteSeriesDescriptor) -> list[str]:
    """Invariant violations (empty list when all hold)."""
    problems = []
    if not is_k_dominant(d.hc_param):
        problems.append("hc_param not K-dominant")
    if any(pairing(d.hc_param, r.weight) == 0 for r in ROOTS):
        problems.append("hc_param singular")
    if not is_k_dominant(d.min_ktype):
        problems.append("min_ktype not K-dominant")
    if sum(d.hodge) != 6:
        problems.append("hodge type does not sum to 6")
    recomputed = wsub(wadd(d.hc_param, chamber_rho(d.hc_param)), two_delta_k(d.hc_param))
    if recomputed != d.min_ktype:
        problems.append("min_ktype disagrees with chamber recomputation")
    return problems
