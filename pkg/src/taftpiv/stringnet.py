"""Dimensions of twisted string-net spaces on disks and spheres.

Disk values are Hom spaces.  The punctured sphere is non-zero exactly when
alpha^2 is the distinguished invertible object D, and the sphere when in
addition g^{2d} is the distinguished group-like element.  Both closed forms
are cross-checked: the first by evaluating the coend over the indecomposable
projectives, the second by the integral-based group-like oracle in
:mod:`taftpiv.hopf`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classifier import classify_pair
from .cyclotomic import CycMatrix
from .hopf import DimensionBound, HopfParams
from .reps import ModuleRep, head, hom_space, projective_module, simple_module

__all__ = [
    "NotTwistedPivotal",
    "SphereReport",
    "dim_disk",
    "dim_sphere_punctured",
    "dim_sphere",
    "coend_oracle_punctured",
    "dim_modified_traces",
    "endomorphisms_local",
    "sphere_report",
]

MODULE_DIM_BOUND = 256


class NotTwistedPivotal(ValueError):
    pass


@dataclass(frozen=True)
class SphereReport:
    H: HopfParams
    c: int
    d: int
    dim_punctured: int
    dim_sphere: int
    oracle_dim_punctured: int | None
    trace_dims: tuple[int, int]

    def __post_init__(self):
        assert self.dim_sphere <= self.dim_punctured
        assert self.trace_dims == (self.dim_punctured, self.dim_sphere)

    @property
    def oracle_ok(self) -> bool | None:
        if self.oracle_dim_punctured is None:
            return None
        return self.oracle_dim_punctured == self.dim_punctured


def dim_disk(H: HopfParams, index: int, c: int, V: ModuleRep) -> int:
    """Disk with index 0, 1 or 2 boundary points labelled by V."""
    if index == 0:
        return hom_space(simple_module(H, c), V)[0]
    if index == 1:
        return hom_space(V, simple_module(H, c))[0]
    if index == 2:
        return hom_space(V, simple_module(H, -c))[0]
    raise ValueError("disk index must be 0, 1 or 2")


def _require_tp(H, c, d):
    datum = classify_pair(H, c, d)
    if not datum.twisted_pivotal:
        raise NotTwistedPivotal(f"({c % H.N},{d % H.N}) is not twisted pivotal on {H.label()}")
    return datum


def dim_sphere_punctured(H: HopfParams, c: int, d: int) -> int:
    return int(_require_tp(H, c, d).punctured_sphere_nonzero)


def dim_sphere(H: HopfParams, c: int, d: int) -> int:
    return int(_require_tp(H, c, d).sphere_nonzero)


def dim_modified_traces(H: HopfParams, c: int, d: int) -> tuple[int, int]:
    """(twisted modified traces, spherical ones); dual to the punctured and closed sphere."""
    datum = _require_tp(H, c, d)
    return int(datum.punctured_sphere_nonzero), int(datum.sphere_nonzero)


def coend_oracle_punctured(H: HopfParams, c: int) -> int:
    """sum_k dim Hom(T_{2c}, P_k) * dim Hom(P_k, 1), from matrices only."""
    if H.n * H.m > MODULE_DIM_BOUND:
        raise DimensionBound(f"projectives of {H.label()} exceed dimension {MODULE_DIM_BOUND}")
    alpha2 = simple_module(H, 2 * c)
    unit = simple_module(H, 0)
    total = 0
    for k in range(H.N):
        P = projective_module(H, k)
        top = hom_space(P, unit)[0]
        if top:
            total += hom_space(alpha2, P)[0] * top
    return total


def _nilpotent(M: CycMatrix) -> bool:
    return (M ** M.rows).is_zero()


def endomorphisms_local(H: HopfParams, k: int) -> bool:
    """End(P_k) = scalars + nilpotents, so nilpotent maps drop out of the coend.

    P_k is generated by its first basis vector and the other basis vectors
    span its radical; an endomorphism is determined by where that generator
    goes, and it is nilpotent iff the generator lands in the radical.
    """
    P = projective_module(H, k)
    if head(P) != {k % H.N: 1}:
        return False
    _, basis = hom_space(P, P)
    I = CycMatrix.identity(H.N, P.dim)
    for B in basis:
        lam = B[0, 0]
        if not _nilpotent(B - I.scale(lam)):
            return False
    return True


def sphere_report(H: HopfParams, c: int, d: int, oracle: bool = False) -> SphereReport:
    N = H.N
    punctured = dim_sphere_punctured(H, c, d)
    closed = dim_sphere(H, c, d)
    od = coend_oracle_punctured(H, c) if oracle else None
    return SphereReport(H, c % N, d % N, punctured, closed, od, (punctured, closed))
