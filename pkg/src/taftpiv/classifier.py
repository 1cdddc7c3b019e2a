"""Classification of twisted pivotal data (c, d) and the parameter census.

For alpha = T_c and the group-like g^d, the pair (c, d) is twisted
quasi-pivotal on the generalized Taft algebra H(N; a1, a2, b1, b2) when

    c*a2 + d*a1 + a1*a2 = 0   and   c*b2 + d*b1 + b1*b2 = 0   (mod N),

and twisted pivotal when moreover c*d = 0.  The punctured sphere is non-zero
when 2c = a2(n-1) + b2(m-1) and the sphere when also 2d = a1(n-1) + b1(m-1).
For the Taft algebra the quasi-pivotal pairs are exactly (c, -(c+1)).

``form="exchanged"`` selects the variant with the indices of the first two terms
exchanged (c*a1 + d*a2 + a1*a2, ...); it is kept so both readings can be
compared against the census numbers and the matrix oracle.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd

import numpy as np

from .hopf import HopfParams, additive_order

__all__ = [
    "PivotalDatum",
    "StructureSummary",
    "CensusReport",
    "Implication",
    "FIGURE_MINIMA",
    "CSV_HEADER",
    "solve_quasi",
    "scan_quasi",
    "quasi_pivotal_pairs",
    "twisted_pivotal_pairs",
    "classify_pair",
    "structure_summary",
    "valid_parameter_tuples",
    "census",
    "minimal_counterexample",
]


@dataclass(frozen=True)
class PivotalDatum:
    c: int
    d: int
    quasi_pivotal: bool
    twisted_pivotal: bool
    plain_pivotal: bool
    punctured_sphere_nonzero: bool
    sphere_nonzero: bool
    spherical: bool

    def __post_init__(self):
        assert not self.twisted_pivotal or self.quasi_pivotal
        assert not self.sphere_nonzero or (self.punctured_sphere_nonzero and self.twisted_pivotal)
        assert not self.spherical or self.plain_pivotal


@dataclass(frozen=True)
class StructureSummary:
    has_quasi: bool
    has_twisted_pivotal: bool
    has_pivotal: bool
    has_spherical: bool
    has_twisted_spherical: bool
    unimodular: bool


CSV_HEADER = "N,total,pivotal,twisted_pivotal,unimodular,spherical,twisted_spherical,nonunimod_twisted_spherical"


@dataclass(frozen=True)
class CensusReport:
    N: int
    total_valid: int
    with_pivotal: int
    with_twisted_pivotal: int
    unimodular: int
    with_spherical: int
    with_twisted_spherical: int
    nonunimodular_with_twisted_spherical: int
    with_quasi_pivotal: int

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> str:
        return ",".join(
            str(v)
            for v in (
                self.N,
                self.total_valid,
                self.with_pivotal,
                self.with_twisted_pivotal,
                self.unimodular,
                self.with_spherical,
                self.with_twisted_spherical,
                self.nonunimodular_with_twisted_spherical,
            )
        )


def _coefficients(N, a1, a2, b1, b2, form):
    # rows (coef_c, coef_d, rhs) of the two congruences
    if form == "standard":
        return ((a2, a1, -a1 * a2), (b2, b1, -b1 * b2))
    if form == "exchanged":
        return ((a1, a2, -a1 * a2), (b1, b2, -b1 * b2))
    raise ValueError(f"unknown form {form!r}")


def _solve_linear(a: int, b: int, N: int) -> list[int]:
    """All x in Z/N with a x = b."""
    a, b = a % N, b % N
    g = gcd(a, N)
    if b % g:
        return []
    step = N // g
    x0 = (b // g) * pow(a // g, -1, step) % step if step > 1 else 0
    return [x0 + t * step for t in range(g)]


def solve_quasi(N: int, a1: int, a2: int, b1: int, b2: int, form: str = "standard") -> list[tuple[int, int]]:
    """Solution set of the two congruences, by Cramer's rule when the determinant is a unit."""
    (p1, q1, r1), (p2, q2, r2) = _coefficients(N, a1, a2, b1, b2, form)
    det = (p1 * q2 - q1 * p2) % N
    if gcd(det, N) == 1:
        inv = pow(det, -1, N)
        c = (r1 * q2 - q1 * r2) * inv % N
        d = (p1 * r2 - r1 * p2) * inv % N
        return [(c, d)]
    out = []
    for c in range(N):
        for d in _solve_linear(q1, r1 - p1 * c, N):
            if (p2 * c + q2 * d - r2) % N == 0:
                out.append((c, d))
    return sorted(out)


def scan_quasi(N: int, a1: int, a2: int, b1: int, b2: int, form: str = "standard") -> list[tuple[int, int]]:
    """Solution set by testing every (c, d) in (Z/N)^2."""
    (p1, q1, r1), (p2, q2, r2) = _coefficients(N, a1, a2, b1, b2, form)
    c, d = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    ok = ((p1 * c + q1 * d - r1) % N == 0) & ((p2 * c + q2 * d - r2) % N == 0)
    return [(int(x), int(y)) for x, y in zip(c[ok], d[ok])]


def quasi_pivotal_pairs(H: HopfParams, form: str = "standard", method: str = "solve") -> list[tuple[int, int]]:
    N = H.N
    if H.kind == "taft":
        return [(c, (-c - 1) % N) for c in range(N)]
    f = solve_quasi if method == "solve" else scan_quasi
    return f(N, H.a1, H.a2, H.b1, H.b2, form)


def twisted_pivotal_pairs(H: HopfParams, form: str = "standard") -> list[tuple[int, int]]:
    return [(c, d) for c, d in quasi_pivotal_pairs(H, form) if (c * d) % H.N == 0]


def _flags(N, c, d, quasi, D, G):
    tp = quasi and (c * d) % N == 0
    nz1 = tp and (2 * c - D) % N == 0
    nz2 = nz1 and (2 * d - G) % N == 0
    plain = tp and c % N == 0
    return tp, plain, nz1, nz2, plain and nz2


def classify_pair(H: HopfParams, c: int, d: int, form: str = "standard") -> PivotalDatum:
    N = H.N
    c, d = c % N, d % N
    quasi = (c, d) in set(quasi_pivotal_pairs(H, form))
    tp, plain, nz1, nz2, sph = _flags(N, c, d, quasi, H.D_index, H.grouplike_index)
    return PivotalDatum(c, d, quasi, tp, plain, nz1, nz2, sph)


def _summarize(N, pairs, D, G) -> StructureSummary:
    has = [False] * 5
    for c, d in pairs:
        tp, plain, _, nz2, sph = _flags(N, c, d, True, D, G)
        has[0] |= tp
        has[1] |= plain
        has[2] |= sph
        has[3] |= nz2
    return StructureSummary(
        has_quasi=bool(pairs),
        has_twisted_pivotal=has[0],
        has_pivotal=has[1],
        has_spherical=has[2],
        has_twisted_spherical=has[3],
        unimodular=D == 0,
    )


def structure_summary(H: HopfParams, form: str = "standard") -> StructureSummary:
    return _summarize(H.N, quasi_pivotal_pairs(H, form), H.D_index, H.grouplike_index)


def _tuple_summary(N, a1, a2, b1, b2, form="standard", method="solve") -> StructureSummary:
    n, m = additive_order(a1 * a2, N), additive_order(b1 * b2, N)
    D = (a2 * (n - 1) + b2 * (m - 1)) % N
    G = (a1 * (n - 1) + b1 * (m - 1)) % N
    f = solve_quasi if method == "solve" else scan_quasi
    return _summarize(N, f(N, a1, a2, b1, b2, form), D, G)


def valid_parameter_tuples(N: int, a1: int | None = None) -> np.ndarray:
    """All (a1, a2, b1, b2) in (Z/N)^4 passing the validity conditions, lexicographic order."""
    r = np.arange(N, dtype=np.int64)
    A1 = r if a1 is None else np.array([a1], dtype=np.int64)
    g = np.stack(np.meshgrid(A1, r, r, r, indexing="ij"), axis=-1).reshape(-1, 4)
    x1, x2, y1, y2 = g.T
    ok = ((x1 * y2 + y1 * x2) % N == 0) & ((x1 * x2) % N != 0) & ((y1 * y2) % N != 0)
    return g[ok]


_FIELDS = (
    "total_valid",
    "with_pivotal",
    "with_twisted_pivotal",
    "unimodular",
    "with_spherical",
    "with_twisted_spherical",
    "nonunimodular_with_twisted_spherical",
    "with_quasi_pivotal",
)


def _census_slice(args) -> tuple[int, ...]:
    N, a1, form, method = args
    counts = [0] * len(_FIELDS)
    for t in valid_parameter_tuples(N, a1):
        s = _tuple_summary(N, *(int(v) for v in t), form=form, method=method)
        for i, flag in enumerate(
            (
                True,
                s.has_pivotal,
                s.has_twisted_pivotal,
                s.unimodular,
                s.has_spherical,
                s.has_twisted_spherical,
                s.has_twisted_spherical and not s.unimodular,
                s.has_quasi,
            )
        ):
            counts[i] += flag
    return tuple(counts)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("TOOLKIT_WORKERS", "1")))
    except ValueError:
        return 1


def census(N: int, workers: int | None = None, form: str = "standard", method: str = "solve") -> CensusReport:
    """Count parameter tuples (no identification up to isomorphism) with each structure."""
    if N < 2:
        raise ValueError("census needs N >= 2")
    workers = default_workers() if workers is None else workers
    tasks = [(N, a1, form, method) for a1 in range(N)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census_slice, tasks))
    else:
        parts = [_census_slice(t) for t in tasks]
    totals = [sum(col) for col in zip(*parts)]
    return CensusReport(N, **dict(zip(_FIELDS, totals)))


class Implication(enum.Enum):
    """Non-implications between structures; value is (has, lacks)."""

    P_without_S = ("has_pivotal", "has_spherical")
    U_without_S = ("unimodular", "has_spherical")
    TS_without_S = ("has_twisted_spherical", "has_spherical")
    TP_without_TS = ("has_twisted_pivotal", "has_twisted_spherical")
    TP_without_P = ("has_twisted_pivotal", "has_pivotal")
    Q_without_TP = ("has_quasi", "has_twisted_pivotal")
    valid_without_Q = (None, "has_quasi")
    TS_without_U = ("has_twisted_spherical", "unimodular")
    U_without_TS = ("unimodular", "has_twisted_spherical")
    P_without_U = ("has_pivotal", "unimodular")
    U_without_P = ("unimodular", "has_pivotal")
    TP_without_U = ("has_twisted_pivotal", "unimodular")

    def holds(self, s: StructureSummary) -> bool:
        has, lacks = self.value
        return (has is None or getattr(s, has)) and not getattr(s, lacks)


# first N labelled on each arrow of the implication diagram
FIGURE_MINIMA = {
    Implication.P_without_S: 3,
    Implication.U_without_S: 3,
    Implication.TS_without_S: 4,
    Implication.TP_without_TS: 3,
    Implication.TP_without_P: 3,
    Implication.Q_without_TP: 5,
    Implication.valid_without_Q: 8,
    Implication.TS_without_U: 8,
    Implication.U_without_TS: 3,
    Implication.P_without_U: 3,
    Implication.U_without_P: 3,
    Implication.TP_without_U: 3,
}


def minimal_counterexample(implication: Implication | str, N_max: int, form: str = "standard") -> int | None:
    """Smallest N <= N_max with a valid parameter tuple exhibiting the property."""
    if isinstance(implication, str):
        implication = Implication[implication]
    for N in range(2, N_max + 1):
        for t in valid_parameter_tuples(N):
            if implication.holds(_tuple_summary(N, *(int(v) for v in t), form=form)):
                return N
    return None
