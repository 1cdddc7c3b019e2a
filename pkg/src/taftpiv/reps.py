"""Finite-dimensional modules over (generalized) Taft algebras as exact matrices.

A module is given by the action matrices of the generators.  Duals, double
duals and tensor products are built from the antipode and coproduct of
:mod:`taftpiv.hopf`, so every construction goes through the Hopf structure
rather than through closed forms.
"""

from __future__ import annotations

from functools import lru_cache
from random import Random

from .cyclotomic import CycMatrix, CycNumber, kernel_from_rows, q_pow, rank
from .hopf import (
    HopfParams,
    PBWElement,
    antipode,
    antipode_inverse,
    coproduct,
    generator,
)

__all__ = [
    "ModuleRelationError",
    "RangeError",
    "ModuleRep",
    "simple_module",
    "indecomposable_module",
    "projective_module",
    "act",
    "dual_module",
    "left_dual_module",
    "double_dual",
    "tensor_module",
    "hom_space",
    "is_isomorphic",
    "socle",
    "head",
    "g_weights",
    "evaluation",
    "coevaluation",
    "left_evaluation",
    "left_coevaluation",
]


class ModuleRelationError(ValueError):
    pass


class RangeError(ValueError):
    pass


class ModuleRep:
    """A module: generator name -> square action matrix."""

    __slots__ = ("algebra", "dim", "action", "label")

    def __init__(self, algebra: HopfParams, action: dict, label: str = "", check: bool = True):
        self.algebra = algebra
        self.action = dict(action)
        self.dim = self.action["g"].rows
        self.label = label
        if set(self.action) != set(algebra.generators):
            raise ModuleRelationError(f"need actions for {algebra.generators}")
        for name, mat in self.action.items():
            if mat.shape != (self.dim, self.dim) or mat.level != algebra.N:
                raise ModuleRelationError(f"bad matrix for {name}")
        if check:
            check_relations(self)

    def __getitem__(self, name: str) -> CycMatrix:
        return self.action[name]

    def __repr__(self):
        return f"ModuleRep({self.label or '?'}, dim={self.dim})"


def check_relations(V: ModuleRep) -> None:
    """Raise ModuleRelationError unless the defining relations hold exactly."""
    H = V.algebra
    N = H.N
    I = CycMatrix.identity(N, V.dim)
    Z = CycMatrix.zeros(N, V.dim)
    G, X = V["g"], V["x"]
    failures = []
    if G ** N != I:
        failures.append("g^N = 1")
    if X ** H.n != Z:
        failures.append("x^n = 0")
    if G @ X != (X @ G).scale(q_pow(N, H.a2)):
        failures.append("g x = q^a2 x g")
    if H.has_y:
        Y = V["y"]
        if Y ** H.m != Z:
            failures.append("y^m = 0")
        if G @ Y != (Y @ G).scale(q_pow(N, H.b2)):
            failures.append("g y = q^b2 y g")
        if X @ Y != (Y @ X).scale(q_pow(N, H.a1 * H.b2)):
            failures.append("x y = q^(a1 b2) y x")
    if failures:
        raise ModuleRelationError(f"{V.label}: relations fail: {', '.join(failures)}")


def simple_module(H: HopfParams, k: int) -> ModuleRep:
    N = H.N
    action = {"g": CycMatrix.diagonal(N, [q_pow(N, k)])}
    for name in H.generators[1:]:
        action[name] = CycMatrix.zeros(N, 1)
    return ModuleRep(H, action, f"T_{k % N}")


def indecomposable_module(H: HopfParams, k: int, l: int, h: int = 1) -> ModuleRep:
    """V_{k,l,h} with basis x^i y^j v_k, ordered by (i, j); dimension l*h.

    For the Taft algebra h must be 1 and this is V_{k,l} with basis v_k..v_{k+l-1}.
    """
    N = H.N
    if not 1 <= l <= H.n:
        raise RangeError(f"x-length {l} not in 1..{H.n}")
    if not 1 <= h <= H.m:
        raise RangeError(f"y-length {h} not in 1..{H.m}")
    dim = l * h
    idx = lambda i, j: i * h + j  # noqa: E731
    diag, xs, ys = [], {}, {}
    for i in range(l):
        for j in range(h):
            diag.append(q_pow(N, k + H.a2 * i + H.b2 * j))
            if i + 1 < l:
                xs[(idx(i + 1, j), idx(i, j))] = CycNumber.one(N)
            if j + 1 < h:
                ys[(idx(i, j + 1), idx(i, j))] = q_pow(N, -i * H.a1 * H.b2)
    action = {"g": CycMatrix.diagonal(N, diag), "x": CycMatrix.from_sparse(N, dim, dim, xs)}
    if H.has_y:
        action["y"] = CycMatrix.from_sparse(N, dim, dim, ys)
    label = f"V_{k % N},{l}" + (f",{h}" if H.has_y else "")
    return ModuleRep(H, action, label)


def projective_module(H: HopfParams, k: int) -> ModuleRep:
    V = indecomposable_module(H, k, H.n, H.m)
    V.label = f"P_{k % H.N}"
    return V


def _matrix_of_monomial(V: ModuleRep, mono) -> CycMatrix:
    i, j, k = mono
    M = V["g"] ** i
    if j:
        M = M @ V["x"] ** j
    if k:
        M = M @ V["y"] ** k
    return M


def act(V: ModuleRep, e: PBWElement) -> CycMatrix:
    """Matrix by which the algebra element e acts on V."""
    N = V.algebra.N
    total = CycMatrix.zeros(N, V.dim)
    for mono, c in e.terms.items():
        total = total + _matrix_of_monomial(V, mono).scale(c)
    return total


def dual_module(V: ModuleRep, via: str = "S") -> ModuleRep:
    """V* with h acting by the transpose of S(h) (or of S^-1(h) when via='S_inv')."""
    H = V.algebra
    ant = {"S": antipode, "S_inv": antipode_inverse}[via]
    action = {name: act(V, ant(generator(H, name))).T for name in H.generators}
    tag = "*" if via == "S" else "^*"
    return ModuleRep(H, action, f"({V.label}){tag}")


def left_dual_module(V: ModuleRep) -> ModuleRep:
    return dual_module(V, via="S_inv")


def double_dual(V: ModuleRep, power: int = 2) -> ModuleRep:
    """V** identified with V as a vector space; h acts by S^power(h), power = +-2."""
    H = V.algebra
    if power == 2:
        f = lambda e: antipode(antipode(e))  # noqa: E731
    elif power == -2:
        f = lambda e: antipode_inverse(antipode_inverse(e))  # noqa: E731
    else:
        raise ValueError("power must be 2 or -2")
    action = {name: act(V, f(generator(H, name))) for name in H.generators}
    return ModuleRep(H, action, f"({V.label})**")


def tensor_module(V: ModuleRep, W: ModuleRep, legs: str = "standard") -> ModuleRep:
    """V (x) W with h acting through Delta h (legs='standard') or its flip (legs='reversed')."""
    H = V.algebra
    if W.algebra != H:
        raise ValueError("modules over different algebras")
    action = {}
    for name in H.generators:
        total = CycMatrix.zeros(H.N, V.dim * W.dim)
        for (l, r), c in coproduct(generator(H, name)).terms.items():
            if legs == "reversed":
                l, r = r, l
            total = total + _matrix_of_monomial(V, l).kron(_matrix_of_monomial(W, r)).scale(c)
        action[name] = total
    return ModuleRep(H, action, f"{V.label}⊗{W.label}")


def hom_space(V: ModuleRep, W: ModuleRep) -> tuple[int, list[CycMatrix]]:
    """Intertwiners V -> W: solve M rho_V(h) = rho_W(h) M for every generator h.

    Unknown M[r, s] has index r*dim V + s.  The basis is the canonical kernel
    basis of the resulting linear system.
    """
    H = V.algebra
    N = H.N
    dv, dw = V.dim, W.dim
    rows = []
    for name in H.generators:
        A = V[name]._sparse_rows()
        B_cols = {}
        for r, t, b in W[name].nonzeros():
            B_cols.setdefault(t, []).append((r, b))
        # equation (r, s):  sum_t M[r,t] A[t,s] - sum_t B[r,t] M[t,s] = 0
        eqs: dict = {}
        for t in range(dv):
            for s, a in A[t].items():
                for r in range(dw):
                    row = eqs.setdefault((r, s), {})
                    key = r * dv + t
                    row[key] = row[key] + a if key in row else a
        for t, entries in B_cols.items():
            for r, b in entries:
                for s in range(dv):
                    row = eqs.setdefault((r, s), {})
                    key = t * dv + s
                    row[key] = row[key] - b if key in row else -b
        rows.extend(eqs.values())
    basis = kernel_from_rows(rows, dv * dw, N)
    mats = [CycMatrix._trusted(N, dw, dv, vec) for vec in basis]
    return len(mats), mats


def is_isomorphic(V: ModuleRep, W: ModuleRep, attempts: int = 8, seed: int = 0) -> bool:
    """Decide V ≅ W by searching Hom(V, W) for a matrix of full rank.

    Random integer combinations of a basis of Hom(V, W) are invertible for a
    generic choice whenever an invertible intertwiner exists.
    """
    if V.dim != W.dim:
        return False
    if sorted(g_weights(V)) != sorted(g_weights(W)):
        return False
    _, basis = hom_space(V, W)
    if not basis:
        return False
    rng = Random(seed)
    for _ in range(attempts):
        M = CycMatrix.zeros(V.algebra.N, W.dim, V.dim)
        for B in basis:
            M = M + B.scale(rng.randint(1, 10 * V.dim + 10))
        if rank(M) == V.dim:
            return True
    return False


def g_weights(V: ModuleRep) -> list[int]:
    """Eigenvalue exponents of g, with multiplicity (g is diagonal in all our constructions)."""
    N = V.algebra.N
    G = V["g"]
    out = []
    for i in range(V.dim):
        for j in range(V.dim):
            if i != j and G[i, j]:
                raise ValueError("g is not diagonal in this basis")
        k = G[i, i].root_of_unity_exponent()
        if k is None:
            raise ValueError("g eigenvalue is not an N-th root of unity")
        out.append(k)
    return out


def _weight_multiplicities(mats, G: CycMatrix, N: int) -> dict[int, int]:
    dim = G.rows
    out = {}
    for w in range(N):
        shifted = G - CycMatrix.identity(N, dim).scale(q_pow(N, w))
        rows = []
        for M in list(mats) + [shifted]:
            rows.extend(M._sparse_rows())
        mult = len(kernel_from_rows(rows, dim, N))
        if mult:
            out[w] = mult
    return out


def socle(V: ModuleRep) -> dict[int, int]:
    """Weights of the joint kernel of the nilpotent generators, with multiplicity.

    Every simple module of this family is one-dimensional with x and y acting
    by zero, so this joint kernel is the socle.
    """
    H = V.algebra
    return _weight_multiplicities([V[n] for n in H.generators[1:]], V["g"], H.N)


def head(V: ModuleRep) -> dict[int, int]:
    """Weights of V / (x V + y V); computed as the socle of the transposed action."""
    H = V.algebra
    return _weight_multiplicities([V[n].T for n in H.generators[1:]], V["g"].T, H.N)


# vector-space duality maps; module structure comes from the choice of dual

def evaluation(V: ModuleRep) -> CycMatrix:
    """ev: V* (x) V -> 1 as a 1 x dim^2 matrix."""
    d, N = V.dim, V.algebra.N
    return CycMatrix.from_sparse(N, 1, d * d, {(0, i * d + i): CycNumber.one(N) for i in range(d)})


def coevaluation(V: ModuleRep) -> CycMatrix:
    """coev: 1 -> V (x) V* as a dim^2 x 1 matrix."""
    d, N = V.dim, V.algebra.N
    return CycMatrix.from_sparse(N, d * d, 1, {(i * d + i, 0): CycNumber.one(N) for i in range(d)})


left_evaluation = evaluation  # V (x) *V -> 1 has the same matrix
left_coevaluation = coevaluation  # 1 -> *V (x) V


@lru_cache(maxsize=None)
def oracle_modules(H: HopfParams) -> tuple[ModuleRep, ...]:
    """All projectives P_k, then all simples T_k."""
    return tuple(projective_module(H, k) for k in range(H.N)) + tuple(
        simple_module(H, k) for k in range(H.N)
    )
