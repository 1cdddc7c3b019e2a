"""Taft and generalized Taft (type A1 x A1) Hopf algebras in PBW form.

The generalized Taft algebra at level N with parameters (a1, a2, b1, b2) is
generated by a group-like g and skew-primitives x, y with

    g^N = 1,  x^n = 0,  y^m = 0,
    g x = q^a2 x g,  g y = q^b2 y g,  x y = q^(a1 b2) y x,
    Delta x = 1 (x) x + x (x) g^a1,   Delta y = 1 (x) y + y (x) g^b1,
    S g = g^-1,  S x = -x g^-a1,  S y = -y g^-b1,

where n, m are the additive orders of a1 a2 and b1 b2 modulo N.  The Taft
algebra is the case with no y and a1 = a2 = 1; it is kept as its own kind
(``m == 1`` and the y exponent is always 0).

Elements are sparse maps from exponent triples (i, j, k), meaning the normal
form monomial g^i x^j y^k, to exact coefficients in Q(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cyclotomic import CycNumber, kernel_from_rows, q_pow

__all__ = [
    "HopfParamsError",
    "InvalidLevel",
    "CompatibilityError",
    "NilpotencyError",
    "DimensionBound",
    "HopfParams",
    "PBWElement",
    "TensorSquareElement",
    "make_taft",
    "make_gen_taft",
    "additive_order",
    "monomial",
    "generator",
    "pbw_basis",
    "pbw_multiply",
    "coproduct",
    "counit",
    "antipode",
    "antipode_inverse",
    "tensor_multiply",
    "multiply_legs",
    "distinguished_data",
    "distinguished_grouplike_oracle",
    "modular_function_oracle",
    "pair_in_involution_holds",
    "check_pair_in_involution",
]


class HopfParamsError(ValueError):
    pass


class InvalidLevel(HopfParamsError):
    pass


class CompatibilityError(HopfParamsError):
    pass


class NilpotencyError(HopfParamsError):
    pass


class DimensionBound(RuntimeError):
    pass


def additive_order(a: int, n: int) -> int:
    """Smallest k > 0 with k*a = 0 mod n."""
    if n < 1:
        raise InvalidLevel("modulus must be >= 1")
    return n // gcd(n, a % n)


@dataclass(frozen=True)
class HopfParams:
    kind: str  # "taft" or "gentaft"
    N: int
    a1: int
    a2: int
    b1: int
    b2: int
    n: int
    m: int

    @property
    def has_y(self) -> bool:
        return self.kind == "gentaft"

    @property
    def generators(self) -> tuple[str, ...]:
        return ("g", "x", "y") if self.has_y else ("g", "x")

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.a1, self.a2, self.b1, self.b2)

    @property
    def dim(self) -> int:
        return self.N * self.n * self.m

    @property
    def D_index(self) -> int:
        return (self.a2 * (self.n - 1) + self.b2 * (self.m - 1)) % self.N

    @property
    def grouplike_index(self) -> int:
        return (self.a1 * (self.n - 1) + self.b1 * (self.m - 1)) % self.N

    @property
    def unimodular(self) -> bool:
        return self.D_index == 0

    def transposed(self) -> HopfParams:
        """The algebra with commutation weights and coproduct exponents exchanged.

        x then has g-weight a1 and coproduct exponent a2 (likewise for y).
        The validity conditions and nilpotency orders are symmetric under the
        exchange, so this is again a valid algebra of the same dimension.
        """
        if self.kind == "taft":
            return self
        return make_gen_taft(self.N, self.a2, self.a1, self.b2, self.b1)

    def label(self) -> str:
        if self.kind == "taft":
            return f"Taft({self.N})"
        return f"GenTaft({self.N};{self.a1},{self.a2},{self.b1},{self.b2})"

    def __repr__(self):
        return self.label()


def make_taft(N: int) -> HopfParams:
    if N < 1:
        raise InvalidLevel(f"Taft algebra needs N >= 1, got {N}")
    return HopfParams("taft", N, 1 % N, 1 % N, 0, 0, N, 1)


def make_gen_taft(N: int, a1: int, a2: int, b1: int, b2: int) -> HopfParams:
    if N < 2:
        raise InvalidLevel(f"generalized Taft algebra needs N >= 2, got {N}")
    a1, a2, b1, b2 = a1 % N, a2 % N, b1 % N, b2 % N
    if (a1 * b2 + b1 * a2) % N:
        raise CompatibilityError(
            f"a1*b2 + b1*a2 = {a1 * b2 + b1 * a2} is not 0 mod {N}"
        )
    if (a1 * a2) % N == 0:
        raise NilpotencyError(f"a1*a2 = {a1 * a2} is 0 mod {N}")
    if (b1 * b2) % N == 0:
        raise NilpotencyError(f"b1*b2 = {b1 * b2} is 0 mod {N}")
    return HopfParams(
        "gentaft", N, a1, a2, b1, b2, additive_order(a1 * a2, N), additive_order(b1 * b2, N)
    )


class PBWElement:
    """Element of H as a map (i, j, k) -> coefficient over PBW monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HopfParams, terms: dict | None = None):
        self.algebra = algebra
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    def __add__(self, other: PBWElement) -> PBWElement:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return PBWElement(self.algebra, out)

    def __neg__(self):
        return PBWElement(self.algebra, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PBWElement) -> PBWElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return pbw_multiply(self, other)
        return PBWElement(self.algebra, {e: c * other for e, c in self.terms.items()})

    def __rmul__(self, scalar):
        return PBWElement(self.algebra, {e: scalar * c for e, c in self.terms.items()})

    def __pow__(self, k: int) -> PBWElement:
        result = one(self.algebra)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in sorted(self.terms.items()):
            mono = "".join(
                f"{s}^{p}" if p > 1 else s for s, p in (("g", i), ("x", j), ("y", k)) if p
            ) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


class TensorSquareElement:
    """Element of H (x) H as a map (exp_left, exp_right) -> coefficient."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HopfParams, terms: dict | None = None):
        self.algebra = algebra
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TensorSquareElement(self.algebra, out)

    def __mul__(self, other):
        return tensor_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, TensorSquareElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __repr__(self):
        return f"TensorSquareElement({len(self.terms)} terms)"


def monomial(H: HopfParams, i: int = 0, j: int = 0, k: int = 0, coeff=1) -> PBWElement:
    """coeff * g^i x^j y^k (zero if a nilpotent exponent is out of range)."""
    if j < 0 or k < 0:
        raise ValueError("nilpotent exponents must be >= 0")
    if j >= H.n or k >= H.m:
        return PBWElement(H)
    c = coeff if isinstance(coeff, CycNumber) else CycNumber.from_rational(H.N, coeff)
    return PBWElement(H, {(i % H.N, j, k): c})


def one(H: HopfParams) -> PBWElement:
    return monomial(H)


def generator(H: HopfParams, name: str) -> PBWElement:
    if name == "g":
        return monomial(H, 1)
    if name == "x":
        return monomial(H, 0, 1)
    if name == "y" and H.has_y:
        return monomial(H, 0, 0, 1)
    raise KeyError(f"{H.label()} has no generator {name!r}")


def pbw_basis(H: HopfParams) -> list[tuple[int, int, int]]:
    return [(i, j, k) for i in range(H.N) for j in range(H.n) for k in range(H.m)]


@lru_cache(maxsize=None)
def _mono_mul(H: HopfParams, e1: tuple, e2: tuple):
    """(g^i x^j y^k)(g^i' x^j' y^k') = q^s g^(i+i') x^(j+j') y^(k+k'); returns (exps, s) or None."""
    i, j, k = e1
    i2, j2, k2 = e2
    if j + j2 >= H.n or k + k2 >= H.m:
        return None
    # x^j y^k g^i2 = q^(-i2 (a2 j + b2 k)) g^i2 x^j y^k ; y^k x^j2 = q^(-a1 b2 k j2) x^j2 y^k
    s = -i2 * (H.a2 * j + H.b2 * k) - H.a1 * H.b2 * k * j2
    return ((i + i2) % H.N, j + j2, k + k2), s % H.N


def pbw_multiply(e1: PBWElement, e2: PBWElement) -> PBWElement:
    H = e1.algebra
    if e2.algebra != H:
        raise ValueError("elements of different algebras")
    out: dict = {}
    for m1, c1 in e1.terms.items():
        for m2, c2 in e2.terms.items():
            r = _mono_mul(H, m1, m2)
            if r is None:
                continue
            e, s = r
            v = c1 * c2 * q_pow(H.N, s)
            out[e] = out[e] + v if e in out else v
    return PBWElement(H, out)


def tensor_multiply(t1: TensorSquareElement, t2: TensorSquareElement) -> TensorSquareElement:
    H = t1.algebra
    out: dict = {}
    for (l1, r1), c1 in t1.terms.items():
        for (l2, r2), c2 in t2.terms.items():
            a = _mono_mul(H, l1, l2)
            if a is None:
                continue
            b = _mono_mul(H, r1, r2)
            if b is None:
                continue
            key = (a[0], b[0])
            v = c1 * c2 * q_pow(H.N, a[1] + b[1])
            out[key] = out[key] + v if key in out else v
    return TensorSquareElement(H, out)


def _gen_coproduct(H: HopfParams, name: str) -> TensorSquareElement:
    one_ = CycNumber.one(H.N)
    if name == "g":
        return TensorSquareElement(H, {((1 % H.N, 0, 0), (1 % H.N, 0, 0)): one_})
    if name == "x":
        if H.n == 1:
            return TensorSquareElement(H)
        return TensorSquareElement(
            H, {((0, 0, 0), (0, 1, 0)): one_, ((0, 1, 0), (H.a1, 0, 0)): one_}
        )
    if H.m == 1:
        return TensorSquareElement(H)
    return TensorSquareElement(H, {((0, 0, 0), (0, 0, 1)): one_, ((0, 0, 1), (H.b1, 0, 0)): one_})


def _tensor_unit(H):
    return TensorSquareElement(H, {((0, 0, 0), (0, 0, 0)): CycNumber.one(H.N)})


@lru_cache(maxsize=None)
def _mono_coproduct(H: HopfParams, e: tuple) -> TensorSquareElement:
    i, j, k = e
    result = _tensor_unit(H)
    for name, p in (("g", i), ("x", j), ("y", k)):
        gen = _gen_coproduct(H, name)
        for _ in range(p):
            result = tensor_multiply(result, gen)
    return result


def coproduct(e: PBWElement) -> TensorSquareElement:
    """Delta, extended from the generators as an algebra map."""
    H = e.algebra
    out: dict = {}
    for mono, c in e.terms.items():
        for key, v in _mono_coproduct(H, mono).terms.items():
            v = c * v
            out[key] = out[key] + v if key in out else v
    return TensorSquareElement(H, out)


def counit(e: PBWElement) -> CycNumber:
    total = CycNumber.zero(e.algebra.N)
    for (i, j, k), c in e.terms.items():
        if j == 0 and k == 0:
            total = total + c
    return total


def _gen_antipode(H: HopfParams, name: str, inverse: bool) -> PBWElement:
    if name == "g":
        return monomial(H, -1)
    a = H.a1 if name == "x" else H.b1
    gen = generator(H, name)
    gpow = monomial(H, -a)
    # S x = -x g^-a ; S^-1 x = -g^-a x
    return -(gpow * gen) if inverse else -(gen * gpow)


@lru_cache(maxsize=None)
def _mono_antipode(H: HopfParams, e: tuple, inverse: bool) -> PBWElement:
    i, j, k = e
    result = one(H)
    # anti-algebra map: S(g^i x^j y^k) = S(y)^k S(x)^j S(g)^i
    for name, p in (("y", k), ("x", j), ("g", i)):
        if p:
            s = _gen_antipode(H, name, inverse)
            for _ in range(p):
                result = result * s
    return result


def _apply_linear(e: PBWElement, f) -> PBWElement:
    out = PBWElement(e.algebra)
    for mono, c in e.terms.items():
        out = out + c * f(mono)
    return out


def antipode(e: PBWElement) -> PBWElement:
    return _apply_linear(e, lambda mono: _mono_antipode(e.algebra, mono, False))


def antipode_inverse(e: PBWElement) -> PBWElement:
    return _apply_linear(e, lambda mono: _mono_antipode(e.algebra, mono, True))


def multiply_legs(t: TensorSquareElement, left=None, right=None) -> PBWElement:
    """m o (left (x) right) applied to t; maps default to the identity."""
    H = t.algebra
    out = PBWElement(H)
    for (l, r), c in t.terms.items():
        lft = PBWElement(H, {l: CycNumber.one(H.N)})
        rgt = PBWElement(H, {r: CycNumber.one(H.N)})
        if left is not None:
            lft = left(lft)
        if right is not None:
            rgt = right(rgt)
        out = out + c * (lft * rgt)
    return out


def distinguished_data(H: HopfParams) -> tuple[int, int, bool]:
    """(D index, distinguished group-like exponent, unimodular) in closed form."""
    return H.D_index, H.grouplike_index, H.unimodular


def _check_bound(H, bound):
    if H.dim > bound:
        raise DimensionBound(f"{H.label()} has dimension {H.dim} > bound {bound}")


def _single_grouplike(H: HopfParams, e: PBWElement) -> int:
    if len(e.terms) != 1:
        raise ArithmeticError(f"expected a group-like, got {e!r}")
    (mono, c), = e.terms.items()
    if mono[1] or mono[2] or c != 1:
        raise ArithmeticError(f"expected a group-like, got {e!r}")
    return mono[0]


def distinguished_grouplike_oracle(H: HopfParams, bound: int = 256) -> int:
    """Exponent s of the distinguished group-like g^s, computed from integrals.

    Solves for the left integral lambda of the dual algebra, i.e. the linear
    forms with h_(1) lambda(h_(2)) = lambda(h) 1, in the dual PBW basis.  The
    distinguished group-like a is then read off lambda(h_(1)) h_(2) = lambda(h) a.
    """
    _check_bound(H, bound)
    basis = pbw_basis(H)
    index = {e: t for t, e in enumerate(basis)}
    unit = (0, 0, 0)
    rows = []
    deltas = [_mono_coproduct(H, e) for e in basis]
    for b, delta in zip(basis, deltas):
        by_left: dict = {}
        for (u, v), c in delta.terms.items():
            by_left.setdefault(u, {})
            row = by_left[u]
            row[index[v]] = row[index[v]] + c if index[v] in row else c
        by_left.setdefault(unit, {})
        row = by_left[unit]
        t = index[b]
        row[t] = row[t] - 1 if t in row else -CycNumber.one(H.N)
        rows.extend(by_left.values())
    kernel = kernel_from_rows(rows, len(basis), H.N)
    if len(kernel) != 1:
        raise ArithmeticError(f"space of integrals has dimension {len(kernel)}, expected 1")
    lam = kernel[0]
    result = None
    for b, delta in zip(basis, deltas):
        acc = PBWElement(H)
        for (u, v), c in delta.terms.items():
            w = lam[index[u]]
            if w:
                acc = acc + PBWElement(H, {v: c * w})
        lb = lam[index[b]]
        if lb:
            a = _single_grouplike(H, PBWElement(H, {e: c / lb for e, c in acc.terms.items()}))
            if result is None:
                result = a
            elif a != result:
                raise ArithmeticError("inconsistent distinguished group-like")
        elif not acc.is_zero():
            raise ArithmeticError("integral identity fails")
    return result


def modular_function_oracle(H: HopfParams, bound: int = 256) -> int:
    """Exponent s with Lambda g = q^s Lambda for the left integral Lambda of H.

    Lambda spans {Lambda : h Lambda = eps(h) Lambda for h in generators}; the
    right action of H on that line is a character, determined by its value on g.
    """
    _check_bound(H, bound)
    basis = pbw_basis(H)
    index = {e: t for t, e in enumerate(basis)}
    rows = []
    for name in H.generators:
        h = generator(H, name)
        eps = counit(h)
        cols: dict = {}
        for t, e in enumerate(basis):
            prod = h * PBWElement(H, {e: CycNumber.one(H.N)})
            for f, c in prod.terms.items():
                cols.setdefault(index[f], {})[t] = c
            if eps:
                d = cols.setdefault(t, {})
                d[t] = d[t] - eps if t in d else -eps
        rows.extend(cols.values())
    kernel = kernel_from_rows(rows, len(basis), H.N)
    if len(kernel) != 1:
        raise ArithmeticError(f"space of left integrals has dimension {len(kernel)}")
    lam = PBWElement(H, {basis[t]: c for t, c in enumerate(kernel[0])})
    right = lam * generator(H, "g")
    lead = next(iter(lam.terms))
    ratio = right.terms.get(lead, CycNumber.zero(H.N)) / lam.terms[lead]
    if right != ratio * lam:
        raise ArithmeticError("right action on integrals is not by a scalar")
    s = ratio.root_of_unity_exponent()
    if s is None:
        raise ArithmeticError("modular function value is not a root of unity")
    return s


def _character(H: HopfParams, c: int, e: PBWElement) -> CycNumber:
    total = CycNumber.zero(H.N)
    for (i, j, k), v in e.terms.items():
        if j == 0 and k == 0:
            total = total + v * q_pow(H.N, c * i)
    return total


def pair_in_involution_holds(H: HopfParams, c: int, d: int, h: PBWElement) -> bool:
    """Test S^2 h == alpha(h_1) alpha^-1(h_3) g^-d h_2 g^d, alpha(g) = q^c.

    Evaluated directly in the algebra, with h_1 (x) h_2 (x) h_3 = (Delta (x) id) Delta h.
    """
    lhs = antipode(antipode(h))
    gd, gmd = monomial(H, d), monomial(H, -d)
    rhs = PBWElement(H)
    for (u, v), coef in coproduct(h).terms.items():
        beta = _character(H, -c, PBWElement(H, {v: CycNumber.one(H.N)}))
        if not beta:
            continue
        for (u1, u2), coef2 in _mono_coproduct(H, u).terms.items():
            a = _character(H, c, PBWElement(H, {u1: CycNumber.one(H.N)}))
            if not a:
                continue
            mid = gmd * PBWElement(H, {u2: CycNumber.one(H.N)}) * gd
            rhs = rhs + (coef * coef2 * a * beta) * mid
    return lhs == rhs


def check_pair_in_involution(H: HopfParams, c: int, d: int, convention=None) -> bool:
    """Matrix oracle: does v ↦ g^d v intertwine V** (x) T_c with T_c (x) V on the test set?

    Runs on every projective P_k and simple T_k under the calibrated convention
    set (see :mod:`taftpiv.pivotal`).
    """
    from .pivotal import CALIBRATED, pair_accepted

    return pair_accepted(H, c, d, convention or CALIBRATED)
