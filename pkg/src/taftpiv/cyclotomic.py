"""Exact arithmetic in the cyclotomic fields Q(zeta_N) and dense linear algebra over them.

An element of Q(zeta_N) is stored as a polynomial in zeta of degree < phi(N),
reduced modulo the N-th cyclotomic polynomial.  Coefficients are kept as a
tuple of integer numerators over one positive common denominator, which keeps
the inner loops in machine-friendly ``int`` arithmetic; ``coefficients``
exposes them as :class:`fractions.Fraction`.

Matrices are immutable and row-major.  Elimination runs on sparse row
dictionaries internally because the systems met in this package (intertwiner
equations, integral equations) have very few non-zeros per row.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "DivisionByZero",
    "CycNumber",
    "CycMatrix",
    "totient",
    "cyclotomic_polynomial",
    "q_pow",
    "cyc_inverse",
    "kernel_basis",
    "rank",
    "solve",
]


class DivisionByZero(ZeroDivisionError):
    pass


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic; low-to-high coefficients
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    return list(_cyclotomic(n))


class _Level:
    """Per-level constants: degree, modulus and the reductions of zeta^k."""

    def __init__(self, n: int):
        self.n = n
        self.phi = _cyclotomic(n)
        self.deg = len(self.phi) - 1
        # zeta^k for 0 <= k < n as integer vectors of length deg
        powers = []
        vec = [1] + [0] * (self.deg - 1)
        for _ in range(n):
            powers.append(tuple(vec))
            vec = self._shift(vec)
        self.powers = tuple(powers)

    def _shift(self, vec: list[int]) -> list[int]:
        top = vec[-1]
        out = [0] + vec[:-1]
        if top:
            for i in range(self.deg):
                out[i] -= top * self.phi[i]
        return out

    def reduce(self, prod: list[int]) -> tuple[int, ...]:
        d, phi = self.deg, self.phi
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                base = k - d
                for i in range(d):
                    prod[base + i] -= c * phi[i]
        return tuple(prod[:d])


@lru_cache(maxsize=None)
def _level(n: int) -> _Level:
    if n < 1:
        raise ValueError("level must be a positive integer")
    return _Level(n)


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-a for a in num], -den
    g = math.gcd(den, *num)
    if g != 1:
        num, den = [a // g for a in num], den // g
    return tuple(num), den


class CycNumber:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("level", "_num", "_den", "_hash")

    def __init__(self, level: int, coefficients: Iterable = (), *, _raw=None):
        self.level = level
        self._hash = None
        if _raw is not None:
            self._num, self._den = _raw
            return
        lv = _level(level)
        coeffs = [Fraction(c) for c in coefficients]
        if len(coeffs) > lv.deg:
            # accept longer vectors and reduce them
            den = math.lcm(*(c.denominator for c in coeffs))
            nums = lv.reduce([int(c * den) for c in coeffs])
            self._num, self._den = _normalize(nums, den)
            return
        coeffs += [Fraction(0)] * (lv.deg - len(coeffs))
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        self._num, self._den = _normalize([int(c * den) for c in coeffs], den)

    @classmethod
    def _make(cls, level, num, den):
        obj = cls.__new__(cls)
        obj.level = level
        obj._hash = None
        obj._num, obj._den = _normalize(num, den)
        return obj

    @classmethod
    def from_rational(cls, level: int, value) -> CycNumber:
        value = Fraction(value)
        deg = _level(level).deg
        num = [value.numerator] + [0] * (deg - 1)
        return cls(level, _raw=(tuple(num), value.denominator))

    @classmethod
    def zero(cls, level: int) -> CycNumber:
        return _zero(level)

    @classmethod
    def one(cls, level: int) -> CycNumber:
        return _one(level)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self):
        return any(self._num)

    def _coerce(self, other) -> CycNumber:
        if isinstance(other, CycNumber):
            if other.level != self.level:
                raise ValueError(f"level mismatch: {self.level} vs {other.level}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(self.level, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not any(other._num):
            return self
        if not any(self._num):
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = [a + b for a, b in zip(self._num, other._num)]
            return CycNumber._make(self.level, num, d1)
        num = [a * d2 + b * d1 for a, b in zip(self._num, other._num)]
        return CycNumber._make(self.level, num, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.level, _raw=(tuple(-a for a in self._num), self._den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return _zero(self.level)
            return CycNumber._make(
                self.level,
                [a * other.numerator for a in self._num],
                self._den * other.denominator,
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._num, other._num
        if not any(a) or not any(b):
            return _zero(self.level)
        lv = _level(self.level)
        d = lv.deg
        if d == 1:
            return CycNumber._make(self.level, [a[0] * b[0]], self._den * other._den)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycNumber._make(self.level, lv.reduce(prod), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        return cyc_inverse(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * cyc_inverse(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * cyc_inverse(self)

    def __pow__(self, k: int):
        if k < 0:
            return cyc_inverse(self) ** (-k)
        result, base = _one(self.level), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(self.level, other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.level == other.level and self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, self._num, self._den))
        return self._hash

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"Cyc{self.level}({body})"

    def root_of_unity_exponent(self) -> int | None:
        """Return k in 0..N-1 with self == zeta^k, or None."""
        for k, vec in enumerate(_level(self.level).powers):
            if self._den == 1 and self._num == vec:
                return k
        return None


@lru_cache(maxsize=None)
def _zero(level: int) -> CycNumber:
    deg = _level(level).deg
    return CycNumber(level, _raw=((0,) * deg, 1))


@lru_cache(maxsize=None)
def _one(level: int) -> CycNumber:
    deg = _level(level).deg
    return CycNumber(level, _raw=((1,) + (0,) * (deg - 1), 1))


@lru_cache(maxsize=None)
def _q_pow(level: int, k: int) -> CycNumber:
    return CycNumber(level, _raw=(_level(level).powers[k], 1))


def q_pow(n: int, k: int) -> CycNumber:
    """zeta_n ** k, with k reduced modulo n."""
    return _q_pow(n, k % n)


# polynomial helpers over Q, low-to-high, trailing zeros stripped

def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        _ptrim(a)
    return _ptrim(q), a


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, bi in enumerate(b):
        a[i] -= bi
    return _ptrim(a)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _ptrim(out)


def cyc_inverse(a: CycNumber) -> CycNumber:
    """Multiplicative inverse by the extended Euclidean algorithm against Phi_N."""
    if a.is_zero():
        raise DivisionByZero(f"inverse of zero in Q(zeta_{a.level})")
    k = a.root_of_unity_exponent()
    if k is not None:
        return q_pow(a.level, -k)
    phi = [Fraction(c) for c in _cyclotomic(a.level)]
    r0, r1 = phi, _ptrim(list(a.coefficients))
    s0, s1 = [], [Fraction(1)]
    # invariant: r_i == s_i * a (mod phi)
    while len(r1) > 1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _psub(s0, _pmul(quo, s1))
    c = r1[0]
    return CycNumber(a.level, [x / c for x in s1])


class CycMatrix:
    """Immutable dense matrix with entries in Q(zeta_N)."""

    __slots__ = ("level", "rows", "cols", "entries", "_nz")

    def __init__(self, level: int, rows: int, cols: int, entries: Sequence[CycNumber]):
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows*cols")
        self.level = level
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        self._nz = None
        for e in self.entries:
            if e.level != level:
                raise ValueError("all entries must share one level")

    @classmethod
    def _trusted(cls, level, rows, cols, entries):
        obj = cls.__new__(cls)
        obj.level, obj.rows, obj.cols, obj.entries = level, rows, cols, tuple(entries)
        obj._nz = None
        return obj

    @classmethod
    def _from_nz(cls, level, rows, cols, nz):
        """Build from a row-major list of non-zero (i, j, value) triples."""
        z = _zero(level)
        flat = [z] * (rows * cols)
        for i, j, v in nz:
            flat[i * cols + j] = v
        obj = cls._trusted(level, rows, cols, flat)
        obj._nz = nz
        return obj

    @classmethod
    def from_rows(cls, level: int, rows: Sequence[Sequence]) -> CycMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for e in r:
                flat.append(e if isinstance(e, CycNumber) else CycNumber.from_rational(level, e))
        return cls(level, len(rows), ncols, flat)

    @classmethod
    def zeros(cls, level: int, rows: int, cols: int | None = None) -> CycMatrix:
        cols = rows if cols is None else cols
        return cls._trusted(level, rows, cols, [_zero(level)] * (rows * cols))

    @classmethod
    def identity(cls, level: int, n: int) -> CycMatrix:
        return cls.diagonal(level, [_one(level)] * n)

    @classmethod
    def diagonal(cls, level: int, diag: Sequence[CycNumber]) -> CycMatrix:
        n = len(diag)
        return cls._from_nz(level, n, n, [(i, i, d) for i, d in enumerate(diag) if d])

    @classmethod
    def from_sparse(cls, level: int, rows: int, cols: int, items: dict) -> CycMatrix:
        nz = [(i, j, v) for (i, j), v in sorted(items.items()) if v]
        return cls._from_nz(level, rows, cols, nz)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[CycNumber, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[CycNumber, ...]:
        return self.entries[j::self.cols]

    def nonzeros(self) -> list[tuple[int, int, CycNumber]]:
        """(i, j, value) for the non-zero entries in row-major order; computed once."""
        if self._nz is None:
            c = self.cols
            self._nz = [(idx // c, idx % c, e) for idx, e in enumerate(self.entries) if e]
        return self._nz

    def _sparse_rows(self):
        rows = [dict() for _ in range(self.rows)]
        for i, j, e in self.nonzeros():
            rows[i][j] = e
        return rows

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        brows = [[] for _ in range(other.rows)]
        for k, j, b in other.nonzeros():
            brows[k].append((j, b))
        out = [dict() for _ in range(self.rows)]
        for i, k, a in self.nonzeros():
            acc = out[i]
            for j, b in brows[k]:
                v = a * b
                if j in acc:
                    acc[j] = acc[j] + v
                else:
                    acc[j] = v
        nz = [(i, j, acc[j]) for i, acc in enumerate(out) for j in sorted(acc) if acc[j]]
        return CycMatrix._from_nz(self.level, self.rows, other.cols, nz)

    def __add__(self, other: CycMatrix) -> CycMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        flat = list(self.entries)
        c = self.cols
        for i, j, b in other.nonzeros():
            flat[i * c + j] = flat[i * c + j] + b
        return CycMatrix._trusted(self.level, self.rows, self.cols, flat)

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return CycMatrix._trusted(
            self.level, self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return CycMatrix._trusted(self.level, self.rows, self.cols, [-a for a in self.entries])

    def scale(self, s) -> CycMatrix:
        if s == 1:
            return self
        nz = [(i, j, s * a) for i, j, a in self.nonzeros()]
        return CycMatrix._from_nz(self.level, self.rows, self.cols, [t for t in nz if t[2]])

    def __pow__(self, k: int) -> CycMatrix:
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result, base = CycMatrix.identity(self.level, self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> CycMatrix:
        flat = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return CycMatrix._trusted(self.level, self.cols, self.rows, flat)

    T = property(transpose)

    def kron(self, other: CycMatrix) -> CycMatrix:
        r, c = self.rows * other.rows, self.cols * other.cols
        z = _zero(self.level)
        flat = [z] * (r * c)
        bnz = other.nonzeros()
        for i, j, a in self.nonzeros():
            for k, l, b in bnz:
                flat[(i * other.rows + k) * c + j * other.cols + l] = a * b
        return CycMatrix._trusted(self.level, r, c, flat)

    def is_zero(self) -> bool:
        return not self.nonzeros()

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.level, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"CycMatrix(level={self.level}, shape={self.shape})"

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> list[tuple[CycNumber, ...]]:
        return kernel_basis(self)


def _echelon(rows: Iterable[dict], ncols: int) -> dict[int, dict]:
    """Reduced row echelon form of sparse rows, keyed by pivot column.

    Every returned row has a 1 at its pivot column and zeros at all other
    pivot columns, so the result is the canonical RREF.
    """
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {j: v for j, v in row.items() if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                break
            f = row[lead]
            for j, v in prow.items():
                nv = row.get(j)
                nv = -(f * v) if nv is None else nv - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        if not row:
            continue
        lead = min(row)
        inv = cyc_inverse(row[lead])
        pivots[lead] = {j: v * inv for j, v in row.items()}
    # back substitution, highest pivot first
    for p in sorted(pivots, reverse=True):
        prow = pivots[p]
        for q in pivots:
            if q >= p:
                continue
            qrow = pivots[q]
            f = qrow.get(p)
            if f is None:
                continue
            for j, v in prow.items():
                nv = qrow.get(j)
                nv = -(f * v) if nv is None else nv - f * v
                if nv:
                    qrow[j] = nv
                else:
                    qrow.pop(j, None)
    return pivots


def rank(m: CycMatrix) -> int:
    return len(_echelon(m._sparse_rows(), m.cols))


def kernel_from_rows(rows: Iterable[dict], ncols: int, level: int) -> list[tuple[CycNumber, ...]]:
    """Canonical kernel basis of a system given as sparse rows (column -> value)."""
    pivots = _echelon(rows, ncols)
    z, one = _zero(level), _one(level)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [z] * ncols
        vec[free] = one
        for p, prow in pivots.items():
            v = prow.get(free)
            if v is not None:
                vec[p] = -v
        basis.append(tuple(vec))
    return basis


def kernel_basis(m: CycMatrix) -> list[tuple[CycNumber, ...]]:
    """Basis of {v : m v = 0} read off the reduced row echelon form.

    One vector per free column, in increasing column order; the free
    coordinate is 1 and the other free coordinates are 0.
    """
    return kernel_from_rows(m._sparse_rows(), m.cols, m.level)


def solve(m: CycMatrix, b: Sequence[CycNumber]) -> tuple[CycNumber, ...] | None:
    """One solution of m v = b (free variables set to 0), or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    n = m.cols
    rows = m._sparse_rows()
    for i, bi in enumerate(b):
        if bi:
            rows[i][n] = bi
    pivots = _echelon(rows, n + 1)
    if n in pivots:
        return None
    z = _zero(m.level)
    sol = [z] * n
    for p, prow in pivots.items():
        sol[p] = prow.get(n, z)
    return tuple(sol)
