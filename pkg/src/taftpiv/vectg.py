"""Invertible objects of the Drinfeld center of Vect_G with their sphere conditions.

An invertible object of Z(Vect_G) is a pair (z, chi) with z central and chi a
one-dimensional character.  Its twist is chi(z); the punctured sphere is
non-zero iff z^2 = 1 and the sphere iff moreover chi^2 = 1.

Characters are stored exactly as exponent vectors in Z/M with M the exponent
of G, so chi(g) = exp(2 pi i chi[g] / M).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from pathlib import Path

import numpy as np

__all__ = [
    "CayleyFormatError",
    "FiniteGroup",
    "CenterPair",
    "parse_cayley",
    "load_cayley",
    "cyclic_group",
    "group_center",
    "commutator_subgroup",
    "group_characters",
    "vectg_classify",
]

MAX_ORDER = 128


class CayleyFormatError(ValueError):
    pass


class FiniteGroup:
    """A group given by its multiplication table on indices 0..order-1."""

    def __init__(self, table):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise CayleyFormatError("table must be a non-empty square array")
        n = t.shape[0]
        if n > MAX_ORDER:
            raise CayleyFormatError(f"order {n} exceeds {MAX_ORDER}")
        if t.min() < 0 or t.max() >= n:
            raise CayleyFormatError("entries must be indices in 0..order-1")
        ids = [e for e in range(n) if (t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()]
        if not ids:
            raise CayleyFormatError("no identity element")
        e = ids[0]
        # (ab)c == a(bc) for all triples
        if not (t[t] == t[:, t]).all():
            raise CayleyFormatError("multiplication is not associative")
        inv = np.full(n, -1)
        for a in range(n):
            hits = np.nonzero(t[a] == e)[0]
            if len(hits) != 1 or t[hits[0], a] != e:
                raise CayleyFormatError(f"element {a} has no two-sided inverse")
            inv[a] = hits[0]
        self.table = t
        self.order = n
        self.identity = e
        self.inverse = inv

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    @property
    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in range(self.order)))

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def parse_cayley(text: str) -> FiniteGroup:
    """First line: the order.  Then one row per element of space-separated 0-based indices."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CayleyFormatError("empty input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise CayleyFormatError(f"first line must be the order, got {lines[0]!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise CayleyFormatError(f"order must be in 1..{MAX_ORDER}, got {n}")
    if len(lines) != n + 1:
        raise CayleyFormatError(f"expected {n} rows, got {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:], start=2):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise CayleyFormatError(f"line {i}: non-integer entry") from None
        if len(row) != n:
            raise CayleyFormatError(f"line {i}: expected {n} entries, got {len(row)}")
        rows.append(row)
    return FiniteGroup(rows)


def load_cayley(path) -> FiniteGroup:
    return parse_cayley(Path(path).read_text())


def cyclic_group(n: int) -> FiniteGroup:
    r = np.arange(n)
    return FiniteGroup((r[:, None] + r[None, :]) % n)


def group_center(G: FiniteGroup) -> list[int]:
    t = G.table
    return [z for z in range(G.order) if (t[z] == t[:, z]).all()]


def _closure(G: FiniteGroup, gens) -> set[int]:
    H = {G.identity}
    frontier = [G.identity]
    gens = set(gens)
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                p = G.mul(h, s)
                if p not in H:
                    H.add(p)
                    nxt.append(p)
        frontier = nxt
    return H


def commutator_subgroup(G: FiniteGroup) -> set[int]:
    inv = G.inverse
    comms = {
        G.mul(G.mul(a, b), G.mul(int(inv[a]), int(inv[b]))) for a in range(G.order) for b in range(G.order)
    }
    return _closure(G, comms)


def _cosets(G: FiniteGroup, K: set[int]) -> list[int]:
    """Coset label of each element for a normal subgroup K (labels = smallest member)."""
    label = [-1] * G.order
    for a in range(G.order):
        if label[a] < 0:
            for k in K:
                label[G.mul(a, k)] = a
    return label


def group_characters(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms G -> roots of unity as exponent vectors mod G.exponent.

    Built on the abelianization: characters of a subgroup S are extended to
    <S, a> one new element at a time.  Sorted, so the trivial character is first.
    """
    M = G.exponent
    label = _cosets(G, commutator_subgroup(G))
    reps = sorted(set(label))
    # multiplication on coset labels
    qmul = lambda u, v: label[G.mul(u, v)]  # noqa: E731
    e = label[G.identity]
    S = {e}
    chars = [{e: 0}]
    for a in reps:
        if a in S:
            continue
        r, x = 1, a
        while x not in S:
            x = qmul(x, a)
            r += 1
        # x = a^r lies in S
        powers = [e]
        for _ in range(r - 1):
            powers.append(qmul(powers[-1], a))
        new = []
        for chi in chars:
            base = chi[x]
            assert base % r == 0
            for j in range(r):
                t = base // r + j * (M // r)
                ext = {}
                for i, p in enumerate(powers):
                    for s, val in chi.items():
                        ext[qmul(p, s)] = (i * t + val) % M
                new.append(ext)
        chars = new
        S = set(chars[0])
    out = sorted(tuple(chi[label[g]] for g in range(G.order)) for chi in chars)
    assert len(out) == len(reps)
    return out


@dataclass(frozen=True)
class CenterPair:
    z: int
    chi: tuple[int, ...]
    modulus: int
    trivial_twist: bool
    punctured_nonzero: bool
    sphere_nonzero: bool

    def __post_init__(self):
        assert not self.sphere_nonzero or self.punctured_nonzero


def vectg_classify(G: FiniteGroup) -> list[CenterPair]:
    M = G.exponent
    chars = group_characters(G)
    out = []
    for z in group_center(G):
        z2_trivial = G.mul(z, z) == G.identity
        for chi in chars:
            chi_sq_trivial = all(2 * v % M == 0 for v in chi)
            out.append(
                CenterPair(
                    z=z,
                    chi=chi,
                    modulus=M,
                    trivial_twist=chi[z] % M == 0,
                    punctured_nonzero=z2_trivial,
                    sphere_nonzero=z2_trivial and chi_sq_trivial,
                )
            )
    return out
