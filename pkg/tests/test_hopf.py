import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_algebras
from taftpiv.classifier import quasi_pivotal_pairs
from taftpiv.cyclotomic import CycNumber, q_pow
from taftpiv.hopf import (
    CompatibilityError,
    DimensionBound,
    InvalidLevel,
    NilpotencyError,
    PBWElement,
    TensorSquareElement,
    additive_order,
    antipode,
    antipode_inverse,
    check_pair_in_involution,
    coproduct,
    counit,
    distinguished_data,
    distinguished_grouplike_oracle,
    generator,
    make_gen_taft,
    make_taft,
    modular_function_oracle,
    monomial,
    multiply_legs,
    one,
    pair_in_involution_holds,
    pbw_basis,
)


def test_make_taft():
    T = make_taft(3)
    assert T.dim == 9 and T.kind == "taft" and not T.has_y
    assert make_taft(1).dim == 1
    with pytest.raises(InvalidLevel):
        make_taft(0)


def test_make_gen_taft():
    H = make_gen_taft(9, 1, 3, 5, 3)
    assert (H.n, H.m, H.dim) == (3, 3, 81)
    H = make_gen_taft(3, 1, 1, 1, 2)
    assert (H.n, H.m, H.dim) == (3, 3, 27)
    with pytest.raises(CompatibilityError):
        make_gen_taft(9, 1, 3, 5, 4)
    with pytest.raises(NilpotencyError):
        make_gen_taft(4, 2, 2, 1, 1)
    with pytest.raises(InvalidLevel):
        make_gen_taft(1, 0, 0, 0, 0)


def test_additive_order():
    assert additive_order(3, 9) == 3
    assert additive_order(4, 8) == 2
    assert additive_order(1, 7) == 7
    assert additive_order(0, 5) == 1


def test_commutation_examples():
    H = make_gen_taft(9, 1, 3, 5, 3)
    g, x, y = (generator(H, s) for s in "gxy")
    N = H.N
    assert x * g == q_pow(N, -H.a2) * (g * x)
    assert y * x == q_pow(N, -H.a1 * H.b2) * (x * y)
    assert g * y == q_pow(N, H.b2) * (y * g)
    assert x ** (H.n - 1) * x == PBWElement(H)
    assert y ** H.m == PBWElement(H)
    assert g ** N == one(H)


def test_coproduct_examples():
    H = make_gen_taft(4, 1, 2, 3, 2)
    g, x = generator(H, "g"), generator(H, "x")
    gg = TensorSquareElement(H, {((1, 0, 0), (1, 0, 0)): CycNumber.one(4)})
    assert coproduct(g) == gg
    expected = TensorSquareElement(
        H, {((0, 0, 0), (0, 1, 0)): CycNumber.one(4), ((0, 1, 0), (H.a1, 0, 0)): CycNumber.one(4)}
    )
    assert coproduct(x) == expected
    assert coproduct(g * x) == gg * expected


def test_antipode_examples():
    H = make_gen_taft(9, 1, 3, 5, 3)
    g, x, y = (generator(H, s) for s in "gxy")
    assert antipode(g) == monomial(H, H.N - 1)
    assert antipode(x) == -(x * monomial(H, -H.a1))
    assert antipode(y) == -(y * monomial(H, -H.b1))
    assert antipode(antipode(x)) == q_pow(H.N, H.a1 * H.a2) * x
    assert antipode(antipode(y)) == q_pow(H.N, H.b1 * H.b2) * y
    for h in (g, x, y, g * x * y):
        assert antipode(antipode_inverse(h)) == h


def test_distinguished_data_examples():
    assert distinguished_data(make_gen_taft(9, 1, 3, 5, 3)) == (3, 3, False)
    D, _, uni = distinguished_data(make_gen_taft(3, 1, 1, 1, 2))
    assert D == 0 and uni
    assert make_taft(3).D_index == 2


@pytest.mark.parametrize(
    "H,expected",
    [(make_taft(2), 1), (make_taft(3), 2), (make_gen_taft(3, 1, 1, 1, 2), 1), (make_gen_taft(9, 1, 3, 5, 3), 3)],
)
def test_grouplike_oracle_examples(H, expected):
    assert distinguished_grouplike_oracle(H) == expected == H.grouplike_index


def test_modular_function_is_inverse_of_D():
    # the right character on left integrals of H is the inverse of D
    for H in small_algebras(4, taft=True):
        assert modular_function_oracle(H) == (-H.D_index) % H.N


def test_dimension_bound():
    with pytest.raises(DimensionBound):
        distinguished_grouplike_oracle(make_gen_taft(9, 1, 3, 5, 3), bound=64)


def test_check_pair_in_involution_examples():
    assert check_pair_in_involution(make_gen_taft(3, 1, 1, 1, 2), 2, 0)
    assert check_pair_in_involution(make_gen_taft(9, 1, 3, 5, 3), 6, 6)
    assert not check_pair_in_involution(make_gen_taft(3, 1, 1, 1, 2), 0, 0)


def test_direct_pair_in_involution_gives_exchanged_indices():
    """Evaluated in the algebra itself, the S^2 equation yields the exchanged congruences.

    On the transposed algebra it yields the classifier's congruences; the
    module oracle is calibrated accordingly (see taftpiv.pivotal).
    """
    for H in small_algebras(4, taft=True):
        N = H.N
        found = [
            (c, d)
            for c in range(N)
            for d in range(N)
            if all(pair_in_involution_holds(H, c, d, generator(H, s)) for s in H.generators)
        ]
        assert found == quasi_pivotal_pairs(H, form="exchanged")
        B = H.transposed()
        found_t = [
            (c, d)
            for c in range(N)
            for d in range(N)
            if all(pair_in_involution_holds(B, c, d, generator(B, s)) for s in B.generators)
        ]
        assert found_t == quasi_pivotal_pairs(H)


# property tests on random elements

algebra_st = st.sampled_from(small_algebras(4, taft=True))


@st.composite
def algebra_and_elements(draw, count=3):
    H = draw(algebra_st)
    basis = pbw_basis(H)
    elems = []
    for _ in range(count):
        terms = {}
        for mono in draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3, unique=True)):
            terms[mono] = CycNumber.from_rational(H.N, draw(st.integers(-3, 3)))
        elems.append(PBWElement(H, terms))
    return H, elems


@settings(max_examples=60, deadline=None)
@given(algebra_and_elements())
def test_associativity(data):
    _, (a, b, c) = data
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(algebra_and_elements(count=2))
def test_coproduct_is_algebra_map(data):
    _, (a, b) = data
    assert coproduct(a * b) == coproduct(a) * coproduct(b)


@settings(max_examples=30, deadline=None)
@given(algebra_st)
def test_antipode_axiom_on_generators(H):
    for s in H.generators:
        h = generator(H, s)
        eps = counit(h) * one(H)
        assert multiply_legs(coproduct(h), left=antipode) == eps
        assert multiply_legs(coproduct(h), right=antipode) == eps


@settings(max_examples=40, deadline=None)
@given(algebra_and_elements(count=2))
def test_antipode_is_anti_multiplicative(data):
    _, (a, b) = data
    assert antipode(a * b) == antipode(b) * antipode(a)
    assert counit(a * b) == counit(a) * counit(b)
