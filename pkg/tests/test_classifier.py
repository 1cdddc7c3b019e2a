import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_algebras
from taftpiv.classifier import (
    FIGURE_MINIMA,
    CensusReport,
    Implication,
    census,
    classify_pair,
    minimal_counterexample,
    quasi_pivotal_pairs,
    scan_quasi,
    solve_quasi,
    structure_summary,
    valid_parameter_tuples,
)
from taftpiv.hopf import HopfParamsError, make_gen_taft, make_taft

H75 = make_gen_taft(3, 1, 1, 1, 2)
H76 = make_gen_taft(9, 1, 3, 5, 3)
H8 = make_gen_taft(8, 2, 2, 6, 2)


def test_quasi_pairs_examples():
    assert quasi_pivotal_pairs(make_taft(5)) == [(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]
    assert quasi_pivotal_pairs(H75) == [(2, 0)]
    assert {(2, 0), (2, 4), (6, 0), (6, 4)} <= set(quasi_pivotal_pairs(H8))


def test_classify_pair_examples():
    p = classify_pair(H76, 6, 6)
    assert p.quasi_pivotal and p.twisted_pivotal and p.punctured_sphere_nonzero and p.sphere_nonzero
    assert not p.plain_pivotal
    p = classify_pair(H75, 2, 0)
    assert p.twisted_pivotal and not p.punctured_sphere_nonzero
    for N in range(2, 10):
        assert classify_pair(make_taft(N), 0, N - 1).plain_pivotal
    assert not classify_pair(H75, 0, 0).quasi_pivotal


def test_structure_summary_examples():
    s = structure_summary(H75)
    assert not s.has_pivotal and s.has_twisted_pivotal
    s = structure_summary(H76)
    assert s.has_twisted_spherical and not s.unimodular
    s = structure_summary(make_taft(3))
    assert s.has_pivotal and not s.has_twisted_spherical


def test_valid_tuples_agree_with_constructor():
    for N in range(2, 9):
        fast = {tuple(map(int, t)) for t in valid_parameter_tuples(N)}
        slow = set()
        for a1 in range(N):
            for a2 in range(N):
                for b1 in range(N):
                    for b2 in range(N):
                        try:
                            make_gen_taft(N, a1, a2, b1, b2)
                        except HopfParamsError:
                            continue
                        slow.add((a1, a2, b1, b2))
        assert fast == slow


def test_solver_and_scan_agree():
    for N in range(2, 13):
        for t in valid_parameter_tuples(N):
            t = tuple(map(int, t))
            for form in ("standard", "exchanged"):
                assert solve_quasi(N, *t, form=form) == scan_quasi(N, *t, form=form)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 40), st.data())
def test_flag_implications(N, data):
    tuples = valid_parameter_tuples(N)
    if not len(tuples):
        return
    t = tuple(map(int, tuples[data.draw(st.integers(0, len(tuples) - 1))]))
    H = make_gen_taft(N, *t)
    c, d = data.draw(st.integers(0, N - 1)), data.draw(st.integers(0, N - 1))
    p = classify_pair(H, c, d)  # __post_init__ asserts the implications
    if p.spherical:
        assert p.plain_pivotal and p.sphere_nonzero
    s = structure_summary(H)
    assert not s.has_pivotal or s.has_twisted_pivotal
    assert not s.has_twisted_pivotal or s.has_quasi
    assert not s.has_spherical or (s.has_twisted_spherical and s.has_pivotal)


@pytest.mark.parametrize("N", range(2, 16))
def test_taft_structure(N):
    T = make_taft(N)
    pairs = quasi_pivotal_pairs(T)
    assert len(pairs) == N
    tp = {c for c, d in pairs if classify_pair(T, c, d).twisted_pivotal}
    assert tp == {c for c in range(N) if (c * (c + 1)) % N == 0}


def test_spherical_implies_unimodular():
    for H in small_algebras(6, taft=True):
        if structure_summary(H).has_spherical:
            assert H.unimodular


def test_census_small():
    r8 = census(8)
    assert r8.nonunimodular_with_twisted_spherical == 4
    assert census(9).nonunimodular_with_twisted_spherical == 24
    assert r8.with_pivotal <= r8.with_twisted_pivotal <= r8.total_valid
    assert r8.with_spherical <= r8.with_twisted_spherical


def test_census_methods_and_workers_agree():
    for N in (6, 8, 12):
        base = census(N, workers=1)
        assert census(N, workers=2) == base
        assert census(N, method="scan") == base


def test_census_report_fields():
    r = census(5)
    assert isinstance(r, CensusReport)
    assert r.csv_row().split(",")[0] == "5"
    with pytest.raises(ValueError):
        census(1)


def test_minimal_counterexamples():
    assert minimal_counterexample(Implication.TP_without_P, 10) == 3
    assert minimal_counterexample("Q_without_TP", 10) == 5
    assert minimal_counterexample(Implication.valid_without_Q, 10) == 8
    assert minimal_counterexample(Implication.valid_without_Q, 7) is None


def test_all_figure_labels():
    for imp, expected in FIGURE_MINIMA.items():
        assert minimal_counterexample(imp, 10) == expected, imp
