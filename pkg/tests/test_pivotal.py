import pytest

from conftest import oracle_sweep, small_algebras
from taftpiv.classifier import quasi_pivotal_pairs
from taftpiv.cyclotomic import q_pow
from taftpiv.hopf import make_gen_taft, make_taft
from taftpiv.pivotal import (
    CALIBRATED,
    LITERAL,
    NotQuasiPivotal,
    accepted_pairs,
    all_conventions,
    calibrate,
    check_pivotal_on_module,
    oracle_algebra,
    pair_accepted,
    verify_twist_scalar,
)
from taftpiv.reps import indecomposable_module, projective_module


def test_calibration_selects_frozen_convention():
    report = calibrate()
    print(report.render())
    assert report.chosen == CALIBRATED
    assert all(conv.algebra == "transposed" for conv in report.matching)
    assert report.behaviour_classes == 1 or "dual" in report.inert_toggles


def test_no_convention_without_transposition_fits_examples():
    report = calibrate()
    for conv in all_conventions():
        if conv.algebra == "as_given":
            assert conv not in report.matching


def test_check_pivotal_on_module_examples():
    H = make_gen_taft(3, 1, 1, 1, 2)
    B = oracle_algebra(H)
    assert check_pivotal_on_module(H, 2, 0, projective_module(B, 0))
    T5 = make_taft(5)
    for c in range(5):
        for k in range(5):
            for l in range(1, 6):
                assert check_pivotal_on_module(T5, c, -(c + 1), indecomposable_module(T5, k, l))
    T3 = make_taft(3)
    assert not check_pivotal_on_module(T3, 1, 0, projective_module(T3, 0))
    H4 = make_gen_taft(4, 1, 2, 3, 2)
    with pytest.raises(ValueError):
        # the calibrated oracle runs on the transposed algebra
        check_pivotal_on_module(H4, 0, 0, projective_module(H4, 0))


def test_twist_scalar_examples():
    assert verify_twist_scalar(make_gen_taft(3, 1, 1, 1, 2), 2, 0) == 1
    assert verify_twist_scalar(make_taft(6), 1, 4) == q_pow(6, -4)
    assert verify_twist_scalar(make_taft(6), 1, 4) != 1
    for N in range(2, 7):
        assert verify_twist_scalar(make_taft(N), 0, N - 1) == 1
    with pytest.raises(NotQuasiPivotal):
        verify_twist_scalar(make_taft(3), 1, 0)


def test_twist_scalar_is_q_minus_cd():
    for H in small_algebras(4, taft=True):
        for c, d in accepted_pairs(H):
            s = verify_twist_scalar(H, c, d)
            assert s == q_pow(H.N, -c * d)
            assert (s == 1) == ((c * d) % H.N == 0)


def test_calibrated_oracle_matches_congruences(algebras_n6):
    sweep = oracle_sweep(CALIBRATED)
    bad = [H for H in algebras_n6 if sweep[H] != quasi_pivotal_pairs(H)]
    assert not bad


def test_uncalibrated_oracle_matches_exchanged_congruences(algebras_n6):
    # the convention read off the defining relations gives the exchanged variant
    sweep = oracle_sweep(LITERAL)
    bad = [H for H in algebras_n6 if sweep[H] != quasi_pivotal_pairs(H, form="exchanged")]
    assert not bad


def test_taft_oracle():
    for N in range(2, 8):
        T = make_taft(N)
        assert accepted_pairs(T) == quasi_pivotal_pairs(T)
        assert accepted_pairs(T, LITERAL) == quasi_pivotal_pairs(T)


def test_worked_example_pairs():
    assert pair_accepted(make_gen_taft(9, 1, 3, 5, 3), 6, 6)
    H8 = make_gen_taft(8, 2, 2, 6, 2)
    for c, d in ((2, 0), (2, 4), (6, 0), (6, 4)):
        assert pair_accepted(H8, c, d)
