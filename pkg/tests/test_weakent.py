import math
from fractions import Fraction

import numpy as np
import pytest

from fermiex import (
    BasisSpec,
    ConfigError,
    LabelError,
    ZeroStateError,
    build_state,
    pauli_verdict_star,
    quantum_number_set,
    rank1_truncate,
    schmidt,
    slater_report,
)
from helpers import random_unit_matrix, random_unit_vector, random_unitary

UP = np.array([1, 0], dtype=complex)
DOWN = np.array([0, 1], dtype=complex)

LABELED = BasisSpec(
    d=3,
    S=2,
    mode_labels=[(1, 0, 0), (2, 0, 0), (2, 1, 0)],
    spin_labels=[Fraction(1, 2), Fraction(-1, 2)],
)


def test_schmidt_single_entry():
    M = np.zeros((2, 2), dtype=complex)
    M[0, 1] = 1.0
    report, left, right = schmidt(M)
    assert report.singular_values == pytest.approx((1.0, 0.0), abs=1e-15)
    assert report.schmidt_rank == 1
    assert report.strength == pytest.approx(0.0, abs=1e-15)


def test_schmidt_maximally_mixed():
    M = np.array([[1, 1], [1, -1]], dtype=complex) / 2
    report, _, _ = schmidt(M)
    # 2x2 closed form: M M^H = I/2, both singular values sqrt(1/2)
    expected = 1 / math.sqrt(2)
    assert report.singular_values == pytest.approx((expected, expected), rel=1e-12)
    assert report.schmidt_rank == 2
    assert report.strength == pytest.approx(1.0, rel=1e-12)


def test_schmidt_diagonal():
    M = np.diag([math.sqrt(0.9), math.sqrt(0.1)]).astype(complex)
    report, _, _ = schmidt(M)
    assert report.singular_values == pytest.approx((math.sqrt(0.9), math.sqrt(0.1)), rel=1e-12)
    assert report.strength == pytest.approx(1 / 3, rel=1e-12)


def test_schmidt_rejects_zero_matrix():
    with pytest.raises(ZeroStateError):
        schmidt(np.zeros((2, 2), dtype=complex))


def test_schmidt_reconstruction(rng):
    for _ in range(100):
        d = int(rng.integers(2, 7))
        M = random_unit_matrix(rng, d)
        report, left, right = schmidt(M)
        rebuilt = sum(
            report.singular_values[i] * np.outer(left[i], right[i]) for i in range(d)
        )
        assert np.linalg.norm(rebuilt - M) <= 1e-10
        assert sum(v**2 for v in report.singular_values) == pytest.approx(1, abs=1e-10)
        np.testing.assert_allclose(left @ left.conj().T, np.eye(d), atol=1e-10)
        np.testing.assert_allclose(right @ right.conj().T, np.eye(d), atol=1e-10)


def test_schmidt_spectrum_unitary_invariance(rng):
    for _ in range(10):
        d = 4
        M = random_unit_matrix(rng, d)
        U = random_unitary(rng, d)
        V = random_unitary(rng, d)
        base = schmidt(M)[0].singular_values
        rotated = schmidt(U @ M @ V)[0].singular_values
        assert rotated == pytest.approx(base, abs=1e-10)


def test_rank1_truncate_of_rank1_matrix(rng):
    psi = random_unit_vector(rng, 3)
    phi = random_unit_vector(rng, 3)
    M = np.outer(psi, phi)
    a, b, truncated, discarded = rank1_truncate(M)
    assert discarded == pytest.approx(0.0, abs=1e-12)
    # equal up to the phase fixed by the convention
    assert abs(abs(np.vdot(truncated, M)) - 1) <= 1e-12


def test_rank1_truncate_diagonal():
    M = np.diag([math.sqrt(0.9), math.sqrt(0.1)]).astype(complex)
    psi, phi, truncated, discarded = rank1_truncate(M)
    np.testing.assert_allclose(psi, [1, 0], atol=1e-12)
    np.testing.assert_allclose(phi, [1, 0], atol=1e-12)
    np.testing.assert_allclose(truncated, np.outer([1, 0], [1, 0]), atol=1e-12)
    assert discarded == pytest.approx(0.1, rel=1e-12)


def test_rank1_truncate_degenerate_spectrum_is_deterministic():
    M = np.array([[1, 1], [1, -1]], dtype=complex) / 2
    first = rank1_truncate(M)
    second = rank1_truncate(M)
    assert first[3] == pytest.approx(0.5, rel=1e-12)
    np.testing.assert_array_equal(first[0], second[0])
    np.testing.assert_array_equal(first[2], second[2])
    # phase convention: leading components real positive
    assert first[0][np.flatnonzero(np.abs(first[0]) > 1e-12)[0]].imag == 0


def test_rank1_truncation_weight_matches_tail(rng):
    for _ in range(20):
        M = random_unit_matrix(rng, 4)
        report, _, _ = schmidt(M)
        _, _, _, discarded = rank1_truncate(M)
        tail = sum(v**2 for v in report.singular_values[1:])
        assert discarded == pytest.approx(tail, abs=1e-10)
        assert (discarded <= 1e-10) == (report.schmidt_rank == 1)


def test_quantum_number_set_minus():
    qns = quantum_number_set("minus", 0, 1, UP, DOWN, LABELED)
    assert qns.spatial_labels == ((1, 0, 0), (2, 0, 0))
    assert qns.spin_labels == (Fraction(-1, 2), Fraction(1, 2))
    assert qns.joint


def test_quantum_number_set_star_equal_modes():
    qns = quantum_number_set("star", 0, 0, UP, None, LABELED)
    assert qns.spatial_labels == ((1, 0, 0), (1, 0, 0))
    assert qns.spin_labels == (Fraction(1, 2), Fraction(1, 2))


def test_quantum_number_set_star_distinct_modes():
    qns = quantum_number_set("star", 0, 2, UP, None, LABELED)
    assert qns.spatial_labels == ((1, 0, 0), (2, 1, 0))
    assert qns.spin_labels == (Fraction(1, 2), Fraction(1, 2))


def test_quantum_number_set_requires_labels():
    with pytest.raises(ConfigError):
        quantum_number_set("star", 0, 1, UP, None, BasisSpec(d=3, S=2))


def test_quantum_number_set_rejects_superposed_spin():
    mixed = (UP + DOWN) / math.sqrt(2)
    with pytest.raises(LabelError):
        quantum_number_set("minus", 0, 1, mixed, DOWN, LABELED)


def test_quantum_number_set_accepts_phased_spin():
    qns = quantum_number_set("star", 0, 1, 1j * UP, None, LABELED)
    assert qns.spin_labels == (Fraction(1, 2), Fraction(1, 2))


def test_pauli_verdict_star_equal_states():
    e0 = np.array([1, 0, 0], dtype=complex)
    verdict = pauli_verdict_star(e0, e0, UP)
    assert verdict.excluded
    assert verdict.condition == "pauli-equal-states"
    assert verdict.norm_ratio <= 1e-14


def test_pauli_verdict_star_distinct_states():
    e0 = np.array([1, 0, 0], dtype=complex)
    e1 = np.array([0, 1, 0], dtype=complex)
    verdict = pauli_verdict_star(e0, e1, UP)
    assert not verdict.excluded
    assert verdict.condition == "none"
    assert verdict.norm_ratio > 0.01


def test_pauli_verdict_star_phase_equivalent_states():
    e0 = np.array([1, 0, 0], dtype=complex)
    verdict = pauli_verdict_star(e0, 1j * e0, UP)
    assert verdict.excluded


def test_pauli_verdict_agrees_with_generic_detector(rng):
    tol = 1e-10
    for _ in range(20):
        psi = random_unit_vector(rng, 3)
        phi = psi.copy() if rng.random() < 0.3 else random_unit_vector(rng, 3)
        verdict = pauli_verdict_star(psi, phi, UP, tol)
        assert verdict.excluded == (verdict.norm_ratio <= tol)


def test_star_build_consistent_with_pauli_verdict(rng):
    from fermiex import ExcludedStateError

    for _ in range(20):
        psi = random_unit_vector(rng, 3)
        phi = psi.copy() if rng.random() < 0.3 else random_unit_vector(rng, 3)
        M = np.outer(psi, phi)
        M /= np.linalg.norm(M)
        verdict = pauli_verdict_star(psi, phi, UP)
        try:
            build_state("star", M, UP)
            built = True
        except ExcludedStateError:
            built = False
        assert built == (not verdict.excluded)


def test_star_entanglement_tracks_schmidt_rank(rng):
    for _ in range(20):
        d = 4
        if rng.random() < 0.5:
            M = np.outer(random_unit_vector(rng, d), random_unit_vector(rng, d))
            if np.linalg.norm(M - M.T) < 0.05:
                continue
        else:
            M = random_unit_matrix(rng, d)
            if np.linalg.norm(M - M.T) < 0.05:
                continue
        report = slater_report(build_state("star", M, UP))
        assert report.entangled == (schmidt(M)[0].schmidt_rank >= 2)
