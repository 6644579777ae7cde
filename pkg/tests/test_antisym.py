import math

import numpy as np
import pytest

from fermiex import (
    BasisSpec,
    NFermionTensor,
    ShapeError,
    ZeroStateError,
    antisymmetrize,
    basis_tensor,
    exchange_antisymmetry_check,
    is_excluded,
    pair_symmetric,
    product_tensor,
    swap_pair,
    symmetric_pairs,
)
from helpers import random_tensor, random_unit_vector, symmetrize_pair
from oracles import brute_force_antisymmetrize

SPEC4 = BasisSpec(d=4, S=1)
SPEC2 = BasisSpec(d=2, S=1)


def test_swap_pair_examples():
    e01 = basis_tensor(SPEC2, (0, 1))
    e10 = basis_tensor(SPEC2, (1, 0))
    np.testing.assert_array_equal(swap_pair(e01, 1, 2).amplitudes, e10.amplitudes)

    sym = NFermionTensor(2, SPEC2, e01.amplitudes + e10.amplitudes)
    np.testing.assert_array_equal(swap_pair(sym, 1, 2).amplitudes, sym.amplitudes)

    e012 = basis_tensor(BasisSpec(d=3, S=1), (0, 1, 2))
    e210 = basis_tensor(BasisSpec(d=3, S=1), (2, 1, 0))
    np.testing.assert_array_equal(swap_pair(e012, 1, 3).amplitudes, e210.amplitudes)


def test_swap_pair_is_involution(rng):
    t = random_tensor(rng, 3, SPEC4)
    np.testing.assert_array_equal(swap_pair(swap_pair(t, 1, 3), 1, 3).amplitudes, t.amplitudes)


@pytest.mark.parametrize("i, j", [(0, 1), (1, 1), (2, 1), (1, 4)])
def test_swap_pair_slot_validation(i, j):
    t = basis_tensor(SPEC2, (0, 1))
    with pytest.raises(IndexError):
        swap_pair(t, i, j)


def test_antisymmetrize_pauli_case(rng):
    a = random_unit_vector(rng, 4)
    t = product_tensor(SPEC4, [a, a])
    out = antisymmetrize(t)
    assert out.norm() <= 1e-15


def test_antisymmetrize_two_particle_example():
    out = antisymmetrize(basis_tensor(SPEC2, (0, 1)))
    assert out.amplitudes[0, 1] == pytest.approx(0.5)
    assert out.amplitudes[1, 0] == pytest.approx(-0.5)
    assert out.norm() == pytest.approx(1 / math.sqrt(2), rel=1e-12)


def test_antisymmetrize_three_particle_matches_oracle():
    t = basis_tensor(BasisSpec(d=3, S=1), (0, 1, 2))
    expected = brute_force_antisymmetrize(t.amplitudes)
    out = antisymmetrize(t)
    np.testing.assert_array_equal(out.amplitudes, expected)
    assert out.norm() == pytest.approx(1 / math.sqrt(6), rel=1e-12)


def test_antisymmetrize_needs_two_particles():
    with pytest.raises(ShapeError):
        antisymmetrize(basis_tensor(SPEC2, (0,)))


@pytest.mark.parametrize("n, d", [(2, 4), (3, 4), (4, 3)])
def test_antisymmetrize_matches_oracle_exactly(rng, n, d):
    spec = BasisSpec(d=d, S=1)
    for _ in range(10):
        t = random_tensor(rng, n, spec)
        np.testing.assert_array_equal(
            antisymmetrize(t).amplitudes, brute_force_antisymmetrize(t.amplitudes)
        )


def test_projector_idempotent(rng):
    for n, d in ((2, 4), (3, 4), (4, 3)):
        t = random_tensor(rng, n, BasisSpec(d=d, S=1))
        once = antisymmetrize(t)
        twice = antisymmetrize(once)
        assert np.linalg.norm(twice.amplitudes - once.amplitudes) <= 1e-12 * t.norm()


def test_contraction(rng):
    for n, d in ((2, 4), (3, 3), (4, 3)):
        t = random_tensor(rng, n, BasisSpec(d=d, S=1))
        assert antisymmetrize(t).norm() <= t.norm() + 1e-12


def test_linearity(rng):
    spec = BasisSpec(d=3, S=1)
    for _ in range(20):
        t1 = random_tensor(rng, 3, spec)
        t2 = random_tensor(rng, 3, spec)
        alpha, beta = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
        combined = NFermionTensor(3, spec, alpha * t1.amplitudes + beta * t2.amplitudes)
        lhs = antisymmetrize(combined).amplitudes
        rhs = alpha * antisymmetrize(t1).amplitudes + beta * antisymmetrize(t2).amplitudes
        assert np.linalg.norm(lhs - rhs) <= 1e-12 * np.linalg.norm(combined.amplitudes)


def test_exchange_antisymmetry_check_examples(rng):
    phi = antisymmetrize(random_tensor(rng, 3, SPEC4))
    assert exchange_antisymmetry_check(phi)

    e01 = basis_tensor(SPEC2, (0, 1)).amplitudes
    e10 = basis_tensor(SPEC2, (1, 0)).amplitudes
    assert not exchange_antisymmetry_check(NFermionTensor(2, SPEC2, e01 + e10))
    assert not exchange_antisymmetry_check(NFermionTensor(2, SPEC2, e01))
    with pytest.raises(ZeroStateError):
        exchange_antisymmetry_check(NFermionTensor(2, SPEC2, np.zeros((2, 2))))


def test_pair_symmetric_examples(rng):
    a = random_unit_vector(rng, 4)
    b = random_unit_vector(rng, 4)
    assert pair_symmetric(product_tensor(SPEC4, [a, a, b]), 1, 2)
    assert not pair_symmetric(basis_tensor(SPEC2, (0, 1)), 1, 2)

    e01 = basis_tensor(SPEC2, (0, 1)).amplitudes
    e10 = basis_tensor(SPEC2, (1, 0)).amplitudes
    sym12 = np.multiply.outer(e01 + e10, np.array([0.0, 1.0], dtype=complex))
    assert pair_symmetric(NFermionTensor(3, SPEC2, sym12), 1, 2)


def test_is_excluded_product_with_equal_factors(rng):
    a = random_unit_vector(rng, 4)
    verdict = is_excluded(product_tensor(SPEC4, [a, a]))
    assert verdict.excluded
    assert verdict.condition == "pair-symmetry(1,2)"
    assert verdict.norm_ratio <= 1e-14


def test_is_excluded_orthonormal_product():
    t = basis_tensor(BasisSpec(d=3, S=1), (0, 1, 2))
    ratio = np.linalg.norm(brute_force_antisymmetrize(t.amplitudes))  # oracle route
    verdict = is_excluded(t)
    assert not verdict.excluded
    assert verdict.condition == "none"
    assert verdict.norm_ratio == pytest.approx(ratio, rel=1e-12)
    assert verdict.norm_ratio == pytest.approx(1 / math.sqrt(6), rel=1e-12)


def test_is_excluded_symmetrized_slots(rng):
    t = random_tensor(rng, 3, SPEC4)
    sym = NFermionTensor(3, SPEC4, symmetrize_pair(t.amplitudes, 1, 2))
    verdict = is_excluded(sym)
    assert verdict.excluded
    assert verdict.condition == "pair-symmetry(1,2)"


def test_is_excluded_generic_vanishing_tag(rng):
    # a vanishing projection without any exact pair symmetry: sum of two
    # pair-symmetrized tensors is annihilated but generically asymmetric
    t1 = random_tensor(rng, 3, SPEC2)
    t2 = random_tensor(rng, 3, SPEC2)
    arr = symmetrize_pair(t1.amplitudes, 1, 2) + symmetrize_pair(t2.amplitudes, 2, 3)
    tensor = NFermionTensor(3, SPEC2, arr)
    verdict = is_excluded(tensor)
    assert verdict.excluded
    assert verdict.condition == "generic-vanishing"
    assert symmetric_pairs(tensor) == []


def test_pair_symmetry_implies_excluded(rng):
    for _ in range(50):
        n = int(rng.integers(2, 5))
        spec = BasisSpec(d=3, S=1)
        i = int(rng.integers(1, n + 1 - 1))
        j = int(rng.integers(i + 1, n + 1))
        t = random_tensor(rng, n, spec)
        sym = NFermionTensor(n, spec, symmetrize_pair(t.amplitudes, i, j))
        assert pair_symmetric(sym, i, j)
        assert is_excluded(sym).excluded


def test_orthonormal_product_norms(rng):
    for n in (2, 3, 4):
        spec = BasisSpec(d=n, S=1)
        vectors = [np.eye(n)[k] for k in range(n)]
        t = product_tensor(spec, vectors)
        assert antisymmetrize(t).norm() == pytest.approx(1 / math.sqrt(math.factorial(n)), rel=1e-12)


def test_exchange_antisymmetry_of_projections(rng):
    for _ in range(20):
        n = int(rng.integers(2, 5))
        t = random_tensor(rng, n, BasisSpec(d=3, S=1))
        phi = antisymmetrize(t)
        if phi.norm() > 1e-8:
            assert exchange_antisymmetry_check(phi)
