"""Shared random-input factories for the test suite."""

import numpy as np

from fermiex import BasisSpec, NFermionTensor


def random_array(rng, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_tensor(rng, n: int, spec: BasisSpec) -> NFermionTensor:
    return NFermionTensor(n, spec, random_array(rng, (spec.D,) * n))


def random_unit_vector(rng, length: int) -> np.ndarray:
    v = random_array(rng, length)
    return v / np.linalg.norm(v)


def random_unit_matrix(rng, d: int) -> np.ndarray:
    m = random_array(rng, (d, d))
    return m / np.linalg.norm(m)


def random_unitary(rng, d: int) -> np.ndarray:
    q, r = np.linalg.qr(random_array(rng, (d, d)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def symmetrize_pair(arr: np.ndarray, i: int, j: int) -> np.ndarray:
    """Average with the (i, j) slot swap (1-based); exact pair symmetry."""
    return (arr + np.swapaxes(arr, i - 1, j - 1)) / 2.0
