"""Dense n-fermion amplitude tensors and elementary operations on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .basis import BasisSpec
from .defaults import DEFAULT_TOL, INPUT_NORM_TOL
from .errors import (
    InvalidDensityError,
    NormalizationError,
    ShapeError,
    ZeroStateError,
)

# A density matrix is a plain D x D complex ndarray; validation happens in the
# operations that consume one.
DensityMatrix = np.ndarray


@dataclass(eq=False)
class NFermionTensor:
    """Dense complex amplitude tensor of an n-particle state.

    Amplitudes are indexed by n composite single-particle indices, each in
    [0, spec.D); storage is C-ordered with shape (D,) * n.
    """

    n: int
    spec: BasisSpec
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError(f"particle count must be >= 1, got n={self.n}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        expected = (self.spec.D,) * self.n
        if amps.shape != expected:
            raise ShapeError(f"amplitudes have shape {amps.shape}, expected {expected}")
        self.amplitudes = amps

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes.ravel()))

    def copy(self) -> "NFermionTensor":
        return NFermionTensor(self.n, self.spec, self.amplitudes.copy())


def basis_tensor(spec: BasisSpec, indices: Sequence[int]) -> NFermionTensor:
    """Unit tensor with a single amplitude 1 at the given composite indices."""
    idx = tuple(int(k) for k in indices)
    if any(not 0 <= k < spec.D for k in idx):
        raise IndexError(f"composite index out of range [0, {spec.D}) in {idx}")
    amps = np.zeros((spec.D,) * len(idx), dtype=np.complex128)
    amps[idx] = 1.0
    return NFermionTensor(len(idx), spec, amps)


def product_tensor(spec: BasisSpec, vectors: Sequence[np.ndarray]) -> NFermionTensor:
    """Outer product of single-particle vectors (each of length spec.D)."""
    vecs = [np.asarray(v, dtype=np.complex128).ravel() for v in vectors]
    if any(v.shape != (spec.D,) for v in vecs):
        raise ShapeError(f"every factor must have length {spec.D}")
    amps = reduce(np.multiply.outer, vecs)
    return NFermionTensor(len(vecs), spec, amps)


def inner_product(a: NFermionTensor, b: NFermionTensor) -> complex:
    """Hilbert-space inner product, conjugate-linear in the first argument."""
    if a.n != b.n or not a.spec.compatible(b.spec):
        raise ShapeError("operands must share particle count and basis dimensions")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def normalize(t: NFermionTensor, tol: float = DEFAULT_TOL) -> NFermionTensor:
    """Rescale to unit norm.

    A norm at or below `tol` raises ZeroStateError; this is the signal that an
    excluded (0/0) state was pushed through normalization.
    """
    nrm = t.norm()
    if nrm <= tol:
        raise ZeroStateError(f"cannot normalize a state of norm {nrm:.3e}")
    return NFermionTensor(t.n, t.spec, t.amplitudes / nrm)


def equal_up_to_phase(a: NFermionTensor, b: NFermionTensor, tol: float = DEFAULT_TOL) -> bool:
    """True when a = c * b for some unit complex c.

    The phase candidate is read off at b's largest-modulus amplitude, which is
    numerically stable and deterministic.
    """
    if a.n != b.n or not a.spec.compatible(b.spec):
        raise ShapeError("operands must share particle count and basis dimensions")
    norm_a = a.norm()
    if norm_a == 0.0 or b.norm() == 0.0:
        raise ZeroStateError("phase comparison needs nonzero states")
    av = a.amplitudes.ravel()
    bv = b.amplitudes.ravel()
    ref = int(np.argmax(np.abs(bv)))
    c = av[ref] / bv[ref]
    if abs(c) == 0.0:
        return False
    c /= abs(c)
    return float(np.linalg.norm(av - c * bv)) <= tol * norm_a


def partial_trace(t: NFermionTensor, keep: int) -> DensityMatrix:
    """Reduced density matrix of one particle of a normalized two-particle state.

    `keep` selects the subsystem (1 or 2); the other is traced out.
    """
    if t.n != 2:
        raise ShapeError(f"partial trace is defined for n=2 states, got n={t.n}")
    if abs(t.norm() - 1.0) > INPUT_NORM_TOL:
        raise NormalizationError(f"state norm {t.norm():.12g} is not 1")
    a = t.amplitudes
    if keep == 1:
        return a @ a.conj().T
    if keep == 2:
        return a.T @ a.conj()
    raise ValueError(f"keep must be 1 or 2, got {keep}")


def purity(rho: DensityMatrix, tol: float = DEFAULT_TOL) -> float:
    """Trace of rho squared; 1 for pure states, below 1 for improper mixtures."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidDensityError(f"density matrix must be square, got shape {rho.shape}")
    scale = max(1.0, float(np.linalg.norm(rho)))
    if float(np.linalg.norm(rho - rho.conj().T)) > tol * scale:
        raise InvalidDensityError("matrix is not Hermitian within tolerance")
    return float(np.trace(rho @ rho).real)
