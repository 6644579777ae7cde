"""Weak-entanglement tooling: Schmidt analysis of the spatial matrix, rank-1
truncation, joint quantum-number attribution, and the exclusion verdict for
aligned-spin product states.

When the second singular value of the spatial matrix is small, replacing the
matrix by its leading rank-1 term turns the state into an antisymmetrized
product.  Spatial and spin labels then attach to the pair as a whole: the set
records which two mode labels and which two spin projections occur, but
deliberately not which mode goes with which spin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .antisym import (
    CONDITION_NONE,
    CONDITION_PAULI_EQUAL_STATES,
    ExclusionVerdict,
    _antisymmetrize_array,
)
from .basis import BasisSpec, ModeLabel, basis_index_of
from .defaults import DEFAULT_RANK_TOL, DEFAULT_TOL, INPUT_NORM_TOL
from .errors import ConfigError, NormalizationError, ShapeError, ZeroStateError
from .helium import HeliumVariant, VariantLike, _as_variant, _checked_vector


@dataclass(frozen=True)
class SchmidtReport:
    """Singular spectrum of a spatial matrix.

    `strength` is the ratio of the second singular value to the first; it
    quantifies how far the matrix is from a product (0 = exactly rank 1).
    """

    singular_values: tuple[float, ...]
    schmidt_rank: int
    strength: float


@dataclass(frozen=True)
class QuantumNumberSet:
    """Joint quantum numbers of a two-fermion state.

    Two unordered pairs: spatial (n, l, ml) triples and spin projections.
    The pairs belong to the state as a whole; the type stores no pairing
    between a spatial label and a spin label on purpose.
    """

    spatial_labels: tuple[ModeLabel, ModeLabel]
    spin_labels: tuple[Fraction, Fraction]
    joint: bool = True


def _checked_spatial_matrix(M) -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"spatial matrix must be square, got shape {M.shape}")
    nrm = float(np.linalg.norm(M))
    if nrm == 0.0:
        raise ZeroStateError("spatial matrix is zero")
    if abs(nrm - 1.0) > INPUT_NORM_TOL:
        raise NormalizationError(f"spatial matrix Frobenius norm {nrm:.12g} is not 1")
    return M


def schmidt(M, rank_tol: float = DEFAULT_RANK_TOL) -> tuple[SchmidtReport, np.ndarray, np.ndarray]:
    """Schmidt decomposition M[x,y] = sum_i lambda_i left[i][x] right[i][y].

    Returns the report plus two arrays whose rows are the orthonormal factor
    vectors, ordered by nonincreasing singular value.
    """
    M = _checked_spatial_matrix(M)
    u, svals, vh = np.linalg.svd(M)
    rank = int(np.count_nonzero(svals > rank_tol * svals[0]))
    strength = float(svals[1] / svals[0]) if len(svals) > 1 else 0.0
    report = SchmidtReport(
        singular_values=tuple(float(v) for v in svals),
        schmidt_rank=rank,
        strength=strength,
    )
    return report, np.ascontiguousarray(u.T), np.ascontiguousarray(vh)


def _fix_phase(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate a global phase so the first non-negligible component is real positive."""
    idx = int(np.flatnonzero(np.abs(v) > tol)[0])
    return v * (abs(v[idx]) / v[idx])


def rank1_truncate(M) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """Leading Schmidt term of the spatial matrix.

    Returns (psi, phi, truncated, discarded_weight): the two unit factor
    vectors with a deterministic phase convention, the renormalized rank-1
    matrix psi x phi, and the squared weight 1 - lambda_1^2 that was dropped.
    Degenerate leading singular values resolve to the first factor pair of
    the deterministic spectrum ordering.
    """
    report, left, right = schmidt(M)
    psi = _fix_phase(left[0])
    phi = _fix_phase(right[0])
    truncated = np.outer(psi, phi)
    discarded = max(0.0, 1.0 - report.singular_values[0] ** 2)
    return psi, phi, truncated, discarded


def quantum_number_set(
    variant: VariantLike,
    psi_mode: int,
    phi_mode: int,
    s,
    s2,
    spec: BasisSpec,
) -> QuantumNumberSet:
    """Attribute the joint label set of a weakly entangled two-fermion state.

    Requires a fully labeled basis and spin vectors that are basis states up
    to phase; superposed spins carry no sharp projection and raise LabelError.
    For the star variant both particles share the first spin vector.
    """
    variant = _as_variant(variant)
    if spec.mode_labels is None or spec.spin_labels is None:
        raise ConfigError("basis carries no mode/spin labels")
    for mode in (psi_mode, phi_mode):
        if not 0 <= mode < spec.d:
            raise IndexError(f"mode index {mode} out of range [0, {spec.d})")
    sigma1 = basis_index_of(np.asarray(s))
    if variant is HeliumVariant.STAR:
        sigma2 = sigma1
    else:
        if s2 is None:
            raise ValueError(f"variant {variant.value} needs a second spin vector")
        sigma2 = basis_index_of(np.asarray(s2))
    spatial = tuple(sorted((spec.mode_labels[psi_mode], spec.mode_labels[phi_mode])))
    spins = tuple(sorted((spec.spin_labels[sigma1], spec.spin_labels[sigma2])))
    return QuantumNumberSet(spatial_labels=spatial, spin_labels=spins)


def pauli_verdict_star(
    psi_mode_vector,
    phi_mode_vector,
    s,
    tol: float = DEFAULT_TOL,
) -> ExclusionVerdict:
    """Exclusion verdict for an aligned-spin product state.

    The spins coincide by construction, so the state is excluded exactly when
    the two spatial vectors agree up to phase, i.e. all quantum numbers are
    equal.  The verdict's norm ratio comes from the generic detector applied
    to the assembled pre-state, giving an independent cross-check.
    """
    psi = _checked_vector(psi_mode_vector, False, "psi")
    phi = _checked_vector(phi_mode_vector, False, "phi")
    if psi.shape != phi.shape:
        raise ShapeError("both mode vectors must have the same length")
    s = _checked_vector(s, False, "spin")

    excluded = abs(np.vdot(psi, phi)) >= 1.0 - tol
    pre = np.kron(np.outer(psi, phi), np.outer(s, s))
    ratio = float(np.linalg.norm(_antisymmetrize_array(pre))) / float(np.linalg.norm(pre))
    return ExclusionVerdict(
        excluded=excluded,
        norm_ratio=ratio,
        condition=CONDITION_PAULI_EQUAL_STATES if excluded else CONDITION_NONE,
    )
