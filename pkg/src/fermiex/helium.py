"""Two-fermion states assembled from a spatial matrix and spin vectors.

Three constructions pair a (anti)symmetrized spatial matrix M with a spin
factor of the opposite symmetry, so the composite state is always totally
antisymmetric:

    plus   (M[x,y] + M[y,x]) * (s[a] s2[b] - s2[a] s[b])    para type
    minus  (M[x,y] - M[y,x]) * (s[a] s2[b] + s2[a] s[b])    ortho type
    star   (M[x,y] - M[y,x]) * s[a] s[b]                    ortho type, aligned spins

Each variant degenerates to the undetermined 0/0 form under a condition on a
single factor: a symmetric M kills minus and star, an antisymmetric M or
parallel spins kill plus.  The builders detect these conditions up front and
raise ExcludedStateError instead of dividing by a vanishing normalizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .antisym import (
    CONDITION_ANTISYMMETRIC_SPATIAL,
    CONDITION_NONE,
    CONDITION_PARALLEL_SPINS,
    CONDITION_PAULI_EQUAL_STATES,
    CONDITION_SYMMETRIC_SPATIAL,
    ExclusionVerdict,
    _antisymmetrize_array,
)
from .basis import BasisSpec
from .defaults import DEFAULT_RANK_TOL, DEFAULT_TOL, INPUT_NORM_TOL
from .errors import (
    ExcludedStateError,
    NormalizationError,
    NotAntisymmetricError,
    ShapeError,
)
from .states import NFermionTensor


# A spatial matrix is a plain d x d complex ndarray M with M[x, y] the
# two-particle amplitude on modes (x, y); a spin vector is a length-S complex
# ndarray.  Both must be unit-normalized where a contract says so.
SpatialMatrix = np.ndarray
SpinVector = np.ndarray


class HeliumVariant(Enum):
    """The three spatial/spin symmetry pairings."""

    PLUS = "plus"
    MINUS = "minus"
    STAR = "star"


VariantLike = Union[HeliumVariant, str]


@dataclass(eq=False)
class TwoFermionState:
    """A normalized antisymmetric two-fermion state plus its provenance."""

    tensor: NFermionTensor
    variant: HeliumVariant | None
    norm_constant: float
    provenance: dict


@dataclass(frozen=True)
class SlaterReport:
    """Slater-rank classification of an antisymmetric two-fermion state.

    The singular values of the reshaped D x D amplitude matrix pair up; half
    the matrix rank is the number of elementary antisymmetrized products
    needed, and the state is entangled exactly when that number exceeds 1.
    """

    slater_rank: int
    singular_values: tuple[float, ...]
    entangled: bool


def _as_variant(variant: VariantLike) -> HeliumVariant:
    if isinstance(variant, HeliumVariant):
        return variant
    try:
        return HeliumVariant(str(variant).lower())
    except ValueError:
        raise ValueError(f"unknown variant {variant!r}; expected plus, minus or star") from None


def _checked_matrix(M, normalize_input: bool) -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"spatial matrix must be square, got shape {M.shape}")
    nrm = float(np.linalg.norm(M))
    if normalize_input:
        if nrm == 0.0:
            raise NormalizationError("cannot renormalize a zero matrix")
        return M / nrm
    if abs(nrm - 1.0) > INPUT_NORM_TOL:
        raise NormalizationError(f"spatial matrix Frobenius norm {nrm:.12g} is not 1")
    return M


def _checked_vector(v, normalize_input: bool, what: str) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128).ravel()
    nrm = float(np.linalg.norm(v))
    if normalize_input:
        if nrm == 0.0:
            raise NormalizationError(f"cannot renormalize a zero {what} vector")
        return v / nrm
    if abs(nrm - 1.0) > INPUT_NORM_TOL:
        raise NormalizationError(f"{what} vector norm {nrm:.12g} is not 1")
    return v


def overlap_kernel(M) -> complex:
    """Overlap of the spatial matrix with its argument-swapped self.

    K = sum over x, y of conj(M[x,y]) * M[y,x].  |K| <= 1 for a normalized M,
    with K = +1 exactly for symmetric and K = -1 for antisymmetric matrices.
    """
    M = _checked_matrix(M, normalize_input=False)
    return complex(np.vdot(M, M.T))


def _spin_factor(variant: HeliumVariant, s: np.ndarray, s2: np.ndarray | None) -> np.ndarray:
    if variant is HeliumVariant.STAR:
        return np.outer(s, s)
    assert s2 is not None
    if variant is HeliumVariant.PLUS:
        return np.outer(s, s2) - np.outer(s2, s)
    return np.outer(s, s2) + np.outer(s2, s)


def _spatial_factor(variant: HeliumVariant, M: np.ndarray) -> np.ndarray:
    if variant is HeliumVariant.PLUS:
        return M + M.T
    return M - M.T


def normalization(
    variant: VariantLike,
    M,
    s,
    s2=None,
    tol: float = DEFAULT_TOL,
) -> float:
    """Closed-form norm constant of the chosen variant.

    plus/minus: (4 (1 +- Re K)(1 -+ |<s|s2>|^2))^(-1/2); star: (2 (1 - Re K))^(-1/2).
    Raises ExcludedStateError when the radicand vanishes (within `tol`), which
    is exactly the 0/0 degeneracy of the corresponding state.
    """
    variant = _as_variant(variant)
    M = _checked_matrix(M, normalize_input=False)
    s = _checked_vector(s, False, "spin")
    K = complex(np.vdot(M, M.T))

    if variant is HeliumVariant.STAR:
        radicand = 2.0 * (1.0 - K.real)
        if radicand <= tol:
            raise ExcludedStateError(
                "star state is undefined for a symmetric spatial matrix",
                CONDITION_SYMMETRIC_SPATIAL,
            )
        return 1.0 / math.sqrt(radicand)

    if s2 is None:
        raise ValueError(f"variant {variant.value} needs a second spin vector")
    s2 = _checked_vector(s2, False, "spin")
    spin_overlap_sq = abs(np.vdot(s, s2)) ** 2
    if variant is HeliumVariant.PLUS:
        f_spatial, spatial_cond = 1.0 + K.real, CONDITION_ANTISYMMETRIC_SPATIAL
        f_spin, spin_cond = 1.0 - spin_overlap_sq, CONDITION_PARALLEL_SPINS
    else:
        f_spatial, spatial_cond = 1.0 - K.real, CONDITION_SYMMETRIC_SPATIAL
        f_spin, spin_cond = 1.0 + spin_overlap_sq, CONDITION_PARALLEL_SPINS
    radicand = 4.0 * f_spatial * f_spin
    if radicand <= tol:
        condition = spatial_cond if f_spatial <= f_spin else spin_cond
        raise ExcludedStateError(
            f"{variant.value} state is undefined: vanishing {condition} factor",
            condition,
        )
    return 1.0 / math.sqrt(radicand)


def build_state(
    variant: VariantLike,
    M,
    s,
    s2=None,
    *,
    tol: float = DEFAULT_TOL,
    normalize_inputs: bool = False,
) -> TwoFermionState:
    """Assemble the normalized two-fermion state of the chosen variant.

    The exclusion conditions are tested before any division, so the builder
    either returns a unit-norm antisymmetric state or raises
    ExcludedStateError; it never emits non-finite amplitudes.
    """
    variant = _as_variant(variant)
    M = _checked_matrix(M, normalize_inputs)
    s = _checked_vector(s, normalize_inputs, "spin")
    if variant is not HeliumVariant.STAR:
        if s2 is None:
            raise ValueError(f"variant {variant.value} needs a second spin vector")
        s2 = _checked_vector(s2, normalize_inputs, "spin")
    elif s2 is not None:
        s2 = _checked_vector(s2, normalize_inputs, "spin")

    constant = normalization(variant, M, s, s2, tol=tol)
    amps = constant * np.kron(_spatial_factor(variant, M), _spin_factor(variant, s, s2))
    spec = BasisSpec(d=M.shape[0], S=len(s))
    tensor = NFermionTensor(2, spec, amps)
    provenance = {
        "matrix": M.copy(),
        "spin": s.copy(),
        "spin2": None if s2 is None else s2.copy(),
    }
    return TwoFermionState(tensor=tensor, variant=variant, norm_constant=constant, provenance=provenance)


def pauli_pair(
    psi,
    phi,
    spec: BasisSpec | None = None,
    tol: float = DEFAULT_TOL,
    *,
    normalize_inputs: bool = False,
) -> TwoFermionState:
    """Normalized antisymmetrized pair of two single-particle vectors.

    Returns (|psi>|phi> - |phi>|psi>) / sqrt(2 - 2 |<psi|phi>|^2).  Equal
    vectors (up to phase) make numerator and denominator vanish together, the
    textbook exclusion case, and raise ExcludedStateError.
    """
    psi = _checked_vector(psi, normalize_inputs, "psi")
    phi = _checked_vector(phi, normalize_inputs, "phi")
    if psi.shape != phi.shape:
        raise ShapeError("both vectors must have the same length")
    if spec is None:
        spec = BasisSpec(d=len(psi), S=1)
    elif spec.D != len(psi):
        raise ShapeError(f"vectors of length {len(psi)} do not fit a basis with D={spec.D}")

    overlap = complex(np.vdot(psi, phi))
    if abs(overlap) >= 1.0 - tol:
        raise ExcludedStateError(
            "equal single-particle states admit no antisymmetrized pair",
            CONDITION_PAULI_EQUAL_STATES,
        )
    denom = math.sqrt(2.0 - 2.0 * abs(overlap) ** 2)
    amps = (np.outer(psi, phi) - np.outer(phi, psi)) / denom
    tensor = NFermionTensor(2, spec, amps)
    return TwoFermionState(
        tensor=tensor,
        variant=None,
        norm_constant=1.0 / denom,
        provenance={"psi": psi.copy(), "phi": phi.copy()},
    )


def _prestate_ratio(M: np.ndarray, spin_part: np.ndarray) -> float:
    """Generic 0/0 detector applied to the raw (pre-antisymmetrization) product.

    A pre-state that is identically zero (exactly parallel spins in the plus
    variant) is the degenerate 0/0 itself and reports ratio 0.
    """
    pre = np.kron(M, spin_part)
    nrm = float(np.linalg.norm(pre))
    if nrm == 0.0:
        return 0.0
    return float(np.linalg.norm(_antisymmetrize_array(pre))) / nrm


def exclusion_catalog(M, s, s2, tol: float = DEFAULT_TOL) -> dict[HeliumVariant, ExclusionVerdict]:
    """Closed-form exclusion verdicts for all three variants.

    minus/star are excluded exactly when M is symmetric; plus when M is
    antisymmetric or the spins are parallel.  Each verdict carries the
    norm ratio of the generic detector run on the variant's pre-state, so the
    two routes can be cross-checked.
    """
    M = _checked_matrix(M, normalize_input=False)
    s = _checked_vector(s, False, "spin")
    s2 = _checked_vector(s2, False, "spin")
    scale = float(np.linalg.norm(M))
    sym_defect = float(np.linalg.norm(M - M.T))
    anti_defect = float(np.linalg.norm(M + M.T))
    spins_parallel = abs(np.vdot(s, s2)) >= 1.0 - tol

    catalog: dict[HeliumVariant, ExclusionVerdict] = {}
    for variant in (HeliumVariant.PLUS, HeliumVariant.MINUS, HeliumVariant.STAR):
        if variant is HeliumVariant.PLUS:
            if anti_defect <= tol * scale:
                excluded, condition = True, CONDITION_ANTISYMMETRIC_SPATIAL
            elif spins_parallel:
                excluded, condition = True, CONDITION_PARALLEL_SPINS
            else:
                excluded, condition = False, CONDITION_NONE
        else:
            if sym_defect <= tol * scale:
                excluded, condition = True, CONDITION_SYMMETRIC_SPATIAL
            else:
                excluded, condition = False, CONDITION_NONE
        ratio = _prestate_ratio(M, _spin_factor(variant, s, s2))
        catalog[variant] = ExclusionVerdict(excluded=excluded, norm_ratio=ratio, condition=condition)
    return catalog


def slater_report(
    state: TwoFermionState | NFermionTensor,
    rank_tol: float = DEFAULT_RANK_TOL,
    tol: float = DEFAULT_TOL,
) -> SlaterReport:
    """Classify identical-fermion entanglement by Slater rank.

    Reshapes the normalized two-fermion amplitudes to a D x D matrix, checks
    antisymmetry, and counts singular values above rank_tol times the largest.
    Rank 1 means the state is a single antisymmetrized product and carries a
    complete set of single-particle properties; rank >= 2 means entangled.
    """
    t = state.tensor if isinstance(state, TwoFermionState) else state
    if t.n != 2:
        raise ShapeError(f"Slater classification is defined for n=2, got n={t.n}")
    a = t.amplitudes
    scale = float(np.linalg.norm(a))
    if abs(scale - 1.0) > INPUT_NORM_TOL:
        raise NormalizationError(f"state norm {scale:.12g} is not 1")
    if float(np.linalg.norm(a + a.T)) > tol * scale:
        raise NotAntisymmetricError("amplitude matrix is not antisymmetric")
    svals = np.linalg.svd(a, compute_uv=False)
    rank = int(np.count_nonzero(svals > rank_tol * svals[0]))
    slater_rank = rank // 2
    return SlaterReport(
        slater_rank=slater_rank,
        singular_values=tuple(float(v) for v in svals),
        entangled=slater_rank >= 2,
    )
