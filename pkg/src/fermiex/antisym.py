"""Antisymmetrization, permutation-symmetry predicates, excluded-state detection.

The antisymmetrizer is the signed average over all n! slot permutations, an
orthogonal projector onto the totally antisymmetric subspace.  A nonzero
tensor whose projection vanishes is *excluded*: its normalized form
degenerates to 0/0 and no physical fermion state can be prepared from it.
Symmetry of the tensor in any single slot pair is a sufficient condition for
exclusion; for product tensors it reduces to two equal single-particle
factors, which is the textbook exclusion principle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ._backend import signed_permutation_sum
from .defaults import DEFAULT_TOL
from .errors import ShapeError, ZeroStateError
from .states import NFermionTensor

CONDITION_NONE = "none"
CONDITION_GENERIC_VANISHING = "generic-vanishing"
CONDITION_PAULI_EQUAL_STATES = "pauli-equal-states"
CONDITION_SYMMETRIC_SPATIAL = "symmetric-spatial"
CONDITION_ANTISYMMETRIC_SPATIAL = "antisymmetric-spatial"
CONDITION_PARALLEL_SPINS = "parallel-spins"


def pair_symmetry_condition(i: int, j: int) -> str:
    return f"pair-symmetry({i},{j})"


@dataclass(frozen=True)
class ExclusionVerdict:
    """Outcome of the 0/0 test.

    `norm_ratio` is the norm of the antisymmetrized tensor over the norm of
    the input; `excluded` holds exactly when the ratio is at or below the
    tolerance of the test, and `condition` names the triggering clause.
    """

    excluded: bool
    norm_ratio: float
    condition: str


def _nonzero_norm(a: np.ndarray) -> float:
    nrm = float(np.linalg.norm(a.ravel()))
    if nrm == 0.0:
        raise ZeroStateError("operation requires a nonzero tensor")
    return nrm


def _swap_array(a: np.ndarray, i: int, j: int) -> np.ndarray:
    n = a.ndim
    if not 1 <= i < j <= n:
        raise IndexError(f"need slots 1 <= i < j <= {n}, got ({i},{j})")
    return np.swapaxes(a, i - 1, j - 1)


def _pair_symmetric_array(a: np.ndarray, i: int, j: int, tol: float) -> bool:
    nrm = _nonzero_norm(a)
    return float(np.linalg.norm((_swap_array(a, i, j) - a).ravel())) <= tol * nrm


def _symmetric_pairs_array(a: np.ndarray, tol: float) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i, j in combinations(range(1, a.ndim + 1), 2)
        if _pair_symmetric_array(a, i, j, tol)
    ]


def _antisymmetrize_array(a: np.ndarray) -> np.ndarray:
    if a.ndim < 2:
        raise ShapeError("antisymmetrization needs at least two particles")
    return signed_permutation_sum(np.asarray(a, dtype=np.complex128))


def _exclusion_ratio_array(a: np.ndarray) -> float:
    nrm = _nonzero_norm(a)
    return float(np.linalg.norm(_antisymmetrize_array(a).ravel())) / nrm


def swap_pair(t: NFermionTensor, i: int, j: int) -> NFermionTensor:
    """Exchange the amplitudes of particle slots i and j (1-based, i < j)."""
    return NFermionTensor(t.n, t.spec, _swap_array(t.amplitudes, i, j).copy())


def antisymmetrize(chi: NFermionTensor) -> NFermionTensor:
    """Project onto the totally antisymmetric subspace.

    Returns the unnormalized projection (1/n!) * sum of signed permutations;
    its norm can be anything from 0 up to the norm of the input.
    """
    return NFermionTensor(chi.n, chi.spec, _antisymmetrize_array(chi.amplitudes))


def exchange_antisymmetry_check(phi: NFermionTensor, tol: float = DEFAULT_TOL) -> bool:
    """True when every slot swap flips the sign of the state."""
    a = phi.amplitudes
    nrm = _nonzero_norm(a)
    return all(
        float(np.linalg.norm((_swap_array(a, i, j) + a).ravel())) <= tol * nrm
        for i, j in combinations(range(1, phi.n + 1), 2)
    )


def pair_symmetric(chi: NFermionTensor, i: int, j: int, tol: float = DEFAULT_TOL) -> bool:
    """True when the tensor is invariant under exchanging slots i and j."""
    return _pair_symmetric_array(chi.amplitudes, i, j, tol)


def symmetric_pairs(chi: NFermionTensor, tol: float = DEFAULT_TOL) -> list[tuple[int, int]]:
    """All slot pairs (i, j), 1-based, under which the tensor is symmetric."""
    return _symmetric_pairs_array(chi.amplitudes, tol)


def is_excluded(chi: NFermionTensor, tol: float = DEFAULT_TOL) -> ExclusionVerdict:
    """Detect the 0/0 degeneracy of a pre-antisymmetrization tensor.

    The verdict is excluded when the antisymmetrized norm ratio falls at or
    below `tol`.  Pair symmetry is reported as the condition when some slot
    pair exhibits it (the sufficient clause); any other vanishing is tagged
    generic-vanishing.
    """
    a = chi.amplitudes
    ratio = _exclusion_ratio_array(a)
    excluded = ratio <= tol
    pairs = _symmetric_pairs_array(a, tol)
    if pairs:
        condition = pair_symmetry_condition(*pairs[0])
    elif excluded:
        condition = CONDITION_GENERIC_VANISHING
    else:
        condition = CONDITION_NONE
    return ExclusionVerdict(excluded=excluded, norm_ratio=ratio, condition=condition)
