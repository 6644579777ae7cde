"""Factored spatial/spin construction for n fermions.

When the state splits into a spatial part times a spin part, total
antisymmetry can be carried by the spatial part alone provided the spin part
is fully symmetric.  Exclusion then becomes a condition on the spatial
factor only: symmetry of the raw spatial tensor in any mode pair kills the
antisymmetrized state, with no reference to the spins at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

import numpy as np

from .antisym import (
    CONDITION_SYMMETRIC_SPATIAL,
    _antisymmetrize_array,
    _nonzero_norm,
    _symmetric_pairs_array,
)
from .basis import BasisSpec
from .defaults import DEFAULT_TOL
from .errors import ExcludedStateError, ShapeError, SymmetryError
from .states import NFermionTensor


@dataclass(eq=False)
class SpatialTensor:
    """Dense complex amplitudes over n spatial mode indices only."""

    n: int
    d: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.d,) * self.n:
            raise ShapeError(f"amplitudes have shape {amps.shape}, expected {(self.d,) * self.n}")
        self.amplitudes = amps

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes.ravel()))


@dataclass(eq=False)
class SpinTensor:
    """Dense complex amplitudes over n spin indices only."""

    n: int
    S: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.S,) * self.n:
            raise ShapeError(f"amplitudes have shape {amps.shape}, expected {(self.S,) * self.n}")
        self.amplitudes = amps

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes.ravel()))


def antisymmetrize_spatial(xi: SpatialTensor) -> SpatialTensor:
    """Signed permutation average over the mode indices only."""
    if xi.n < 2:
        raise ShapeError("spatial antisymmetrization needs at least two particles")
    return SpatialTensor(xi.n, xi.d, _antisymmetrize_array(xi.amplitudes))


def is_fully_symmetric(upsilon: SpinTensor, tol: float = DEFAULT_TOL) -> bool:
    """True when the spin tensor is invariant under every pair swap.

    Pair swaps generate the whole permutation group, so checking pairs
    suffices.
    """
    a = upsilon.amplitudes
    nrm = _nonzero_norm(a)
    if upsilon.n < 2:
        return True
    return all(
        float(np.linalg.norm((np.swapaxes(a, i, j) - a).ravel())) <= tol * nrm
        for i in range(upsilon.n)
        for j in range(i + 1, upsilon.n)
    )


def build_factored(xi: SpatialTensor, upsilon: SpinTensor, tol: float = DEFAULT_TOL) -> NFermionTensor:
    """Normalized composite state (antisymmetrized xi) x upsilon.

    Requires a fully symmetric spin tensor, otherwise the assembly would not
    be totally antisymmetric.  Vanishing of the antisymmetrized spatial part
    raises ExcludedStateError with the symmetric-spatial condition.
    """
    if xi.n != upsilon.n:
        raise ShapeError(f"particle counts differ: {xi.n} vs {upsilon.n}")
    xi_norm = _nonzero_norm(xi.amplitudes)
    if not is_fully_symmetric(upsilon, tol):
        raise SymmetryError("spin tensor must be fully symmetric")

    spatial = _antisymmetrize_array(xi.amplitudes)
    if float(np.linalg.norm(spatial.ravel())) <= tol * xi_norm:
        raise ExcludedStateError(
            "antisymmetrized spatial part vanishes",
            CONDITION_SYMMETRIC_SPATIAL,
        )

    n = xi.n
    outer = np.multiply.outer(spatial, upsilon.amplitudes)
    # interleave (x1..xn, s1..sn) -> (x1, s1, ..., xn, sn)
    axes = list(chain.from_iterable((m, n + m) for m in range(n)))
    spec = BasisSpec(d=xi.d, S=upsilon.S)
    amps = outer.transpose(axes).reshape((spec.D,) * n)
    amps = amps / np.linalg.norm(amps.ravel())
    return NFermionTensor(n, spec, amps)


def spatial_exclusion_scan(xi: SpatialTensor, tol: float = DEFAULT_TOL) -> list[tuple[int, int]]:
    """All mode-index pairs (1-based) under which the spatial tensor is symmetric.

    A nonempty result means the factored construction is excluded.
    """
    return _symmetric_pairs_array(xi.amplitudes, tol)
