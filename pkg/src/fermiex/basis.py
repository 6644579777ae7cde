"""Single-particle basis bookkeeping: spatial modes times spin, composite indexing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .defaults import INPUT_NORM_TOL
from .errors import LabelError

ModeLabel = tuple[int, int, int]


@dataclass(frozen=True)
class BasisSpec:
    """Finite single-particle basis: `d` spatial modes times an `S`-dimensional spin.

    Optional physical labels: one (n, l, ml) integer triple per spatial mode
    and one rational ms value per spin component.
    """

    d: int
    S: int = 2
    mode_labels: tuple[ModeLabel, ...] | None = None
    spin_labels: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"need at least one spatial mode, got d={self.d}")
        if self.S < 1:
            raise ValueError(f"need at least one spin component, got S={self.S}")
        if self.mode_labels is not None:
            labels = tuple(tuple(int(v) for v in lab) for lab in self.mode_labels)
            if len(labels) != self.d or any(len(lab) != 3 for lab in labels):
                raise ValueError(f"mode_labels must be {self.d} (n, l, ml) triples")
            object.__setattr__(self, "mode_labels", labels)
        if self.spin_labels is not None:
            labels = tuple(Fraction(v) for v in self.spin_labels)
            if len(labels) != self.S:
                raise ValueError(f"spin_labels must have {self.S} entries")
            object.__setattr__(self, "spin_labels", labels)

    @property
    def D(self) -> int:
        """Composite single-particle dimension."""
        return self.d * self.S

    def compatible(self, other: "BasisSpec") -> bool:
        """Same algebraic dimensions; labels are ignored."""
        return self.d == other.d and self.S == other.S


def composite_index(x: int, sigma: int, spec: BasisSpec) -> int:
    """Composite index of spatial mode `x` with spin component `sigma` (spatial-major)."""
    if not 0 <= x < spec.d:
        raise IndexError(f"mode index {x} out of range [0, {spec.d})")
    if not 0 <= sigma < spec.S:
        raise IndexError(f"spin index {sigma} out of range [0, {spec.S})")
    return x * spec.S + sigma


def composite_pair(k: int, spec: BasisSpec) -> tuple[int, int]:
    """Inverse of :func:`composite_index`."""
    if not 0 <= k < spec.D:
        raise IndexError(f"composite index {k} out of range [0, {spec.D})")
    return divmod(k, spec.S)


def basis_index_of(vec: np.ndarray, tol: float = INPUT_NORM_TOL) -> int:
    """Index of the basis state equal to `vec` up to a global phase.

    Raises LabelError when `vec` is a genuine superposition or not unit length.
    """
    v = np.asarray(vec, dtype=np.complex128).ravel()
    idx = int(np.argmax(np.abs(v)))
    off = v.copy()
    off[idx] = 0.0
    if np.linalg.norm(off) > tol or abs(abs(v[idx]) - 1.0) > tol:
        raise LabelError("vector is not a basis state up to phase")
    return idx
