"""Exact truncated-Fock verification of photon-count expectations.

This module recomputes ``<O^dag O>`` by explicit matrix arithmetic on a
truncated Fock space, providing a check on the closed-form flux formula
that shares nothing with it beyond the field's coefficients.

The input state holds at most one photon per mode and the evaluated
operator is linear in ladder operators, so its image reaches at most two
photons per mode. Any cutoff of 3 or more therefore yields the
mathematically exact value, not an approximation; raising the cutoff
must not change the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .modes import LinearField, ModeId
from .photometry import QubitInput

__all__ = ["FockOperator", "ladder_matrix", "operator_matrix", "oracle_flux"]

# Dense operator matrices are quadratic in the tensor dimension; cap them
# at cutoff 3 x six modes. The flux path below never materializes one.
_DENSE_DIM_LIMIT = 4096
# State vectors are linear in the dimension; this admits cutoff 4 on
# eight modes with room to spare.
_VECTOR_CELL_LIMIT = 4_000_000


def ladder_matrix(cutoff: int) -> np.ndarray:
    """Annihilation matrix on span{|0>, ..., |cutoff>}: entries a[n-1, n] = sqrt(n)."""
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff!r}")
    return np.diag(np.sqrt(np.arange(1, cutoff + 1)), k=1).astype(complex)


@dataclass(frozen=True)
class FockOperator:
    """A field realized as a dense matrix on a truncated multimode Fock space."""

    support: tuple[ModeId, ...]
    cutoff: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        dim = (self.cutoff + 1) ** len(self.support)
        if self.matrix.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{len(self.support)} modes at cutoff {self.cutoff}"
            )


def operator_matrix(field: LinearField, cutoff: int) -> FockOperator:
    """Realize ``sum_k (u_k a_k + v_k a_k^dag)`` as a dense matrix.

    The tensor factors are the field's support modes in index order;
    each term acts as the ladder matrix on its own factor and as the
    identity elsewhere.
    """
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff!r}")
    support = field.support()
    dim = (cutoff + 1) ** len(support)
    if dim > _DENSE_DIM_LIMIT:
        raise ValueError(
            f"dense operator would need a {dim}x{dim} matrix "
            f"(limit {_DENSE_DIM_LIMIT}); reduce the support or the cutoff"
        )
    lower = ladder_matrix(cutoff)
    raiser = lower.conj().T
    eye = np.eye(cutoff + 1, dtype=complex)
    total = np.zeros((dim, dim), dtype=complex)
    for position, mode in enumerate(support):
        u, v = field.terms[mode.index]
        factors = [eye] * len(support)
        factors[position] = u * lower + v * raiser
        total += reduce(np.kron, factors, np.eye(1, dtype=complex))
    return FockOperator(support, cutoff, total)


def oracle_flux(field: LinearField, state: QubitInput, cutoff: int = 3) -> float:
    """Recompute ``photon_flux`` as ``<psi| M^dag M |psi>`` in Fock space.

    ``|psi>`` is the explicit state vector with amplitude ``x`` on the
    one-photon horizontal component and ``y`` on the vertical one. The
    operator is applied factor by factor, so only the state vector is
    ever materialized at full tensor dimension.
    """
    if cutoff < 3:
        raise ValueError(
            f"cutoff must be >= 3 to hold the two-photon image exactly, got {cutoff!r}"
        )
    sig_h, sig_v = field.registry.signal_pair()
    indices = sorted(set(field.terms) | {sig_h.index, sig_v.index})
    dim = cutoff + 1
    if dim ** len(indices) > _VECTOR_CELL_LIMIT:
        raise ValueError(
            f"state vector with {len(indices)} modes at cutoff {cutoff} exceeds "
            f"{_VECTOR_CELL_LIMIT} cells"
        )
    axis_of = {index: axis for axis, index in enumerate(indices)}

    psi = np.zeros((dim,) * len(indices), dtype=complex)
    component = [0] * len(indices)
    component[axis_of[sig_h.index]] = 1
    psi[tuple(component)] = state.x
    component[axis_of[sig_h.index]] = 0
    component[axis_of[sig_v.index]] = 1
    psi[tuple(component)] = state.y

    lower = ladder_matrix(cutoff)
    raiser = lower.conj().T
    image = np.zeros_like(psi)
    for index, (u, v) in field.terms.items():
        axis = axis_of[index]
        if u != 0:
            image = image + u * _apply_on_axis(lower, psi, axis)
        if v != 0:
            image = image + v * _apply_on_axis(raiser, psi, axis)
    return float(np.vdot(image, image).real)


def _apply_on_axis(matrix: np.ndarray, psi: np.ndarray, axis: int) -> np.ndarray:
    """Contract a single-mode matrix against one tensor axis of the state."""
    moved = np.tensordot(matrix, psi, axes=([1], [axis]))
    return np.moveaxis(moved, 0, axis)
