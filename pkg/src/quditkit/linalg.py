"""Dense complex linear algebra kernel shared by the operator modules.

Matrices are plain square numpy arrays with dtype ``complex128``.  The
helpers here validate shapes and finiteness once, so the higher-level
modules can assume well-formed input.  Every function is pure; nothing
mutates its arguments.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

import numpy as np
import scipy.linalg

__all__ = [
    "as_matrix",
    "max_abs",
    "mat_mul",
    "commutator",
    "tensor_product",
    "dagger",
    "hs_inner",
    "hs_norm",
    "matrix_exp",
    "ExtendResult",
    "orthonormal_extend",
]

# Normality detection threshold for the eigendecomposition path of matrix_exp.
_NORMALITY_TOL = 1e-12
# Term cap for the scaling-and-squaring series fallback.
_SERIES_MAX_TERMS = 64


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce ``a`` to a square complex matrix, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def max_abs(a) -> float:
    """Largest entry magnitude, the norm used for all residual reporting."""
    return float(np.max(np.abs(a)))


def mat_mul(a, b) -> np.ndarray:
    """Product of two square matrices of equal dimension."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ b - b @ a`` without revalidation; callers pass conforming arrays."""
    return a @ b - b @ a


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product with ``a`` supplying the most significant indices."""
    return np.kron(as_matrix(a, "a"), as_matrix(b, "b"))


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def _resolve_normalizer(dim: int, normalizer: Optional[float]) -> float:
    if normalizer is None:
        return float(dim)
    normalizer = float(normalizer)
    if normalizer <= 0:
        raise ValueError(f"normalizer must be positive, got {normalizer}")
    return normalizer


def hs_inner(a, b, normalizer: Optional[float] = None) -> complex:
    """Trace inner product ``Tr(a @ b†) / normalizer``.

    The default normalizer is the matrix dimension, which makes the
    shift/clock monomial basis orthonormal.  Pass ``normalizer=1.0`` for the
    raw Frobenius pairing used by the closure engine.
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    norm = _resolve_normalizer(a.shape[0], normalizer)
    # Tr(a b†) == sum_ij a_ij conj(b_ij)
    return complex(np.vdot(b.ravel(), a.ravel())) / norm


def hs_norm(a, normalizer: Optional[float] = None) -> float:
    """Norm induced by :func:`hs_inner`."""
    a = as_matrix(a)
    norm = _resolve_normalizer(a.shape[0], normalizer)
    return float(np.linalg.norm(a.ravel())) / np.sqrt(norm)


def matrix_exp(a) -> np.ndarray:
    """Matrix exponential.

    Normal inputs (detected through the commutation defect of ``a`` with its
    adjoint) are exponentiated through a unitary Schur diagonalization, which
    keeps unitaries exactly unitary to rounding.  Anything else falls back to
    scaling-and-squaring on the truncated power series.
    """
    m = as_matrix(a)
    mh = m.conj().T
    if max_abs(m @ mh - mh @ m) <= _NORMALITY_TOL:
        t, z = scipy.linalg.schur(m, output="complex")
        return (z * np.exp(np.diagonal(t))) @ z.conj().T
    return _exp_series(m)


def _exp_series(m: np.ndarray) -> np.ndarray:
    scale = max_abs(m)
    squarings = 0
    if scale > 0.5:
        squarings = int(np.ceil(np.log2(scale / 0.5)))
        m = m / (2.0 ** squarings)
    eye = np.eye(m.shape[0], dtype=complex)
    total = eye.copy()
    term = eye
    for k in range(1, _SERIES_MAX_TERMS + 1):
        term = term @ m / k
        total = total + term
        if max_abs(term) <= 1e-17 * max(1.0, max_abs(total)):
            break
    else:
        raise RuntimeError(
            f"matrix exponential series did not converge within {_SERIES_MAX_TERMS} terms"
        )
    for _ in range(squarings):
        total = total @ total
    return total


class ExtendResult(NamedTuple):
    """Outcome of one orthonormalization step; rejection is a normal result."""

    accepted: bool
    residual_norm: float
    new_element: Optional[np.ndarray]


def orthonormal_extend(
    basis: Sequence[np.ndarray],
    candidate,
    tol: float = 1e-9,
    normalizer: Optional[float] = None,
) -> ExtendResult:
    """Try to grow an orthonormal set by one element.

    The candidate is projected onto the orthogonal complement of
    ``span(basis)`` with modified Gram-Schmidt plus one re-orthogonalization
    pass (stable for bases up to around a thousand elements).  It is accepted
    when the residual norm exceeds ``tol`` relative to the candidate's own
    norm; the returned element is unit-normalized under the same inner
    product as the basis.

    ``basis`` must already be orthonormal under :func:`hs_inner` with the
    given ``normalizer``.
    """
    m = as_matrix(candidate, "candidate")
    norm0 = hs_norm(m, normalizer)
    if norm0 == 0.0:
        return ExtendResult(False, 0.0, None)
    residual = m.astype(complex, copy=True)
    for _ in range(2):
        for b in basis:
            residual -= hs_inner(residual, b, normalizer) * b
    rnorm = hs_norm(residual, normalizer)
    if rnorm <= tol * norm0:
        return ExtendResult(False, rnorm, None)
    return ExtendResult(True, rnorm, residual / rnorm)
