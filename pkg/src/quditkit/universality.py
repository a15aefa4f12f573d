"""Lie-algebra closure engine deciding universality of generator sets.

A set of matrices is universal when linear combinations and repeated
commutators span the full traceless algebra: dimension d^2 - 1 over the
reals for anti-Hermitian spans (the su(d) case) and over the complex
numbers for unconstrained traceless spans (the sl(d, C) case).  Both modes
run the same arithmetic: within the anti-Hermitian subspace, complex and
real linear dependence coincide, so one orthonormalization kernel counts
dimensions correctly for either field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .linalg import as_matrix, dagger, hs_norm, matrix_exp, max_abs, orthonormal_extend

__all__ = [
    "REAL_ANTIHERMITIAN",
    "COMPLEX_TRACELESS",
    "MODES",
    "NonConvergenceError",
    "GeneratorSet",
    "ClosureResult",
    "traceless_project",
    "hermitian_split",
    "prepare_generators",
    "closure",
    "is_universal",
    "gate_from_generator",
]

REAL_ANTIHERMITIAN = "real-antihermitian"
COMPLEX_TRACELESS = "complex-traceless"
MODES = (REAL_ANTIHERMITIAN, COMPLEX_TRACELESS)

_ANTIHERMITIAN_TOL = 1e-11


class NonConvergenceError(RuntimeError):
    """Round cap reached while the basis was still growing (tolerance trouble)."""


def traceless_project(m) -> np.ndarray:
    """Remove the identity component: ``m - (Tr m / dim) * 1``."""
    m = as_matrix(m)
    d = m.shape[0]
    return m - (np.trace(m) / d) * np.eye(d, dtype=complex)


def hermitian_split(m) -> Tuple[np.ndarray, np.ndarray]:
    """Anti-Hermitian pair ``(i(m + m*), m - m*)`` carrying all of ``m``.

    Both outputs satisfy X* = -X, and ``m`` is recovered as
    ``(-1j * first + second) / 2``, so replacing a matrix by the pair loses
    nothing while moving it into the anti-Hermitian subspace.
    """
    m = as_matrix(m)
    mh = dagger(m)
    return 1j * (m + mh), m - mh


@dataclass(frozen=True)
class GeneratorSet:
    """Preprocessed input to :func:`closure`; build via :func:`prepare_generators`."""

    name: str
    dim: int
    matrices: Tuple[np.ndarray, ...]
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        for idx, m in enumerate(self.matrices):
            if m.shape != (self.dim, self.dim):
                raise ValueError(
                    f"matrix {idx} has shape {m.shape}, expected {(self.dim, self.dim)}"
                )
            if self.mode == REAL_ANTIHERMITIAN:
                if max_abs(m + dagger(m)) > _ANTIHERMITIAN_TOL:
                    raise ValueError(
                        f"matrix {idx} is not anti-Hermitian; real mode requires "
                        "preprocessed input (see prepare_generators)"
                    )


@dataclass(frozen=True)
class ClosureResult:
    """Outcome of a closure run; ``universal`` iff the full target dimension was reached."""

    achieved_dim: int
    target_dim: int
    basis: Tuple[np.ndarray, ...]
    rounds: int
    tolerance_used: float
    universal: bool


def prepare_generators(
    matrices: Iterable[np.ndarray], mode: str, name: str = ""
) -> GeneratorSet:
    """Project inputs to traceless form and, in real mode, split them anti-Hermitian."""
    mats = [as_matrix(m) for m in matrices]
    if not mats:
        raise ValueError("generator set is empty")
    dim = mats[0].shape[0]
    for idx, m in enumerate(mats):
        if m.shape[0] != dim:
            raise ValueError(f"matrix {idx} has dimension {m.shape[0]}, expected {dim}")
    processed: List[np.ndarray] = []
    for m in mats:
        t = traceless_project(m)
        if mode == REAL_ANTIHERMITIAN:
            processed.extend(hermitian_split(t))
        else:
            processed.append(t)
    return GeneratorSet(name=name, dim=dim, matrices=tuple(processed), mode=mode)


def closure(
    gen_set: GeneratorSet,
    max_rounds: Optional[int] = None,
    tol: float = 1e-9,
) -> ClosureResult:
    """Grow an orthonormal basis of the Lie algebra generated by the set.

    The inputs seed the basis through :func:`orthonormal_extend` (raw trace
    inner product, so duplicates and dependent directions drop out).  Each
    round then sweeps every element added in the previous round against the
    whole current basis, inserting new ``[a, b] = a@b - b@a`` directions in a
    fixed order; the run stops when a round adds nothing or the target
    dimension d^2 - 1 is reached.  Processing order is deterministic, so
    identical inputs yield identical bases.

    Commutators whose norm does not exceed ``tol`` are treated as zero
    before projection, which keeps floating-point dust from inflating the
    rank.  Raises :class:`NonConvergenceError` when ``max_rounds`` is
    exhausted with growth still pending (default cap: target dimension + 2,
    which an honestly converging run can never hit).
    """
    if not gen_set.matrices:
        raise ValueError("generator set is empty")
    d = gen_set.dim
    target = d * d - 1
    if max_rounds is None:
        max_rounds = target + 2
    basis: List[np.ndarray] = []
    for m in gen_set.matrices:
        res = orthonormal_extend(basis, m, tol=tol, normalizer=1.0)
        if res.accepted:
            basis.append(res.new_element)

    rounds = 0
    frontier_start = 0
    while frontier_start < len(basis) < target:
        if rounds == max_rounds:
            raise NonConvergenceError(
                f"basis still growing after {max_rounds} rounds "
                f"(dimension {len(basis)} of {target}); revisit the tolerance"
            )
        rounds += 1
        frontier_end = len(basis)
        for i in range(frontier_start, frontier_end):
            a = basis[i]
            stack = np.stack(basis)
            candidates = a @ stack - stack @ a
            for c in candidates:
                if hs_norm(c, 1.0) <= tol:
                    continue
                res = orthonormal_extend(basis, c, tol=tol, normalizer=1.0)
                if res.accepted:
                    basis.append(res.new_element)
                    if len(basis) == target:
                        break
            if len(basis) == target:
                break
        frontier_start = frontier_end

    achieved = len(basis)
    return ClosureResult(
        achieved_dim=achieved,
        target_dim=target,
        basis=tuple(basis),
        rounds=rounds,
        tolerance_used=tol,
        universal=achieved == target,
    )


def is_universal(
    matrices: Sequence[np.ndarray],
    l: int,
    n: int,
    mode: str = REAL_ANTIHERMITIAN,
    tol: float = 1e-9,
) -> bool:
    """Preprocess, run the closure, and report whether the set is universal."""
    d = l**n
    mats = [as_matrix(m) for m in matrices]
    for idx, m in enumerate(mats):
        if m.shape[0] != d:
            raise ValueError(
                f"matrix {idx} has dimension {m.shape[0]}, expected l^n = {d}"
            )
    gen = prepare_generators(mats, mode)
    return closure(gen, tol=tol).universal


def gate_from_generator(m, tau: float) -> Tuple[np.ndarray, np.ndarray]:
    """Unitary gate pair from an arbitrary complex generator.

    Returns ``(exp(i (m + m*) tau), exp((m - m*) tau))``; both exponents are
    anti-Hermitian times tau, so both gates are unitary for real tau.
    """
    m = as_matrix(m)
    tau = float(tau)
    if not np.isfinite(tau):
        raise ValueError(f"tau must be finite, got {tau!r}")
    mh = dagger(m)
    first = matrix_exp(1j * tau * (m + mh))
    second = matrix_exp(tau * (m - mh))
    return first, second
