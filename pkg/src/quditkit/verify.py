"""Aggregated identity suites behind the ``verify`` CLI command.

Each check computes a max residual for one algebraic relation at one size
and compares it against that relation's contract tolerance (or a single
override).  Randomized checks draw from seeded generators, so a report is
a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import circuit, clifford, weyl
from .linalg import max_abs

__all__ = ["VerifyCheck", "VerifyReport", "run_verification", "DEFAULT_DIMS", "DEFAULT_SITES"]

# Default grid: exercises both the qubit and qudit paths in a few seconds.
DEFAULT_DIMS = (2, 3, 4, 5)
DEFAULT_SITES = (1, 2)


@dataclass(frozen=True)
class VerifyCheck:
    """One verified relation at one size."""

    name: str
    identity: str
    params: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class VerifyReport:
    checks: Tuple[VerifyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _unit_disc(rng: np.random.Generator, count: int) -> np.ndarray:
    radii = np.sqrt(rng.uniform(0.0, 1.0, count))
    angles = rng.uniform(0.0, 2.0 * np.pi, count)
    return radii * np.exp(1j * angles)


def _random_matrix(rng: np.random.Generator, d: int) -> np.ndarray:
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def run_verification(
    dims: Sequence[int] = DEFAULT_DIMS,
    sites: Sequence[int] = DEFAULT_SITES,
    tolerance: Optional[float] = None,
) -> VerifyReport:
    """Run every identity suite over the size grid and collect the results."""
    checks: List[VerifyCheck] = []

    def add(name: str, identity: str, params: str, residual: float, default_tol: float):
        tol = default_tol if tolerance is None else float(tolerance)
        checks.append(VerifyCheck(name, identity, params, float(residual), tol))

    for l in dims:
        _single_system_checks(add, l)
    for n in sites:
        _clifford_checks(add, n)
        for l in dims:
            _family_checks(add, l, n)
            if n >= 2:
                _contraction_check(add, l, n)
    return VerifyReport(tuple(checks))


def _single_system_checks(add, l: int) -> None:
    """Single-system relations at order l."""
    u = weyl.shift_matrix(l)
    v = weyl.clock_matrix(l)
    eye = np.eye(l, dtype=complex)

    add(
        "weyl-commutation",
        "U V = zeta V U",
        f"l={l}",
        weyl.weyl_commutation_residual(l),
        1e-12,
    )
    add(
        "weyl-order",
        "U^l = V^l = 1",
        f"l={l}",
        max(
            max_abs(np.linalg.matrix_power(u, l) - eye),
            max_abs(np.linalg.matrix_power(v, l) - eye),
        ),
        1e-12,
    )

    elements = [weyl.weyl_element(l, a, b) for a in range(l) for b in range(l)]
    flat = np.stack([e.ravel() for e in elements])
    gram = (flat @ flat.conj().T) / l
    add(
        "weyl-gram",
        "Tr(W_p W_q*)/l = delta_pq",
        f"l={l}",
        max_abs(gram - np.eye(l * l)),
        1e-12,
    )

    rng = np.random.default_rng(1000 + l)
    roundtrip = 0.0
    for _ in range(3):
        m = _random_matrix(rng, l)
        roundtrip = max(roundtrip, max_abs(weyl.weyl_reconstruct(weyl.weyl_decompose(m, l)) - m))
    add(
        "weyl-roundtrip",
        "sum_ab f_ab W_ab recovers the decomposed matrix",
        f"l={l}",
        roundtrip,
        1e-12,
    )

    rng = np.random.default_rng(2000 + l)
    pairs = _unit_disc(rng, 10).reshape(5, 2)
    fermat = max(weyl.fermat_power_residual(l, a, b) for a, b in pairs)
    add(
        "operator-fermat",
        "(a V + b U)^l = (a^l + b^l) 1",
        f"l={l}",
        fermat,
        1e-10,
    )

    rng = np.random.default_rng(3000 + l)
    samples = [(2.0 + 0j, 1.0 + 0j)] + list(_unit_disc(rng, 6).reshape(3, 2))
    scalar = 0.0
    for a, b in samples:
        residual_odd, residual_nu = weyl.scalar_factorization_residuals(l, a, b)
        scalar = max(scalar, residual_nu)
        if residual_odd is not None:
            scalar = max(scalar, residual_odd)
    add(
        "scalar-factorization",
        "a^l + b^l = prod_k (a - nu^(2k+1) b)",
        f"l={l}",
        scalar,
        1e-12,
    )

    taus = weyl.tau_matrices(l)
    zeta = weyl.RootOfUnity(l).zeta
    tau_residual = 0.0
    for i in range(3):
        tau_residual = max(
            tau_residual, max_abs(np.linalg.matrix_power(taus[i], l) - eye)
        )
        for j in range(i + 1, 3):
            tau_residual = max(
                tau_residual, max_abs(taus[i] @ taus[j] - zeta * taus[j] @ taus[i])
            )
    add(
        "tau-relations",
        "tau_i tau_j = zeta tau_j tau_i (i<j), tau_i^l = 1",
        f"l={l}",
        tau_residual,
        1e-11,
    )

    closed_form = 0.0
    for a in range(l):
        for b in range(l):
            for c in range(l):
                for d in range(l):
                    coeff, (ri, rj) = weyl.weyl_commutator_coefficient(l, (a, b), (c, d))
                    brute = weyl.weyl_element(l, a, b) @ weyl.weyl_element(l, c, d)
                    brute = brute - weyl.weyl_element(l, c, d) @ weyl.weyl_element(l, a, b)
                    table = weyl.weyl_decompose(brute, l)
                    expected = np.zeros((l, l), dtype=complex)
                    expected[ri, rj] = coeff
                    closed_form = max(closed_form, max_abs(table - expected))
    add(
        "commutator-closed-form",
        "[W(a,b), W(c,d)] = (zeta^(-bc) - zeta^(-ad)) W(a+c, b+d)",
        f"l={l}",
        closed_form,
        1e-12,
    )

    increment = circuit.cyclic_shift_gate(l)
    eigen = 0.0
    for k in range(l):
        ket = circuit.basis_state(l, 1, [k])
        shifted = circuit.apply_full(increment, ket)
        eigen = max(
            eigen,
            max_abs(shifted.amplitudes - circuit.basis_state(l, 1, [(k + 1) % l]).amplitudes),
        )
        clocked = circuit.apply_full(v, ket)
        eigen = max(
            eigen,
            max_abs(clocked.amplitudes - weyl.RootOfUnity(l).zeta_power(k) * ket.amplitudes),
        )
    add(
        "circuit-eigenrelations",
        "V|k> = zeta^k |k>, N|k> = |k+1 mod l>",
        f"l={l}",
        eigen,
        1e-14,
    )

    f = circuit.qft_matrix(l, normalized=True)
    add(
        "qft-unitarity",
        "F F* = 1 (normalized)",
        f"l={l}",
        max_abs(f @ f.conj().T - eye),
        1e-12,
    )


def _clifford_checks(add, n: int) -> None:
    fam = clifford.clifford_generators(n)
    e = fam.matrices
    eye = np.eye(fam.dim, dtype=complex)
    residual = 0.0
    for i in range(len(e)):
        for j in range(len(e)):
            expected = 2.0 * eye if i == j else 0.0 * eye
            residual = max(residual, max_abs(e[i] @ e[j] + e[j] @ e[i] - expected))
    add(
        "clifford-anticommutation",
        "e_i e_j + e_j e_i = 2 delta_ij",
        f"n={n}",
        residual,
        1e-12,
    )


def _family_checks(add, l: int, n: int) -> None:
    fam = clifford.generalized_generators(l, n)
    f = fam.matrices
    zeta = weyl.RootOfUnity(l).zeta
    eye = np.eye(fam.dim, dtype=complex)

    commutation = 0.0
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            commutation = max(commutation, max_abs(f[i] @ f[j] - zeta * f[j] @ f[i]))
    add(
        "zeta-commutation",
        "f_i f_j = zeta f_j f_i (i<j)",
        f"l={l} n={n}",
        commutation,
        1e-12,
    )

    order = max(max_abs(np.linalg.matrix_power(g, l) - eye) for g in f)
    add("generator-order", "f_i^l = 1", f"l={l} n={n}", order, 1e-11)

    rng = np.random.default_rng(4000 + 10 * l + n)
    multiterm = 0.0
    for _ in range(3):
        coeffs = _unit_disc(rng, len(f))
        combo = sum(c * g for c, g in zip(coeffs, f))
        powered = np.linalg.matrix_power(combo, l)
        multiterm = max(multiterm, max_abs(powered - np.sum(coeffs**l) * eye))
    add(
        "multiterm-fermat",
        "(sum_i a_i f_i)^l = (sum_i a_i^l) 1",
        f"l={l} n={n}",
        multiterm,
        1e-9,
    )

    generalized_table = clifford.commutation_matrix(fam)
    expected_upper = np.triu(np.ones((2 * n, 2 * n), dtype=int), k=1)
    expected_upper = expected_upper - expected_upper.T
    canonical_table = clifford.commutation_matrix(clifford.canonical_generators(l, n))
    block = np.array([[0, 1], [-1, 0]], dtype=int)
    expected_sym = np.kron(np.eye(n, dtype=int), block)
    mismatch = max(
        np.max(np.abs(generalized_table - expected_upper)),
        np.max(np.abs(canonical_table - expected_sym)),
    )
    add(
        "commutation-matrix-forms",
        "c_ij: all +1 above the diagonal / symplectic blocks",
        f"l={l} n={n}",
        float(mismatch),
        0.5,
    )


def _contraction_check(add, l: int, n: int) -> None:
    rng = np.random.default_rng(5000 + 10 * l + n)
    residual = 0.0
    for _ in range(3):
        k = int(rng.integers(1, min(n, 2) + 1))
        site_list = tuple(int(s) + 1 for s in rng.permutation(n)[:k])
        gate = circuit.GateSpec(l, _random_matrix(rng, l**k), site_list)
        amplitudes = rng.standard_normal(l**n) + 1j * rng.standard_normal(l**n)
        state = circuit.QuditState(l, n, amplitudes)
        direct = circuit.apply_kgate(gate, state)
        embedded = circuit.apply_full(circuit.embed_kgate(gate, n), state)
        residual = max(residual, max_abs(direct.amplitudes - embedded.amplitudes))
    add(
        "kgate-contraction",
        "indexed contraction = embedded full matrix",
        f"l={l} n={n}",
        residual,
        1e-12,
    )
