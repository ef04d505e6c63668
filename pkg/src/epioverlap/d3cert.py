"""The three-dimensional overlap-ratio certificate.

Fixes three mutually unbiased bases of C^3 and a reference state c, then
minimizes the misfire average eps(c, e^a_i, e^b_j) over measurement bases
for all 27 cross-basis triples. The certified bound is

    k <= (1 + G) / W

where G is three times the summed minimal misfire averages and W is the
nine-term sum of quantum overlaps between c and the basis vectors. With the
canonical instance the pipeline certifies k <= 0.95.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .qstate import OrthonormalBasis, PureState, quantum_overlap
from .triples import ConjugateBasisResult, find_conjugate_basis, triple_epsilon

BASIS_PAIRS = ((1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class D3Instance:
    """Three pairwise unbiased bases of C^3 plus a fixed reference state."""

    bases: tuple
    c: PureState

    def __post_init__(self):
        if len(self.bases) != 3:
            raise ValueError("exactly three bases expected")
        for a in range(3):
            for b in range(a + 1, 3):
                fid = np.abs(self.bases[a].matrix.conj().T @ self.bases[b].matrix) ** 2
                if np.max(np.abs(fid - 1.0 / 3.0)) > 1e-10:
                    raise ValueError(f"bases {a + 1} and {b + 1} are not mutually unbiased")
        if self.c.dim != 3:
            raise ValueError("reference state must live in C^3")

    def basis_vector(self, alpha: int, i: int) -> PureState:
        """Vector i of basis alpha, both 1-based."""
        return self.bases[alpha - 1].vectors[i - 1]


# Reference-state components, rounded to three decimals; renormalized below.
_C_COMPONENTS = (-0.374 - 0.236j, 0.778 - 0.071j, 0.018 - 0.441j)


def canonical_states() -> D3Instance:
    """The canonical instance: standard basis, two quadratic-phase bases,
    and the fixed reference state."""
    w = np.exp(2j * np.pi / 3)
    e1 = np.eye(3, dtype=complex)
    e2 = np.column_stack([
        np.array([1, 1, w ** 2]), np.array([1, w ** 2, 1]), np.array([1, w, w]),
    ]).astype(complex) / np.sqrt(3)
    e3 = np.column_stack([
        np.array([1, w, w ** 2]), np.array([1, 1, 1]), np.array([1, w ** 2, w]),
    ]).astype(complex) / np.sqrt(3)
    bases = tuple(OrthonormalBasis.from_matrix(m) for m in (e1, e2, e3))
    return D3Instance(bases=bases, c=PureState.normalized(np.array(_C_COMPONENTS)))


def quantum_epsilon(a: PureState, b: PureState, c: PureState,
                    basis: OrthonormalBasis) -> float:
    """Misfire average of a triple under a given orthonormal basis.

    Pairing: f1 with a, f2 with b, f3 with c. The basis is validated by the
    OrthonormalBasis invariants at construction; pass vectors through
    OrthonormalBasis.from_matrix to re-orthonormalize rounded input first.
    """
    if basis.dim != 3:
        raise ValueError("the measurement basis must be a basis of C^3")
    return triple_epsilon(a, b, c, basis)


@dataclass(frozen=True)
class TripleEntry:
    alpha: int
    i: int
    beta: int
    j: int
    result: ConjugateBasisResult

    @property
    def epsilon(self) -> float:
        return self.result.epsilon

    @property
    def triple_sum(self) -> float:
        return self.result.triple_sum


@dataclass
class CertificateReport:
    """All optimized triples plus the aggregates feeding the k bound."""

    entries: dict = field(default_factory=dict)
    family_sums: dict = field(default_factory=dict)
    grand_noise_sum: float = 0.0
    overlap_weight_sum: float | None = None
    k_bound: float | None = None
    restarts: int = 0
    seed: int = 0

    def all_converged(self) -> bool:
        return all(e.result.converged for e in self.entries.values())


def optimize_all_triples(instance: D3Instance, restarts: int = 64,
                         seed: int = 0) -> CertificateReport:
    """Minimize the misfire average for each of the 27 cross-basis triples.

    Deterministic per seed: each triple draws restart streams keyed by
    (seed, triple index), so entries do not depend on evaluation order.
    Non-convergence is visible per entry via result.converged.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    report = CertificateReport(restarts=restarts, seed=seed)
    t_index = 0
    for (alpha, beta) in BASIS_PAIRS:
        family = 0.0
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                a = instance.basis_vector(alpha, i)
                b = instance.basis_vector(beta, j)
                result = find_conjugate_basis(a, b, instance.c,
                                              restarts=restarts,
                                              seed=(seed, t_index))
                report.entries[(alpha, i, beta, j)] = TripleEntry(alpha, i, beta, j, result)
                family += result.triple_sum
                t_index += 1
        report.family_sums[(alpha, beta)] = family
    report.grand_noise_sum = float(sum(report.family_sums.values()))
    return report


def overlap_weight_sum(instance: D3Instance) -> float:
    """Sum over the nine basis vectors of the quantum overlap with c."""
    return float(sum(quantum_overlap(instance.basis_vector(alpha, i), instance.c)
                     for alpha in (1, 2, 3) for i in (1, 2, 3)))


def certify_k(report: CertificateReport, instance: D3Instance) -> float:
    """The certified bound (1 + grand noise sum) / overlap weight sum.

    Also stamps the overlap weight sum and bound into the report. Raises if
    any triple failed to converge or the denominator is degenerate.
    """
    if not report.all_converged():
        bad = [k for k, e in report.entries.items() if not e.result.converged]
        raise RuntimeError(f"triples did not converge: {bad}")
    w = overlap_weight_sum(instance)
    if not np.isfinite(w) or w <= 0:
        raise ZeroDivisionError(f"overlap weight sum is degenerate: {w!r}")
    g = report.grand_noise_sum
    if not np.isfinite(g):
        raise ZeroDivisionError(f"grand noise sum is not finite: {g!r}")
    k = (1.0 + g) / w
    report.overlap_weight_sum = w
    report.k_bound = k
    return k


def run_certificate(instance: D3Instance | None = None, restarts: int = 64,
                    seed: int = 0) -> CertificateReport:
    """Full pipeline: optimize all triples, then certify the bound."""
    if instance is None:
        instance = canonical_states()
    report = optimize_all_triples(instance, restarts=restarts, seed=seed)
    certify_k(report, instance)
    return report
