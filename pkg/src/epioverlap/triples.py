"""Post-Peierls incompatibility of state triples.

A triple (a, b, c) spanning a three-dimensional subspace is PP-incompatible
when some orthonormal basis {f1, f2, f3} of the span satisfies
<f1|a> = <f2|b> = <f3|c> = 0, so a single measurement can "misfire" on a
different member of the triple for each outcome. The algebraic criterion in
terms of the pairwise fidelities x1 = |<a|b>|^2, x2 = |<b|c>|^2,
x3 = |<c|a>|^2 is

    x1 + x2 + x3 < 1          (strict)
    (x1 + x2 + x3 - 1)^2 >= 4 x1 x2 x3   (non-strict)

The constructive side searches for the basis minimizing the misfire average
eps = (P(f1|a) + P(f2|b) + P(f3|c)) / 3 by multi-start Nelder-Mead over a
six-parameter chart of the flag of bases of the span.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .qstate import (
    DimensionMismatchError,
    Measurement,
    OrthonormalBasis,
    ProjectiveEffect,
    PureState,
    haar_unitary,
)

SPAN_RANK_TOL = 1e-8
ZERO_EPSILON = 1e-8  # below this the triple counts as constructively incompatible


class DegenerateSpanError(ValueError):
    """The three states do not span a three-dimensional subspace."""


@dataclass(frozen=True)
class TripleOverlaps:
    """Pairwise fidelities of a triple, in cyclic order (a,b), (b,c), (c,a)."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for name, x in (("x1", self.x1), ("x2", self.x2), ("x3", self.x3)):
            if not 0.0 <= x <= 1.0:
                raise ValueError(f"{name} = {x!r} is outside [0, 1]")

    def as_tuple(self) -> tuple:
        return (self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class ConjugateBasisResult:
    """Outcome of the misfire-minimizing basis search for one triple."""

    basis: OrthonormalBasis
    epsilon: float
    triple_sum: float
    converged: bool
    restarts_used: int


def _span_basis(a: PureState, b: PureState, c: PureState) -> np.ndarray:
    if not (a.dim == b.dim == c.dim):
        raise DimensionMismatchError("triple members have mixed dimensions")
    if a.dim < 3:
        raise DegenerateSpanError(
            f"states of dimension {a.dim} cannot span a 3-dimensional subspace")
    m = np.column_stack([a.amplitudes, b.amplitudes, c.amplitudes])
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    if s[2] < SPAN_RANK_TOL:
        raise DegenerateSpanError(
            f"states span fewer than 3 dimensions (third singular value {s[2]:.2e})")
    return u  # d x 3, orthonormal columns spanning span{a, b, c}


def triple_overlaps(a: PureState, b: PureState, c: PureState) -> TripleOverlaps:
    """The three pairwise fidelities; raises DegenerateSpanError on rank < 3."""
    _span_basis(a, b, c)
    ab = abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2
    bc = abs(np.vdot(b.amplitudes, c.amplitudes)) ** 2
    ca = abs(np.vdot(c.amplitudes, a.amplitudes)) ** 2
    return TripleOverlaps(min(ab, 1.0), min(bc, 1.0), min(ca, 1.0))


def pp_incompatible(x) -> bool:
    """Algebraic PP-incompatibility test on pairwise fidelities.

    Accepts a TripleOverlaps or any 3-sequence. The first inequality is
    strict, the second is not; no tolerance is applied.
    """
    if isinstance(x, TripleOverlaps):
        x1, x2, x3 = x.as_tuple()
    else:
        x1, x2, x3 = x
    s = x1 + x2 + x3
    return bool(s < 1.0 and (s - 1.0) ** 2 >= 4.0 * x1 * x2 * x3)


def triple_epsilon(a: PureState, b: PureState, c: PureState,
                   basis: OrthonormalBasis) -> float:
    """Misfire average (P(f1|a) + P(f2|b) + P(f3|c)) / 3 for a given basis.

    Only the first three basis vectors are used, so a full-dimension basis
    whose leading vectors lie in the span works too.
    """
    f1, f2, f3 = basis.vectors[0], basis.vectors[1], basis.vectors[2]
    total = (abs(np.vdot(f1.amplitudes, a.amplitudes)) ** 2
             + abs(np.vdot(f2.amplitudes, b.amplitudes)) ** 2
             + abs(np.vdot(f3.amplitudes, c.amplitudes)) ** 2)
    return total / 3.0


def _chart_unitary(theta: np.ndarray) -> np.ndarray:
    """exp(iH) for the off-diagonal Hermitian generator encoded by theta.

    Six real parameters: one complex entry per upper-triangle position. The
    diagonal (per-vector phase) directions are omitted; the misfire average
    is blind to them.
    """
    h = np.zeros((3, 3), dtype=complex)
    h[0, 1] = theta[0] + 1j * theta[1]
    h[0, 2] = theta[2] + 1j * theta[3]
    h[1, 2] = theta[4] + 1j * theta[5]
    h = h + h.conj().T
    vals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * vals)) @ vecs.conj().T


def find_conjugate_basis(a: PureState, b: PureState, c: PureState,
                         restarts: int = 32, seed=0,
                         stop_below: float = 1e-9) -> ConjugateBasisResult:
    """Minimize the misfire average over orthonormal bases of span{a, b, c}.

    Multi-start local search: each restart draws a Haar-random reference
    rotation and starting point from a stream keyed by (seed, restart), so
    the result does not depend on execution order. Restarting stops early
    once a value below ``stop_below`` is found.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    span = _span_basis(a, b, c)
    coords = span.conj().T @ np.column_stack([a.amplitudes, b.amplitudes, c.amplitudes])

    seed_key = tuple(seed) if isinstance(seed, (tuple, list)) else (seed,)
    values = []
    solutions = []
    for r in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence((*seed_key, r)))
        w = haar_unitary(3, rng)
        gw = w.conj().T @ coords

        def objective(theta, gw=gw):
            g = _chart_unitary(theta).conj().T @ gw
            return (abs(g[0, 0]) ** 2 + abs(g[1, 1]) ** 2 + abs(g[2, 2]) ** 2) / 3.0

        x0 = rng.uniform(-0.5, 0.5, size=6)
        res = minimize(objective, x0, method="Nelder-Mead",
                       options={"xatol": 1e-10, "fatol": 1e-13,
                                "maxiter": 3000, "maxfev": 3000})
        values.append(float(res.fun))
        # the objective evaluates the basis w @ chart(theta) in span coordinates
        solutions.append((w @ _chart_unitary(res.x), bool(res.success)))
        if res.fun < stop_below:
            break

    best = int(np.argmin(values))
    value = values[best]
    best_u, best_success = solutions[best]
    near_best = sum(1 for v in values if v < value + 1e-9)
    converged = value < ZERO_EPSILON or (best_success and near_best >= min(2, len(values)))

    vectors = span @ best_u  # columns f1, f2, f3 in the ambient dimension
    basis = _complete_basis(vectors, a.dim)
    realized = triple_epsilon(a, b, c, basis)
    if abs(realized - value) > 1e-9:
        raise AssertionError(
            f"returned basis realizes {realized!r}, optimizer reported {value!r}")
    return ConjugateBasisResult(
        basis=basis,
        epsilon=realized,
        triple_sum=3.0 * realized,
        converged=bool(converged),
        restarts_used=len(values),
    )


def _complete_basis(columns: np.ndarray, dim: int) -> OrthonormalBasis:
    """Extend orthonormal columns to a full orthonormal basis of C^dim."""
    k = columns.shape[1]
    if k == dim:
        return OrthonormalBasis.from_matrix(columns)
    proj = np.eye(dim, dtype=complex) - columns @ columns.conj().T
    _, s, vh = np.linalg.svd(proj)
    extra = vh.conj().T[:, : dim - k]
    full = np.column_stack([columns, extra])
    # re-orthonormalize to scrub accumulated error
    q, r = np.linalg.qr(full)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return OrthonormalBasis.from_matrix(q)


def full_measurement(a: PureState, b: PureState, c: PureState,
                     conjugate: ConjugateBasisResult) -> Measurement:
    """The four-outcome measurement built on a conjugate basis.

    Outcomes f1, f2, f3 are rank-1 projectors onto the basis vectors; f4 is
    the projector onto the orthocomplement of the span and is omitted when
    the ambient dimension is exactly 3.
    """
    dim = a.dim
    if not (a.dim == b.dim == c.dim):
        raise DimensionMismatchError("triple members have mixed dimensions")
    if dim < 3:
        raise ValueError("full_measurement needs ambient dimension >= 3")
    vecs = conjugate.basis.vectors
    effects = [ProjectiveEffect(f"f{k + 1}", (vecs[k],)) for k in range(3)]
    if dim > 3:
        effects.append(ProjectiveEffect("f4", tuple(vecs[3:])))
    return Measurement(dim, tuple(effects), complete=True)
