"""Pure states, orthonormal bases, projective measurements, and the
classical/quantum distance and overlap measures built on them.

All objects are immutable values and every operation is a pure function,
so everything here is safe for concurrent use without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DimensionMismatchError(ValueError):
    """Operands live in Hilbert spaces of different dimension."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used by the invariant checks.

    ``orthogonality`` gates inner products that should vanish,
    ``normalization`` gates norms and probability sums.
    """

    orthogonality: float = 1e-10
    normalization: float = 1e-12


DEFAULT_TOLERANCES = Tolerances()


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PureState:
    """A unit vector in C^dim, stored as complex double amplitudes."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _freeze(np.asarray(self.amplitudes, dtype=complex).reshape(-1))
        object.__setattr__(self, "amplitudes", amps)
        if amps.size < 2:
            raise ValueError(f"state dimension must be >= 2, got {amps.size}")
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > DEFAULT_TOLERANCES.normalization:
            raise ValueError(f"state is not normalized: sum |a_i|^2 = {norm_sq!r}")

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def normalized(cls, amplitudes) -> "PureState":
        """Build a state from arbitrary nonzero amplitudes, rescaling to unit norm."""
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(amps / norm)


def basis_state(dim: int, index: int) -> PureState:
    """The computational basis vector |index> in dimension dim."""
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return PureState(amps)


@dataclass(frozen=True)
class OrthonormalBasis:
    """A complete orthonormal basis: dim unit vectors, pairwise orthogonal."""

    vectors: tuple

    def __post_init__(self):
        vectors = tuple(self.vectors)
        object.__setattr__(self, "vectors", vectors)
        if not vectors:
            raise ValueError("a basis needs at least one vector")
        dim = vectors[0].dim
        if any(v.dim != dim for v in vectors):
            raise DimensionMismatchError("basis vectors have mixed dimensions")
        if len(vectors) != dim:
            raise ValueError(f"expected {dim} vectors for a basis of C^{dim}, got {len(vectors)}")
        gram = self.matrix.conj().T @ self.matrix
        off = gram - np.eye(dim)
        diag_dev = float(np.max(np.abs(np.diag(off))))
        np.fill_diagonal(off, 0.0)
        cross_dev = float(np.max(np.abs(off))) if dim > 1 else 0.0
        if cross_dev > DEFAULT_TOLERANCES.orthogonality:
            raise ValueError(f"basis vectors not orthogonal: max |<v_i|v_j>| = {cross_dev!r}")
        if diag_dev > DEFAULT_TOLERANCES.normalization:
            raise ValueError(f"basis vectors not normalized: max ||v_i|^2 - 1| = {diag_dev!r}")

    @property
    def dim(self) -> int:
        return self.vectors[0].dim

    @property
    def matrix(self) -> np.ndarray:
        """dim x dim matrix whose columns are the basis vectors."""
        return np.column_stack([v.amplitudes for v in self.vectors])

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "OrthonormalBasis":
        m = np.asarray(m, dtype=complex)
        return cls(tuple(PureState(m[:, k]) for k in range(m.shape[1])))


@dataclass(frozen=True)
class ProjectiveEffect:
    """One measurement outcome: a projector given by an orthonormal spanning set.

    An empty spanning set (rank 0) is not allowed; omit the effect instead.
    """

    label: str
    vectors: tuple

    def __post_init__(self):
        vectors = tuple(self.vectors)
        object.__setattr__(self, "vectors", vectors)
        if not vectors:
            raise ValueError(f"effect {self.label!r} has no spanning vectors")
        dim = vectors[0].dim
        if any(v.dim != dim for v in vectors):
            raise DimensionMismatchError("effect vectors have mixed dimensions")

    @property
    def dim(self) -> int:
        return self.vectors[0].dim

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def projector(self) -> np.ndarray:
        m = np.column_stack([v.amplitudes for v in self.vectors])
        return m @ m.conj().T

    def probability(self, psi: PureState) -> float:
        if psi.dim != self.dim:
            raise DimensionMismatchError("state and effect dimensions differ")
        return float(sum(abs(np.vdot(v.amplitudes, psi.amplitudes)) ** 2 for v in self.vectors))


@dataclass(frozen=True)
class Measurement:
    """A projective measurement: orthogonal effects, optionally complete."""

    dim: int
    effects: tuple
    complete: bool = True

    def __post_init__(self):
        effects = tuple(self.effects)
        object.__setattr__(self, "effects", effects)
        if not effects:
            raise ValueError("a measurement needs at least one effect")
        if any(e.dim != self.dim for e in effects):
            raise DimensionMismatchError("effect dimension does not match measurement dimension")
        total = np.zeros((self.dim, self.dim), dtype=complex)
        for i, e in enumerate(effects):
            p = e.projector()
            for f in effects[i + 1:]:
                if np.max(np.abs(p @ f.projector())) > DEFAULT_TOLERANCES.orthogonality:
                    raise ValueError(f"effects {e.label!r} and {f.label!r} are not orthogonal")
            total += p
        if self.complete:
            dev = float(np.max(np.abs(total - np.eye(self.dim))))
            if dev > DEFAULT_TOLERANCES.orthogonality:
                raise ValueError(f"effects do not sum to identity: max deviation {dev!r}")

    @property
    def labels(self) -> tuple:
        return tuple(e.label for e in self.effects)

    def probabilities(self, psi: PureState) -> np.ndarray:
        """Outcome probabilities for a pure input state, in effect order."""
        return np.array([e.probability(psi) for e in self.effects])


def basis_measurement(basis: OrthonormalBasis, labels=None) -> Measurement:
    """The complete rank-1 projective measurement onto a basis."""
    if labels is None:
        labels = [f"out{k}" for k in range(basis.dim)]
    effects = tuple(ProjectiveEffect(lab, (v,)) for lab, v in zip(labels, basis.vectors))
    return Measurement(basis.dim, effects, complete=True)


@dataclass(frozen=True)
class DiscreteDistribution:
    """A probability mass function on a finite set of points."""

    weights: np.ndarray

    def __post_init__(self):
        w = _freeze(np.asarray(self.weights, dtype=float).reshape(-1))
        object.__setattr__(self, "weights", w)
        if w.size < 1:
            raise ValueError("empty support")
        if np.any(w < 0):
            raise ValueError("negative probability mass")
        total = float(w.sum())
        if abs(total - 1.0) > DEFAULT_TOLERANCES.normalization:
            raise ValueError(f"weights sum to {total!r}, expected 1")

    @property
    def support_size(self) -> int:
        return self.weights.size


# ---------------------------------------------------------------------------
# Distance and overlap measures
# ---------------------------------------------------------------------------

def inner(a: PureState, b: PureState) -> complex:
    """<a|b>, conjugate-linear in the first argument."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimensions differ: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|^2. Symmetric, in [0, 1]."""
    return abs(inner(a, b)) ** 2


def born_probability(f: PureState, psi: PureState) -> float:
    """Probability of outcome f when measuring psi: |<f|psi>|^2."""
    return fidelity(f, psi)


def quantum_trace_distance(a: PureState, b: PureState) -> float:
    """sqrt(1 - |<a|b>|^2), the trace distance for pure states."""
    return float(np.sqrt(max(0.0, 1.0 - fidelity(a, b))))


def quantum_overlap(a: PureState, b: PureState) -> float:
    """1 - sqrt(1 - |<a|b>|^2): one minus the pure-state trace distance."""
    return 1.0 - quantum_trace_distance(a, b)


def helstrom_success(a: PureState, b: PureState) -> float:
    """Optimal single-shot probability of telling a from b at equal priors.

    Equals (1 + sqrt(1 - |<a|b>|^2)) / 2, i.e. 1 - quantum_overlap(a, b)/2.
    """
    return 0.5 * (1.0 + quantum_trace_distance(a, b))


def classical_trace_distance(p: DiscreteDistribution, q: DiscreteDistribution) -> float:
    """Half the L1 distance between two mass functions on the same support."""
    if p.support_size != q.support_size:
        raise DimensionMismatchError(
            f"support sizes differ: {p.support_size} vs {q.support_size}")
    return 0.5 * float(np.abs(p.weights - q.weights).sum())


def classical_overlap(p: DiscreteDistribution, q: DiscreteDistribution) -> float:
    """Sum of pointwise minima: 1 - classical_trace_distance(p, q)."""
    if p.support_size != q.support_size:
        raise DimensionMismatchError(
            f"support sizes differ: {p.support_size} vs {q.support_size}")
    return float(np.minimum(p.weights, q.weights).sum())


# ---------------------------------------------------------------------------
# Haar-random test inputs
# ---------------------------------------------------------------------------

def random_state(dim: int, seed) -> PureState:
    """A Haar-distributed pure state, deterministic per seed."""
    if dim < 2:
        raise ValueError("dim must be >= 2")
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState(v / np.linalg.norm(v))


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary matrix: complex Ginibre + QR with phase-fixed diagonal."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_unitary(dim: int, seed) -> OrthonormalBasis:
    """A Haar-random orthonormal basis, deterministic per seed."""
    if dim < 2:
        raise ValueError("dim must be >= 2")
    u = haar_unitary(dim, np.random.default_rng(seed))
    return OrthonormalBasis.from_matrix(u)


# ---------------------------------------------------------------------------
# JSON-friendly serialization
# ---------------------------------------------------------------------------

def state_to_obj(psi: PureState) -> dict:
    """{"dim": d, "amplitudes": [[re, im], ...]}"""
    return {
        "dim": psi.dim,
        "amplitudes": [[float(a.real), float(a.imag)] for a in psi.amplitudes],
    }


def state_from_obj(obj: dict) -> PureState:
    amps = np.array([complex(re, im) for re, im in obj["amplitudes"]])
    if len(amps) != obj["dim"]:
        raise ValueError("amplitude count does not match declared dim")
    return PureState(amps)


def basis_to_obj(basis: OrthonormalBasis) -> dict:
    return {"dim": basis.dim, "vectors": [state_to_obj(v) for v in basis.vectors]}


def basis_from_obj(obj: dict) -> OrthonormalBasis:
    return OrthonormalBasis(tuple(state_from_obj(v) for v in obj["vectors"]))
