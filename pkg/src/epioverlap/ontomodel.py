"""Ontological models over discrete and spherical ontic spaces.

A model assigns each pure state an epistemic state (a density over ontic
states) and each measurement a response function; reproducing quantum
statistics means the response-weighted integral of the density matches the
Born probability for every outcome. This module provides:

* discrete models backed by explicit tables, including the state-per-point
  toy in which every quantum state owns one ontic point;
* the Kochen-Specker qubit model on the unit sphere, with densities
  mu_psi(x) = (n_psi . x)+ / pi and hemisphere-indicator responses;
* overlap integrals (pairwise and triple pointwise minima), the
  union-bound slack check on families of epistemic states, and the
  response-normalization bound that drives the noise analysis.

Sphere integrals use a quadrature frame whose polar axis is orthogonal to
the Bloch axes involved. Every discontinuity circle of the integrand then
lies on a pair of meridians, the azimuthal panels split at those meridians,
and Gauss-Legendre nodes converge spectrally despite the kinks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qstate import (
    Measurement,
    OrthonormalBasis,
    PureState,
    fidelity,
    quantum_overlap,
)


class SpaceMismatchError(ValueError):
    """Operands are defined over different ontic spaces."""


class BornPreconditionError(RuntimeError):
    """A check requiring Born-rule reproduction was run on a model that fails it."""


# ---------------------------------------------------------------------------
# Ontic spaces and value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscreteSpace:
    points: int

    def __post_init__(self):
        if self.points < 1:
            raise ValueError("a discrete space needs at least one point")

    def integrate(self, values: np.ndarray) -> float:
        return float(np.sum(values))


@dataclass(frozen=True)
class SphereSpace:
    """Unit 2-sphere with a Gauss-Legendre product quadrature specification.

    ``n_theta`` polar nodes span [0, pi]; each azimuthal panel carries
    ``n_phi`` nodes, and panels split at caller-supplied meridians.
    """

    n_theta: int = 48
    n_phi: int = 24

    def __post_init__(self):
        if self.n_theta < 8 or self.n_phi < 8:
            raise ValueError("sphere quadrature needs n_theta >= 8 and n_phi >= 8")
        _, wts = self.frame()
        if abs(float(wts.sum()) - 4.0 * np.pi) > 1e-9:
            raise ValueError("quadrature weights do not sum to the sphere area")

    def frame(self, axes=(), extra_meridians=()):
        """Quadrature nodes and weights aligned to the given Bloch axes.

        The polar axis is chosen orthogonal to the first two independent
        axes, so their hemisphere boundaries and the bisector circle between
        them become meridians. Returns (points, weights) with points of
        shape (n, 3) and weights summing to 4*pi.
        """
        u, in_plane = _orthogonal_frame(axes)
        e1 = in_plane[0] if in_plane else _any_orthogonal(u)
        e2 = np.cross(u, e1)

        angles = []
        phis = [float(np.arctan2(a @ e2, a @ e1)) for a in in_plane]
        for p in phis:
            angles.extend((p + np.pi / 2, p - np.pi / 2))
        for i in range(len(phis)):
            for j in range(i + 1, len(phis)):
                mid = 0.5 * (phis[i] + phis[j])
                angles.extend((mid, mid + np.pi))
        angles.extend(extra_meridians)
        brk = np.unique(np.mod(angles, 2 * np.pi))
        if brk.size == 0:
            brk = np.array([0.0])
        brk = np.append(brk, brk[0] + 2 * np.pi)

        xt, wt = np.polynomial.legendre.leggauss(self.n_theta)
        theta = 0.5 * np.pi * (xt + 1.0)
        w_theta = 0.5 * np.pi * wt * np.sin(theta)

        xp, wp = np.polynomial.legendre.leggauss(self.n_phi)
        phi_nodes, phi_weights = [], []
        for lo, hi in zip(brk[:-1], brk[1:]):
            if hi - lo < 1e-12:
                continue
            phi_nodes.append(0.5 * (hi - lo) * xp + 0.5 * (lo + hi))
            phi_weights.append(0.5 * (hi - lo) * wp)
        phi = np.concatenate(phi_nodes)
        w_phi = np.concatenate(phi_weights)

        st = np.sin(theta)[:, None]
        pts = (st * np.cos(phi)[None, :])[..., None] * e1 \
            + (st * np.sin(phi)[None, :])[..., None] * e2 \
            + np.cos(theta)[:, None, None] * u
        wts = w_theta[:, None] * w_phi[None, :]
        return pts.reshape(-1, 3), wts.ravel()

    def integrate(self, values: np.ndarray) -> float:
        _, wts = self.frame()
        return float(wts @ values)


def _orthogonal_frame(axes):
    """A unit vector orthogonal to the first two independent axes, plus the
    axes that actually lie in its orthogonal plane."""
    axes = [np.asarray(a, dtype=float) for a in axes]
    u = None
    for i in range(len(axes)):
        for j in range(i + 1, len(axes)):
            c = np.cross(axes[i], axes[j])
            n = np.linalg.norm(c)
            if n > 1e-9:
                u = c / n
                break
        if u is not None:
            break
    if u is None:
        u = _any_orthogonal(axes[0]) if axes else np.array([0.0, 0.0, 1.0])
    in_plane = []
    for a in axes:
        proj = a - (a @ u) * u
        n = np.linalg.norm(proj)
        if n > 1e-9:
            in_plane.append(proj / n)
    return u, in_plane


def _any_orthogonal(v: np.ndarray) -> np.ndarray:
    t = np.array([1.0, 0.0, 0.0]) if abs(v[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    c = np.cross(v, t)
    return c / np.linalg.norm(c)


@dataclass(frozen=True)
class SampledFrame:
    """A concrete quadrature frame: node positions plus their weights.

    Sphere densities sampled on different frames must never be combined
    pointwise, so frame identity travels with the sampled values.
    """

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.points, dtype=float)
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        p.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "points", p)
        object.__setattr__(self, "weights", w)
        if p.shape[0] != w.size:
            raise ValueError("frame points and weights disagree in length")

    def same_as(self, other: "SampledFrame") -> bool:
        if self is other:
            return True
        return (self.points.shape == other.points.shape
                and np.array_equal(self.points, other.points))


@dataclass(frozen=True)
class EpistemicState:
    """A normalized density over an ontic space.

    Discrete spaces store probability mass per point. Sphere densities are
    sampled on a quadrature frame and carry that frame, since the frame
    depends on the Bloch axes it was aligned to.
    """

    space: object
    values: np.ndarray
    frame: SampledFrame | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).reshape(-1)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        if self.frame is not None and self.frame.weights.size != v.size:
            raise ValueError("frame and values have different lengths")
        if np.any(v < 0):
            raise ValueError("epistemic state has negative density")
        total = self.integrate(v)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"epistemic state integrates to {total!r}, expected 1")

    def integrate(self, values: np.ndarray) -> float:
        if self.frame is not None:
            return float(self.frame.weights @ values)
        return self.space.integrate(values)


@dataclass(frozen=True)
class ResponseFunction:
    """Per-outcome response values on an ontic space, summing to 1 pointwise."""

    space: object
    table: dict

    def __post_init__(self):
        table = {k: np.asarray(v, dtype=float).reshape(-1) for k, v in self.table.items()}
        object.__setattr__(self, "table", table)
        stack = np.stack(list(table.values()))
        if np.any(stack < -1e-12) or np.any(stack > 1 + 1e-12):
            raise ValueError("response values must lie in [0, 1]")
        sums = stack.sum(axis=0)
        worst = float(np.max(np.abs(sums - 1.0)))
        if worst > 1e-9:
            raise ValueError(f"response functions do not sum to 1 pointwise (worst {worst!r})")


# ---------------------------------------------------------------------------
# Discrete models
# ---------------------------------------------------------------------------

class DiscreteModel:
    """A tabular model over finitely many ontic points.

    ``states`` maps registered pure states to densities. Responses come
    either from explicit (measurement, table) pairs or from a rule mapping
    a measurement to a table. With ``validate=False`` the response tables
    skip the pointwise-normalization invariant, which exists only so tests
    can study deliberately broken models.
    """

    def __init__(self, states, responses=None, response_rule=None, validate=True):
        states = [(psi, np.asarray(w, dtype=float).reshape(-1)) for psi, w in states]
        if not states:
            raise ValueError("a model needs at least one registered state")
        n = states[0][1].size
        self.space = DiscreteSpace(n)
        self.dim = states[0][0].dim
        for psi, w in states:
            EpistemicState(self.space, w)  # invariant gate
            if psi.dim != self.dim:
                raise ValueError("registered states have mixed dimensions")
        self._states = states
        self._responses = list(responses or [])
        self._rule = response_rule
        self._validate = validate

    def epistemic(self, psi: PureState) -> np.ndarray:
        for reg, w in self._states:
            if reg.dim == psi.dim and abs(fidelity(reg, psi) - 1.0) < 1e-10:
                return w
        raise KeyError("state is not registered with this model")

    def response(self, m: Measurement) -> dict:
        table = None
        if self._rule is not None:
            table = self._rule(m)
        else:
            for stored, tab in self._responses:
                if _measurements_match(stored, m):
                    table = tab
                    break
        if table is None:
            raise KeyError("measurement is not registered with this model")
        table = {k: np.asarray(v, dtype=float).reshape(-1) for k, v in table.items()}
        if self._validate:
            ResponseFunction(self.space, table)
        return table

    def born_residual(self, psi: PureState, m: Measurement) -> float:
        mu = self.epistemic(psi)
        table = self.response(m)
        worst = 0.0
        for effect in m.effects:
            pred = float(table[effect.label] @ mu)
            worst = max(worst, abs(pred - effect.probability(psi)))
        return worst

    def predicted(self, m: Measurement, label: str, psi: PureState) -> float:
        return float(self.response(m)[label] @ self.epistemic(psi))

    def min_integral(self, states) -> float:
        mus = [self.epistemic(s) for s in states]
        return float(np.minimum.reduce(mus).sum())

    def overlap_pair(self, psi: PureState, phi: PureState) -> float:
        return self.min_integral([psi, phi])

    def overlap_triple(self, a: PureState, b: PureState, c: PureState) -> float:
        return self.min_integral([a, b, c])

    def support_intersection(self, states, tol: float) -> float:
        mus = [self.epistemic(s) for s in states]
        mask = np.ones_like(mus[0], dtype=bool)
        for mu in mus:
            mask &= mu > tol
        return float(mus[0][mask].sum())


def _measurements_match(a: Measurement, b: Measurement, tol: float = 1e-9) -> bool:
    if a.dim != b.dim or a.labels != b.labels:
        return False
    return all(np.max(np.abs(ea.projector() - eb.projector())) < tol
               for ea, eb in zip(a.effects, b.effects))


def psi_ontic_model(states) -> DiscreteModel:
    """One ontic point per quantum state; responses copy Born probabilities.

    Reproduces quantum statistics for every projective measurement with
    exactly zero residual, and every pair of epistemic states is disjoint.
    """
    states = list(states)
    n = len(states)

    def rule(m: Measurement) -> dict:
        return {
            e.label: np.array([e.probability(s) for s in states])
            for e in m.effects
        }

    table = []
    for k, psi in enumerate(states):
        w = np.zeros(n)
        w[k] = 1.0
        table.append((psi, w))
    return DiscreteModel(table, response_rule=rule)


# ---------------------------------------------------------------------------
# The Kochen-Specker qubit model
# ---------------------------------------------------------------------------

def bloch_axis(psi: PureState) -> np.ndarray:
    """Bloch vector of a qubit state."""
    if psi.dim != 2:
        raise ValueError("Bloch axes exist for qubits only")
    a, b = psi.amplitudes
    return np.array([2 * (np.conj(a) * b).real,
                     2 * (np.conj(a) * b).imag,
                     abs(a) ** 2 - abs(b) ** 2])


class KSQubitModel:
    """Qubit model with cosine densities on Bloch hemispheres.

    mu_psi(x) = (n_psi . x)+ / pi and a projective measurement {phi, phi_perp}
    responds with the indicator of the hemisphere around n_phi. Reproduces
    the Born rule exactly, and the overlap of any two epistemic states equals
    the quantum overlap of the underlying states.
    """

    dim = 2

    def __init__(self, n_theta: int = 48, n_phi: int = 24):
        self.space = SphereSpace(n_theta, n_phi)
        pts, wts = self.space.frame([np.array([0.0, 0.0, 1.0])])
        residual = abs(float(wts @ self._density(np.array([0.0, 0.0, 1.0]), pts)) - 1.0)
        if residual > 1e-8:
            raise ValueError(
                f"resolution too coarse: density normalization residual {residual:.2e}")

    @staticmethod
    def _density(axis: np.ndarray, pts: np.ndarray) -> np.ndarray:
        return np.clip(pts @ axis, 0.0, None) / np.pi

    @staticmethod
    def _measurement_axes(m: Measurement) -> list:
        if m.dim != 2 or not m.complete:
            raise ValueError("the sphere model supports complete qubit measurements")
        axes = []
        for e in m.effects:
            if e.rank != 1:
                raise ValueError("the sphere model supports rank-1 qubit effects")
            axes.append(bloch_axis(e.vectors[0]))
        return axes

    def density_values(self, psi: PureState, pts: np.ndarray) -> np.ndarray:
        return self._density(bloch_axis(psi), pts)

    def epistemic(self, psi: PureState) -> EpistemicState:
        """Density sampled on a frame aligned to the state's own axis."""
        pts, wts = self.space.frame([bloch_axis(psi)])
        frame = SampledFrame(pts, wts)
        return EpistemicState(self.space, self._density(bloch_axis(psi), pts), frame=frame)

    def states_on_common_frame(self, states) -> list:
        """Epistemic states sampled on one shared frame so pointwise
        operations across them are meaningful.

        Only the first two axes can be aligned to the frame exactly; the
        remaining sampled densities pick up a small quadrature error and are
        renormalized on the frame, keeping downstream identities exact on
        the sampled measure.
        """
        axes = [bloch_axis(s) for s in states]
        pts, wts = self.space.frame(axes)
        frame = SampledFrame(pts, wts)
        out = []
        for a in axes:
            values = self._density(a, pts)
            values = values / float(wts @ values)
            out.append(EpistemicState(self.space, values, frame=frame))
        return out

    def born_residual(self, psi: PureState, m: Measurement) -> float:
        p = bloch_axis(psi)
        axes = self._measurement_axes(m)
        pts, wts = self.space.frame([p] + axes)
        mu = self._density(p, pts)
        resp = _hemisphere_responses(axes, pts)
        worst = 0.0
        for effect, xi in zip(m.effects, resp):
            pred = float(wts @ (xi * mu))
            worst = max(worst, abs(pred - effect.probability(psi)))
        return worst

    def predicted(self, m: Measurement, label: str, psi: PureState) -> float:
        p = bloch_axis(psi)
        axes = self._measurement_axes(m)
        pts, wts = self.space.frame([p] + axes)
        resp = _hemisphere_responses(axes, pts)
        for effect, xi in zip(m.effects, resp):
            if effect.label == label:
                return float(wts @ (xi * self._density(p, pts)))
        raise KeyError(f"no outcome labeled {label!r}")

    def min_integral(self, states) -> float:
        axes = [bloch_axis(s) for s in states]
        pts, wts = self.space.frame(axes)
        mus = [self._density(a, pts) for a in axes]
        return float(wts @ np.minimum.reduce(mus))

    def overlap_pair(self, psi: PureState, phi: PureState) -> float:
        return self.min_integral([psi, phi])

    def overlap_pair_lens(self, psi: PureState, phi: PureState) -> float:
        """Pairwise overlap via the lens geometry instead of pointwise minima.

        The overlap region splits along the bisector plane of the two Bloch
        axes; on each side the smaller density belongs to the farther axis.
        """
        p, q = bloch_axis(psi), bloch_axis(phi)
        if np.linalg.norm(p - q) < 1e-9:
            pts, wts = self.space.frame([p])
            return float(wts @ self._density(p, pts))
        pts, wts = self.space.frame([p, q])
        side = pts @ (p - q)
        lens_p = (side <= 0) * self._density(p, pts)   # p farther: mu_p smaller
        lens_q = (side > 0) * self._density(q, pts)
        return float(wts @ (lens_p + lens_q))

    def overlap_triple(self, a: PureState, b: PureState, c: PureState) -> float:
        return self.min_integral([a, b, c])

    def support_intersection(self, states, tol: float) -> float:
        axes = [bloch_axis(s) for s in states]
        pts, wts = self.space.frame(axes)
        mus = [self._density(a, pts) for a in axes]
        mask = np.ones(pts.shape[0], dtype=bool)
        for mu in mus:
            mask &= mu > tol
        return float(wts @ (mask * mus[0]))


def _hemisphere_responses(axes, pts) -> list:
    """Indicator responses for rank-1 qubit effects; the final outcome takes
    the complement so the responses sum to exactly 1 pointwise."""
    resp = [(pts @ a >= 0).astype(float) for a in axes[:-1]]
    total = np.sum(resp, axis=0) if resp else np.zeros(pts.shape[0])
    resp.append(np.clip(1.0 - total, 0.0, None))
    return resp


def ks_model_d2(n_theta: int = 48, n_phi: int = 24) -> KSQubitModel:
    """The sphere model at a given quadrature resolution."""
    return KSQubitModel(n_theta, n_phi)


# ---------------------------------------------------------------------------
# Model checks
# ---------------------------------------------------------------------------

def born_check(model, psi: PureState, m: Measurement) -> float:
    """Worst absolute deviation of model outcome probabilities from Born."""
    return model.born_residual(psi, m)


def overlap_pair(model, psi: PureState, phi: PureState) -> float:
    """Integral of the pointwise minimum of the two epistemic densities."""
    return model.overlap_pair(psi, phi)


def overlap_triple(model, a: PureState, b: PureState, c: PureState) -> float:
    """Integral of the pointwise minimum of three epistemic densities."""
    return model.overlap_triple(a, b, c)


def support_intersection_measure(model, states, tol: float = 1e-12) -> float:
    """Mass the first state assigns to the region where all densities exceed tol."""
    return model.support_intersection(states, tol)


def discriminating_measurement(a: PureState, b: PureState) -> Measurement:
    """The projective measurement in the eigenbasis of |a><a| - |b><b|,
    which realizes the optimal single-shot discrimination of a and b."""
    rho = np.outer(a.amplitudes, a.amplitudes.conj()) \
        - np.outer(b.amplitudes, b.amplitudes.conj())
    _, vecs = np.linalg.eigh(rho)
    from .qstate import basis_measurement

    return basis_measurement(OrthonormalBasis.from_matrix(vecs))


def verify_overlap_inequality(model, pairs, gate_tol: float = 1e-6) -> float:
    """Worst value of overlap_pair - quantum_overlap across the given pairs.

    Each pair is first gated on Born reproduction for its discriminating
    measurement; a failure raises BornPreconditionError rather than being
    reported as an overlap violation.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValueError("at least one pair is required")
    worst = -np.inf
    for psi, phi in pairs:
        m = discriminating_measurement(psi, phi)
        residual = max(model.born_residual(psi, m), model.born_residual(phi, m))
        if residual > gate_tol:
            raise BornPreconditionError(
                f"model fails the Born rule on a discriminating measurement "
                f"(residual {residual:.3e}); the overlap comparison is not meaningful")
        worst = max(worst, model.overlap_pair(psi, phi) - quantum_overlap(psi, phi))
    return float(worst)


def _shared_integrator(densities):
    """A common integrate(values) closure, after checking that all densities
    live on one space (and, for sampled sphere densities, one frame)."""
    states = [d for d in densities if isinstance(d, EpistemicState)]
    raw = [np.asarray(d, dtype=float).reshape(-1)
           for d in densities if not isinstance(d, EpistemicState)]
    if states:
        space = states[0].space
        if any(s.space != space for s in states):
            raise SpaceMismatchError("epistemic states live on different spaces")
        frame = states[0].frame
        for s in states:
            both_none = frame is None and s.frame is None
            same = frame is not None and s.frame is not None and frame.same_as(s.frame)
            if not (both_none or same):
                raise SpaceMismatchError(
                    "sphere densities were sampled on different frames; "
                    "use states_on_common_frame first")
        sizes = {s.values.size for s in states} | {v.size for v in raw}
        if len(sizes) != 1:
            raise SpaceMismatchError("densities have mismatched support sizes")
        if frame is not None:
            return lambda values: float(frame.weights @ values)
        return lambda values: space.integrate(values)
    sizes = {v.size for v in raw}
    if len(sizes) != 1:
        raise SpaceMismatchError("densities have mismatched support sizes")
    return lambda values: float(np.sum(values))


def _values_of(state) -> np.ndarray:
    if isinstance(state, EpistemicState):
        return state.values
    return np.asarray(state, dtype=float).reshape(-1)


def bonferroni_check(reference, labeled_states) -> float:
    """Union-bound slack for a labeled family of epistemic states.

    ``labeled_states`` maps (group, index) labels to epistemic states (or
    raw densities on a shared discrete space); ``reference`` is the state
    whose total mass caps the union. Returns

        1 + sum_{groups g < h, i, j} Int min(ref, e_gi, e_hj)
          + sum_{g, i < j} Int min(e_gi, e_gj)
          - sum_{g, i} Int min(ref, e_gi)

    which is nonnegative for every valid input; a return below -1e-9 means
    a normalization invariant was violated upstream.
    """
    items = sorted(labeled_states.items())
    integrate = _shared_integrator([reference] + [s for _, s in items])
    ref = _values_of(reference)
    vals = {label: _values_of(s) for label, s in items}

    lhs = sum(integrate(np.minimum(ref, v)) for v in vals.values())
    rhs = 1.0
    labels = [label for label, _ in items]
    for a_idx in range(len(labels)):
        la = labels[a_idx]
        for b_idx in range(a_idx + 1, len(labels)):
            lb = labels[b_idx]
            if la[0] == lb[0]:
                rhs += integrate(np.minimum(vals[la], vals[lb]))
            else:
                rhs += integrate(np.minimum.reduce([ref, vals[la], vals[lb]]))
    return float(rhs - lhs)


def response_min_bound(model, states, m: Measurement) -> float:
    """Slack of Int min_j mu_j <= sum_i P(f_i | psi_i), outcomes matched to
    states in order. Nonnegative whenever the model's responses are valid."""
    states = list(states)
    if len(states) != len(m.effects):
        raise ValueError(
            f"need one state per outcome: {len(states)} states, {len(m.effects)} outcomes")
    if isinstance(model, DiscreteModel):
        ResponseFunction(model.space, model.response(m))  # invariant gate
    lhs = model.min_integral(states)
    rhs = sum(model.predicted(m, e.label, s) for e, s in zip(m.effects, states))
    return float(rhs - lhs)


# ---------------------------------------------------------------------------
# JSON-backed abstract models (no quantum labels, structural checks only)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbstractDiscreteModel:
    """A discrete model given purely by labeled tables, as loaded from JSON."""

    points: int
    states: dict
    responses: dict

    def verify(self) -> dict:
        """Structural report: normalization residuals, response residuals,
        range violations, and the pairwise overlap matrix of the states."""
        state_residuals = {}
        range_ok = True
        for label, w in self.states.items():
            state_residuals[label] = abs(float(np.sum(w)) - 1.0)
            if np.any(np.asarray(w) < 0):
                range_ok = False
        response_residuals = {}
        for mlabel, table in self.responses.items():
            stack = np.stack([np.asarray(v, dtype=float) for v in table.values()])
            if np.any(stack < 0) or np.any(stack > 1):
                range_ok = False
            response_residuals[mlabel] = float(np.max(np.abs(stack.sum(axis=0) - 1.0)))
        labels = sorted(self.states)
        overlaps = {}
        for i, la in enumerate(labels):
            for lb in labels[i + 1:]:
                overlaps[f"{la}|{lb}"] = float(
                    np.minimum(self.states[la], self.states[lb]).sum())
        return {
            "points": self.points,
            "state_normalization_residuals": state_residuals,
            "response_normalization_residuals": response_residuals,
            "values_in_range": range_ok,
            "pairwise_overlaps": overlaps,
        }


def abstract_model_from_obj(obj: dict) -> AbstractDiscreteModel:
    n = int(obj["points"])
    states = {}
    for label, w in obj["states"].items():
        arr = np.asarray(w, dtype=float)
        if arr.size != n:
            raise ValueError(f"state {label!r} has {arr.size} weights, expected {n}")
        states[label] = arr
    responses = {}
    for mlabel, table in obj.get("responses", {}).items():
        responses[mlabel] = {out: np.asarray(v, dtype=float) for out, v in table.items()}
        for out, arr in responses[mlabel].items():
            if arr.size != n:
                raise ValueError(f"response {mlabel!r}/{out!r} has wrong length")
    return AbstractDiscreteModel(points=n, states=states, responses=responses)
