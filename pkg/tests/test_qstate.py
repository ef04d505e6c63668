"""Tests for states, bases, measurements, and the overlap measures."""

import json
from decimal import Decimal, getcontext

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import epioverlap as ep
from epioverlap.qstate import (
    DiscreteDistribution,
    basis_state,
    basis_from_obj,
    basis_to_obj,
    state_from_obj,
    state_to_obj,
)

getcontext().prec = 50


def dec_sqrt(x: str) -> float:
    return float(Decimal(x).sqrt())


class TestPureState:
    def test_normalization_enforced(self):
        with pytest.raises(ValueError):
            ep.PureState(np.array([1.0, 1.0]))

    def test_dim_floor(self):
        with pytest.raises(ValueError):
            ep.PureState(np.array([1.0]))

    def test_normalized_constructor(self):
        psi = ep.PureState.normalized([3.0, 4.0])
        assert np.allclose(psi.amplitudes, [0.6, 0.8])

    def test_immutable(self):
        psi = basis_state(2, 0)
        with pytest.raises(ValueError):
            psi.amplitudes[0] = 0.0


class TestFidelity:
    def test_identical(self):
        psi = basis_state(3, 0)
        assert ep.fidelity(psi, psi) == 1.0

    def test_orthogonal(self):
        assert ep.fidelity(basis_state(3, 0), basis_state(3, 1)) == 0.0

    def test_mub_pair_d3(self):
        fam = ep.generate_mub(3)
        v = fam.bases[1].vectors[0]
        w = fam.bases[2].vectors[0]
        assert abs(ep.fidelity(v, w) - 1 / 3) < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ep.DimensionMismatchError):
            ep.fidelity(basis_state(2, 0), basis_state(3, 0))

    @given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.sampled_from([2, 3, 5]))
    @settings(max_examples=40, deadline=None)
    def test_symmetric(self, s1, s2, dim):
        a, b = ep.random_state(dim, s1), ep.random_state(dim, s2)
        assert ep.fidelity(a, b) == pytest.approx(ep.fidelity(b, a), abs=1e-15)


class TestQuantumOverlap:
    def test_identical(self):
        psi = basis_state(2, 0)
        assert ep.quantum_overlap(psi, psi) == 1.0

    def test_orthogonal(self):
        assert ep.quantum_overlap(basis_state(2, 0), basis_state(2, 1)) == 0.0

    def test_fidelity_quarter(self):
        # states with |<a|b>|^2 = 1/4 in d=4: overlap is 1 - sqrt(3/4)
        a = basis_state(4, 0)
        b = ep.PureState(np.array([0.5, 0.5, 0.5, 0.5], dtype=complex))
        expected = 1 - dec_sqrt("0.75")
        assert ep.quantum_overlap(a, b) == pytest.approx(expected, abs=1e-14)

    @given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    @settings(max_examples=40, deadline=None)
    def test_overlap_plus_distance_is_one(self, s1, s2):
        a, b = ep.random_state(3, s1), ep.random_state(3, s2)
        assert ep.quantum_overlap(a, b) + ep.quantum_trace_distance(a, b) == 1.0


class TestHelstrom:
    def test_orthogonal(self):
        assert ep.helstrom_success(basis_state(2, 0), basis_state(2, 1)) == 1.0

    def test_identical(self):
        psi = basis_state(2, 0)
        assert ep.helstrom_success(psi, psi) == 0.5

    def test_fidelity_half(self):
        a = basis_state(2, 0)
        b = ep.PureState(np.array([1, 1]) / np.sqrt(2))
        expected = 0.5 * (1 + dec_sqrt("0.5"))
        assert ep.helstrom_success(a, b) == pytest.approx(expected, abs=1e-14)

    @given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    @settings(max_examples=40, deadline=None)
    def test_matches_overlap_form(self, s1, s2):
        a, b = ep.random_state(2, s1), ep.random_state(2, s2)
        assert ep.helstrom_success(a, b) == pytest.approx(
            1 - ep.quantum_overlap(a, b) / 2, abs=1e-15)


class TestBornProbability:
    def test_matches_fidelity_cases(self):
        fam = ep.generate_mub(3)
        assert ep.born_probability(basis_state(3, 0), basis_state(3, 0)) == 1.0
        assert ep.born_probability(basis_state(3, 0), basis_state(3, 1)) == 0.0
        assert ep.born_probability(fam.bases[1].vectors[0],
                                   fam.bases[2].vectors[0]) == pytest.approx(
            1 / 3, abs=1e-12)


class TestClassicalOverlap:
    def test_equal(self):
        p = DiscreteDistribution(np.full(10, 0.1))
        assert ep.classical_overlap(p, p) == pytest.approx(1.0, abs=1e-15)

    def test_disjoint(self):
        p = DiscreteDistribution([0.5, 0.5, 0, 0])
        q = DiscreteDistribution([0, 0, 0.5, 0.5])
        assert ep.classical_overlap(p, q) == 0.0

    def test_card_deck(self):
        # 52 cards: indices 0-25 red (hearts then diamonds), aces at 0, 13, 26, 39
        red = np.zeros(52)
        red[:26] = 1 / 26
        aces = np.zeros(52)
        aces[[0, 13, 26, 39]] = 1 / 4
        brute = sum(min(red[i], aces[i]) for i in range(52))
        got = ep.classical_overlap(DiscreteDistribution(red), DiscreteDistribution(aces))
        assert got == pytest.approx(brute, abs=1e-15)
        assert got == pytest.approx(2 * min(1 / 26, 1 / 4), abs=1e-15)
        assert got == pytest.approx(1 / 13, abs=1e-15)

    def test_support_mismatch(self):
        with pytest.raises(ep.DimensionMismatchError):
            ep.classical_overlap(DiscreteDistribution([1.0]), DiscreteDistribution([0.5, 0.5]))

    def test_complements_trace_distance(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            p = DiscreteDistribution(rng.dirichlet(np.ones(8)))
            q = DiscreteDistribution(rng.dirichlet(np.ones(8)))
            assert ep.classical_overlap(p, q) == pytest.approx(
                1 - ep.classical_trace_distance(p, q), abs=1e-12)
            assert ep.classical_overlap(p, q) == pytest.approx(
                ep.classical_overlap(q, p), abs=1e-15)

    def test_unity_iff_equal(self):
        rng = np.random.default_rng(6)
        p = rng.dirichlet(np.ones(6))
        q = p.copy()
        q[0] += 1e-3
        q[1] -= 1e-3
        dp, dq = DiscreteDistribution(p), DiscreteDistribution(q)
        assert ep.classical_overlap(dp, DiscreteDistribution(p.copy())) > 1 - 1e-12
        assert ep.classical_overlap(dp, dq) < 1 - 1e-4


class TestDistributionInvariants:
    def test_negative_mass_rejected(self):
        with pytest.raises(ValueError):
            DiscreteDistribution([1.5, -0.5])

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError):
            DiscreteDistribution([0.5, 0.4])


class TestRandomObjects:
    def test_state_determinism(self):
        assert np.array_equal(ep.random_state(2, 7).amplitudes,
                              ep.random_state(2, 7).amplitudes)

    def test_unitary_determinism(self):
        assert np.array_equal(ep.random_unitary(3, 11).matrix,
                              ep.random_unitary(3, 11).matrix)

    def test_unitary_is_orthonormal_basis(self):
        basis = ep.random_unitary(5, 3)  # constructor enforces the invariants
        gram = basis.matrix.conj().T @ basis.matrix
        assert np.max(np.abs(gram - np.eye(5))) < 1e-12

    def test_haar_mean_fidelity(self):
        # E |<psi|e0>|^2 = 1/d for Haar states; single-draw law is Beta(1, d-1)
        d, n = 3, 100_000
        e0 = basis_state(d, 0)
        total = 0.0
        for k in range(n):
            total += ep.fidelity(ep.random_state(d, k), e0)
        mean = total / n
        sigma = np.sqrt((d - 1) / (d ** 2 * (d + 1)) / n)
        assert abs(mean - 1 / d) < 3 * sigma

    def test_gram_matrix_positive(self):
        rng_seeds = range(10)
        states = [ep.random_state(4, s) for s in rng_seeds]
        m = np.column_stack([s.amplitudes for s in states])
        gram = m.conj().T @ m
        assert np.min(np.linalg.eigvalsh(gram)) > -1e-10


class TestMeasurement:
    def test_basis_measurement_completeness(self):
        m = ep.basis_measurement(ep.random_unitary(3, 2))
        psi = ep.random_state(3, 9)
        assert m.probabilities(psi).sum() == pytest.approx(1.0, abs=1e-12)

    def test_non_orthogonal_effects_rejected(self):
        v = basis_state(3, 0)
        w = ep.PureState(np.array([1, 1, 0]) / np.sqrt(2))
        with pytest.raises(ValueError):
            ep.Measurement(3, (
                ep.ProjectiveEffect("a", (v,)),
                ep.ProjectiveEffect("b", (w,)),
            ), complete=False)

    def test_incomplete_sum_rejected(self):
        with pytest.raises(ValueError):
            ep.Measurement(3, (ep.ProjectiveEffect("a", (basis_state(3, 0),)),),
                           complete=True)


class TestSerialization:
    def test_state_round_trip(self):
        psi = ep.random_state(4, 13)
        obj = state_to_obj(psi)
        assert obj["dim"] == 4 and len(obj["amplitudes"]) == 4
        back = state_from_obj(json.loads(json.dumps(obj)))
        assert np.allclose(back.amplitudes, psi.amplitudes)

    def test_basis_round_trip(self):
        basis = ep.random_unitary(3, 17)
        back = basis_from_obj(json.loads(json.dumps(basis_to_obj(basis))))
        assert np.allclose(back.matrix, basis.matrix)
