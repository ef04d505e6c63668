"""Closed-form upper bounds on the overlap ratio k.

For a model reproducing quantum statistics in dimension d >= 4 with
omega_C >= k * omega_Q for all state pairs, the binding bound at a prime
power d' <= d is

    k <= (1/d') (1 + sqrt(1 - 1/d'))

which is strictly below the coarser 2/d' and, via the prime between
floor(d/2) and d, below 4/(d - 1). Noise-adjusted variants weaken the
bound by the measured misfire averages eps1 (triples) and eps2
(same-basis pairs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mub import is_prime_power, largest_prime_power_leq


@dataclass(frozen=True)
class KBoundReport:
    dim: int
    subdim: int
    exact_bound: float
    coarse_two_over_subdim: float
    coarse_four_over_dim_minus_one: float
    noise_adjusted: float | None = None
    noise_adjusted_coarse: float | None = None
    threshold_ok: bool | None = None


@dataclass(frozen=True)
class NoisyBound:
    dim: int
    subdim: int
    eps1: float
    eps2: float
    tight: float
    coarse: float


@dataclass(frozen=True)
class AveragedKReport:
    average: float
    bound: float
    satisfied: bool
    binding: bool


def _exact(dsub: int) -> float:
    return (1.0 / dsub) * (1.0 + math.sqrt(1.0 - 1.0 / dsub))


def noiseless_bound(d: int) -> KBoundReport:
    """The noiseless k bound for dimension d >= 4.

    Dimensions 2 and 3 are rejected: a maximally epistemic qubit model
    exists, and the three-dimensional case is handled by the dedicated
    certificate pipeline (see d3cert).
    """
    if d < 4:
        raise ValueError(
            "d must be >= 4 (d=3 has its own certificate pipeline; d=2 admits a "
            "maximally epistemic model)")
    dsub = largest_prime_power_leq(d)
    return KBoundReport(
        dim=d,
        subdim=dsub,
        exact_bound=_exact(dsub),
        coarse_two_over_subdim=2.0 / dsub,
        coarse_four_over_dim_minus_one=4.0 / (d - 1),
    )


@dataclass(frozen=True)
class AsymptoticRow:
    dim: int
    subdim: int
    exact_bound: float
    bound_times_subdim: float


def asymptotic_check(dims) -> list:
    """Bound table over a list of dimensions; the bound decays like 2/d."""
    rows = []
    for d in dims:
        rep = noiseless_bound(d)
        rows.append(AsymptoticRow(d, rep.subdim, rep.exact_bound,
                                  rep.exact_bound * rep.subdim))
    return rows


def noisy_bound(d: int, eps1: float, eps2: float) -> NoisyBound:
    """Noise-adjusted k bound at misfire averages eps1 and eps2.

    The tight form is
        (1/d) (1 + d^2 (d-1) ((3/2) d eps1 + eps2)) (1 + sqrt(1 - 1/d))
    and the coarse form 2/d + d^2 (3 d eps1 + 2 eps2) always dominates it.
    Non-prime-power dimensions are evaluated at the largest prime power
    below them, with the subspace embedding understood.
    """
    if d < 4:
        raise ValueError("d must be >= 4")
    if eps1 < 0 or eps2 < 0:
        raise ValueError("noise averages must be nonnegative")
    dsub = d if is_prime_power(d) else largest_prime_power_leq(d)
    s = 1.5 * dsub * eps1 + eps2
    tight = (1.0 / dsub) * (1.0 + dsub * dsub * (dsub - 1.0) * s) \
        * (1.0 + math.sqrt(1.0 - 1.0 / dsub))
    coarse = 2.0 / dsub + dsub * dsub * (3.0 * dsub * eps1 + 2.0 * eps2)
    return NoisyBound(dim=d, subdim=dsub, eps1=eps1, eps2=eps2,
                      tight=tight, coarse=coarse)


def noise_budget(d: int) -> float:
    """Right-hand side of the noise admissibility condition
    3 d eps1 + 2 eps2 < (2/(d-1)) (1 - sqrt(1 - 1/d) - 1/d^2)."""
    if d < 4 or not is_prime_power(d):
        raise ValueError("d must be a prime power >= 4")
    return (2.0 / (d - 1.0)) * (1.0 - math.sqrt(1.0 - 1.0 / d) - 1.0 / d ** 2)


def noise_threshold(d: int) -> float:
    """Largest symmetric error eps = eps1 = eps2 keeping the tight bound under 1.

    Solves 3 d eps + 2 eps = noise_budget(d):
        eps = 2 (1 - sqrt(1 - 1/d) - 1/d^2) / ((d - 1) (3 d + 2)).
    """
    return noise_budget(d) / (3.0 * d + 2.0)


def averaged_k_bound(values, d: int) -> AveragedKReport:
    """Mean of d^2 per-pair overlap ratios against the 4/(d-1) bound.

    ``binding`` is False when 4/(d-1) >= 1, in which case the bound carries
    no information because each ratio is at most 1 anyway.
    """
    vals = list(values)
    if len(vals) != d * d:
        raise ValueError(f"expected exactly {d * d} values, got {len(vals)}")
    for v in vals:
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"ratio {v!r} is outside [0, 1]")
    average = sum(vals) / len(vals)
    bound = 4.0 / (d - 1.0)
    return AveragedKReport(
        average=average,
        bound=bound,
        satisfied=average < bound,
        binding=bound < 1.0,
    )
