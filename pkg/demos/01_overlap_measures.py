"""Distinguishing preparations: classical and quantum overlap measures.

A deck of cards drawn under two different rules is hard to tell apart for
the same reason two non-orthogonal quantum states are: the underlying
distributions overlap. This walk-through computes both sides of that
analogy and the optimal single-shot guessing probabilities.
"""

import numpy as np

import epioverlap as ep
from epioverlap.qstate import DiscreteDistribution, basis_state

# --- the card machine ------------------------------------------------------
# Setting 1 draws a uniformly random red card, setting 2 a uniformly random
# ace. Indices 0-25 are the red cards; the four aces sit at 0, 13, 26, 39.
red = np.zeros(52)
red[:26] = 1 / 26
aces = np.zeros(52)
aces[[0, 13, 26, 39]] = 1 / 4

p, q = DiscreteDistribution(red), DiscreteDistribution(aces)
print("card machine:")
print(f"  classical overlap       {ep.classical_overlap(p, q):.6f}  (= 1/13)")
print(f"  classical trace distance {ep.classical_trace_distance(p, q):.6f}")
guess = 0.5 * (1 + ep.classical_trace_distance(p, q))
print(f"  best guessing probability {guess:.6f}")

# --- the quantum analogue ---------------------------------------------------
psi = basis_state(2, 0)
phi = ep.PureState(np.array([1, 1]) / np.sqrt(2))
print("\nqubit pair |0> and |+>:")
print(f"  fidelity                {ep.fidelity(psi, phi):.6f}")
print(f"  quantum overlap         {ep.quantum_overlap(psi, phi):.6f}")
print(f"  Helstrom success        {ep.helstrom_success(psi, phi):.6f}")

# overlap and trace distance always split the unit interval
for seed in range(3):
    a, b = ep.random_state(3, 2 * seed), ep.random_state(3, 2 * seed + 1)
    total = ep.quantum_overlap(a, b) + ep.quantum_trace_distance(a, b)
    print(f"  seed {seed}: overlap + distance = {total:.15f}")

# unbiased bases sit at fidelity 1/d
fam = ep.generate_mub(3)
v, w = fam.bases[1].vectors[0], fam.bases[2].vectors[0]
print(f"\ncross-basis fidelity in d=3: {ep.fidelity(v, w):.6f}  (= 1/3)")
