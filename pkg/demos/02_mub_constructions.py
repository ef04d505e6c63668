"""Building maximal families of mutually unbiased bases.

Constructions exist here for d = 2, every odd prime, and the composite
prime powers 4, 8, 9. Each family holds d + 1 bases whose cross-basis
fidelities all equal 1/d; the verifier reports the worst deviation.
"""

import epioverlap as ep
from epioverlap.mub import embed_family, largest_prime_power_leq

for dim in (2, 3, 4, 5, 7, 8, 9):
    family = ep.generate_mub(dim)
    check = ep.verify_mub(family)
    print(f"d={dim}: {family.count} bases, "
          f"max cross-fidelity deviation {check.max_cross_deviation:.2e}, "
          f"orthonormality {check.orthonormality_deviation:.2e}")

try:
    ep.generate_mub(6)
except ep.UnsupportedDimensionError as exc:
    print(f"\nd=6: {exc}")

# Any dimension >= 4 contains a prime-power subspace bigger than half of it,
# which is what lets the bound machinery cover composite dimensions.
print("\nlargest prime power below selected dimensions:")
for d in (10, 24, 100, 1000):
    sub = largest_prime_power_leq(d)
    print(f"  d={d}: d'={sub}  (d'/d = {sub / d:.3f})")

# Zero-padding a family into a larger space preserves every inner product.
embedded = embed_family(ep.generate_mub(4), 10)
print(f"\nd=4 family embedded into d=10: subspace_dim={embedded.subspace_dim}, "
      f"deviation {ep.verify_mub(embedded).max_cross_deviation:.2e}")
