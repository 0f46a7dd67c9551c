"""The prime spectrum as a space of homomorphisms into the Krasner hyperfield.

Kernels biject homs onto primes, and the evaluation topology on the hom-set
(the coarsest making every evaluation map continuous, for the fixed opens
{}, {1}, {0,1} on the target) reproduces the Zariski topology exactly.
Ring homomorphisms act contravariantly and continuously.
"""

from hyperalg.finring import polyquot, product, zmod, zmod_projection
from hyperalg.homspace import (
    compare_spec_affine,
    enumerate_homs,
    induced_map,
    induced_map_continuous,
)
from hyperalg.hypercore import KRASNER, SIGNS

print("== homs out of Z/12 ==")
for h in enumerate_homs(zmod(12), KRASNER):
    print("  values:", h.table, " kernel:", sorted(h.kernel()))

print()
print("Hom(Z/7, K) has", len(enumerate_homs(zmod(7), KRASNER)), "point (fields are single points)")
print("Hom(Z/4, S) has", len(enumerate_homs(zmod(4), SIGNS)), "points (no ordering survives 1+1+1 = -1)")

print()
print("== spectrum vs evaluation topology ==")
for ring in (zmod(12), zmod(30), polyquot(2, [1, 1, 1]), product(zmod(4), zmod(9))):
    verdict, spec, aff = compare_spec_affine(ring)
    print(
        f"{ring.descriptor:28s} points={len(spec.points)}  opens={len(spec.opens)}"
        f"  homeomorphic={verdict.homeomorphic}"
    )

print()
print("== induced maps are contravariant and continuous ==")
phi = zmod_projection(12, 4)
for g, h in induced_map(phi, KRASNER).items():
    print(f"  hom with kernel {sorted(g.kernel())} of Z/4  ->  kernel {sorted(h.kernel())} of Z/12")
print("continuous:", induced_map_continuous(phi, KRASNER))
