"""Finite rings, orbit quotients, primes by two routes, and localization.

A unit subgroup G acting on a finite ring A yields the quotient hyperring
A/G with [a] + [b] = {[g1 a + g2 b]}.  Primes come out of two independent
computations that must agree: kernels of enumerated homomorphisms into the
Krasner hyperfield, and the complement-is-a-monoid test over the ideal
family.
"""

from hyperalg.finring import (
    basic_open,
    hyperring_isomorphism,
    localize,
    maximal_ideals,
    primes,
    quotient,
    vanishing_set,
    zmod,
)
from hyperalg.hypercore import check_hyperring

print("== the quotient (Z/5)/{1,4} ==")
q = quotient(zmod(5), [1, 4])
print("carrier:", [q.label(i) for i in range(q.n)])
print("[1] + [1] =", sorted(q.label(c) for c in q.add_raw(1, 1)))
print("hyperring axioms:", "pass" if check_hyperring(q).passed else "FAIL")

print()
print("== primes of Z/12, two routes ==")
r = zmod(12)
res = primes(r, method="both")
for p in res.primes:
    print("  prime:", sorted(p))
print("routes agree:", res.via_homs == res.via_ideals)

print()
print("== V(I) and D(a) ==")
two = frozenset({0, 2, 4, 6, 8, 10})
print("V((2)) =", [sorted(p) for p in vanishing_set(res.primes, two)])
print("D(2)   =", [sorted(p) for p in basic_open(r, res.primes, 2)])
print("V((0)) =", [sorted(p) for p in vanishing_set(res.primes, {0})])

print()
print("== localization ==")
for ring, prime, model in (
    (zmod(6), frozenset({0, 2, 4}), zmod(2)),
    (zmod(12), frozenset({0, 3, 6, 9}), zmod(3)),
):
    loc = localize(ring, prime)
    iso = hyperring_isomorphism(loc, model)
    print(
        f"{ring.descriptor} at {sorted(prime)}: carrier {[loc.label(i) for i in range(loc.n)]},"
        f" iso to {model.descriptor}: {iso is not None},"
        f" maximal ideals: {len(maximal_ideals(loc))}"
    )
    print("   note:", loc.note)
