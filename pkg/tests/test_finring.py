"""Finite rings, quotient hyperrings, primes, and localization, with brute oracles."""

import itertools

import pytest

from hyperalg.finring import (
    FiniteRing,
    QuotientHyperring,
    RingHom,
    UnitSubgroup,
    all_ideals,
    basic_open,
    hyperring_isomorphism,
    ideal_closure,
    identity_hom,
    is_ideal,
    is_prime_ideal,
    localize,
    maximal_ideals,
    parse_structure,
    polyquot,
    primes,
    product,
    quotient,
    vanishing_set,
    zmod,
    zmod_projection,
)
from hyperalg.hypercore import KRASNER, check_hyperfield, check_hyperring, finite_set


def test_zmod_tables():
    r = zmod(6)
    assert r.add(4, 5) == 3 and r.mul(4, 5) == 2
    assert r.neg(2) == 4
    assert sorted(r.units()) == [1, 5]


def test_bad_tables_rejected():
    with pytest.raises(ValueError):
        FiniteRing([[0, 1], [1, 1]], [[0, 0], [0, 1]], ["0", "1"], "broken")


def test_polyquot_f2_x_squared():
    r = polyquot(2, [0, 0, 1])  # F2[x]/(x^2)
    assert r.n == 4
    x = 2  # digits (0, 1)
    assert r.mul(x, x) == 0
    assert r.label(3) == "x+1"


def test_product_is_cyclic_when_coprime():
    r = product(zmod(2), zmod(3))
    assert hyperring_isomorphism(r, zmod(6)) is not None


def test_quotient_z5_units():
    q = quotient(zmod(5), [1, 4])
    assert q.n == 3 and [q.label(i) for i in range(3)] == ["[0]", "[1]", "[2]"]
    # oracle: exhaust c in {1+1, 1+4, 4+1, 4+4} mod 5 = {2, 0, 3}; [3] = [2]
    expected = {q.orbit_of(c % 5) for c in (1 + 1, 1 + 4, 4 + 1, 4 + 4)}
    assert expected == {0, 2}
    assert q.add(1, 1) == finite_set({0, 2})
    assert check_hyperfield(q).passed


def test_quotient_trivial_group_is_the_ring():
    r = zmod(6)
    q = quotient(r, [1])
    assert q.n == 6
    for a in range(6):
        for b in range(6):
            assert q.add_raw(a, b) == frozenset([r.add(a, b)])
            assert q.mul(a, b) == r.mul(a, b)


def test_quotient_field_by_all_units_is_krasner():
    q = quotient(zmod(7), range(1, 7))
    assert q.n == 2
    for a in range(2):
        for b in range(2):
            assert q.add(a, b) == KRASNER.add(a, b)
            assert q.mul(a, b) == KRASNER.mul(a, b)


def test_quotient_passes_hyperring_check():
    for q in (quotient(zmod(5), [1, 4]), quotient(zmod(8), [1, 3, 5, 7])):
        assert check_hyperring(q).passed


def brute_force_primes(R):
    """Oracle: filter every subset containing zero by the definitions."""
    H = R.as_hyperring() if isinstance(R, FiniteRing) else R
    rest = [x for x in H.elements() if x != H.zero]
    out = []
    for k in range(len(rest) + 1):
        for extra in itertools.combinations(rest, k):
            I = frozenset({H.zero, *extra})
            if is_ideal(H, I) and is_prime_ideal(H, I):
                out.append(I)
    return sorted(out, key=sorted)


def test_primes_z12():
    res = primes(zmod(12), method="both")
    two = frozenset({0, 2, 4, 6, 8, 10})
    three = frozenset({0, 3, 6, 9})
    assert res.primes == sorted([two, three], key=sorted)
    assert res.via_ideals == res.via_homs == res.primes
    assert brute_force_primes(zmod(12)) == res.primes


def test_primes_field_and_quotient():
    assert primes(zmod(7)).primes == [frozenset({0})]
    q = quotient(zmod(5), [1, 4])
    assert primes(q, method="both").primes == [frozenset({q.zero})]
    assert brute_force_primes(q) == [frozenset({q.zero})]


def test_primes_polyquot():
    r = polyquot(2, [0, 0, 1])  # unique prime (x)
    res = primes(r, method="both")
    assert res.primes == [frozenset({0, 2})]


def test_primes_large_ring_uses_principal_route():
    r = zmod(30)
    res = primes(r, method="both")
    assert len(res.primes) == 3
    assert res.via_ideals == res.via_homs


def test_maximal_ideals_are_prime():
    for R in (zmod(12), zmod(8), quotient(zmod(5), [1, 4])):
        H = R.as_hyperring() if isinstance(R, FiniteRing) else R
        for m in maximal_ideals(H):
            assert is_prime_ideal(H, m)


def test_ideal_closure():
    r = zmod(12).as_hyperring()
    assert ideal_closure(r, [8]) == frozenset({0, 4, 8})
    assert ideal_closure(r, []) == frozenset({0})
    assert len(all_ideals(r)) == 6  # divisors of 12


def test_vanishing_and_basic_open():
    r = zmod(12)
    ps = primes(r).primes
    two = frozenset({0, 2, 4, 6, 8, 10})
    three = frozenset({0, 3, 6, 9})
    assert vanishing_set(ps, two) == [two]
    assert basic_open(r, ps, 2) == [three]
    assert vanishing_set(ps, {0}) == ps
    assert vanishing_set(ps, set(range(12))) == []


def brute_localization_classes(H, prime):
    """Oracle: directly group pairs by the defining relation."""
    S = [a for a in H.elements() if a not in prime]
    pairs = [(r, s) for r in H.elements() for s in S]
    classes = []
    for p in pairs:
        hit = None
        for cl in classes:
            q = cl[0]
            if any(
                H.mul(H.mul(c, p[0]), q[1]) == H.mul(H.mul(c, q[0]), p[1]) for c in S
            ):
                hit = cl
                break
        if hit is None:
            classes.append([p])
        else:
            hit.append(p)
    return classes


def test_localize_z6_at_2():
    r = zmod(6)
    two = frozenset({0, 2, 4})
    loc = localize(r, two)
    assert loc.n == 2
    assert hyperring_isomorphism(loc, zmod(2)) is not None
    assert len(maximal_ideals(loc)) == 1
    assert len(brute_localization_classes(r.as_hyperring(), two)) == 2
    assert check_hyperring(loc).passed
    assert "S = R" in loc.note


def test_localize_z12_at_3():
    loc = localize(zmod(12), frozenset({0, 3, 6, 9}))
    assert loc.n == 3
    assert hyperring_isomorphism(loc, zmod(3)) is not None
    assert len(maximal_ideals(loc)) == 1


def test_localize_hyperfield_at_zero_is_itself():
    q = quotient(zmod(5), [1, 4])
    loc = localize(q, frozenset({q.zero}))
    assert hyperring_isomorphism(loc, q) is not None


def test_localize_rejects_non_prime():
    with pytest.raises(ValueError):
        localize(zmod(12), frozenset({0, 4, 8}))  # (4) is not prime


def test_ring_homs():
    pi = zmod_projection(12, 4)
    assert pi(7) == 3
    with pytest.raises(ValueError):
        RingHom(zmod(12), zmod(5), tuple(i % 5 for i in range(12)))
    ident = identity_hom(zmod(12))
    assert pi.compose(ident).values == pi.values


def test_parse_structure():
    assert parse_structure("zmod(12)").descriptor == "zmod(12)"
    q = parse_structure("quotient(zmod(5),[1,4])")
    assert isinstance(q, QuotientHyperring) and q.n == 3
    r = parse_structure("product(zmod(2),polyquot(3,[1,1]))")
    assert r.n == 6
    with pytest.raises(ValueError):
        parse_structure("zmod(12) extra")
    with pytest.raises(ValueError):
        parse_structure("frobnicate(3)")


def test_unit_subgroup_validation():
    with pytest.raises(ValueError):
        UnitSubgroup(zmod(12), frozenset({1, 2}))  # 2 is not a unit
    with pytest.raises(ValueError):
        UnitSubgroup(zmod(12), frozenset({5}))  # missing 1
