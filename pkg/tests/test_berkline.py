"""The analytic affine line: evaluation, witnesses, branch law, coproduct checks."""

import itertools
import random
from fractions import Fraction

import pytest

from hyperalg.berkline import (
    BranchError,
    BranchSum,
    KrasnerLinePoint,
    WitnessError,
    berk_hypersum,
    branch_hypergroup_iso,
    branch_limit,
    branch_membership,
    branch_point,
    cc_consistent_set,
    cc_membership,
    cc_reduction_compat,
    check_witness_hom,
    diamond_matches_tropical,
    diamond_sum,
    evaluate,
    factored,
    FACTORED_ZERO,
    finite_section_and_kernel,
    generic_ray,
    make_witness,
    monomial_valuation,
    point_from_value,
    point_inverse,
    reduce_point,
    section_point,
    tree_dot,
    trivial_point,
)
from hyperalg.finring import primes, zmod
from hyperalg.hypercore import NEG_INF, TROPICAL, hom_check, hyperadd, is_neg_inf
from hyperalg.polyq import PolyQ, poly_from_string

F = Fraction
T = PolyQ([0, 1])


# ---------------------------------------------------------------------------
# evaluation


def test_evaluate_cases():
    f = factored([0, 0, -1])  # T^2 (T - 1): roots stored as factors (T + b)
    assert f.to_polyq() == poly_from_string("x^3 - x^2")
    assert evaluate(generic_ray(2), f) == 6  # degree 3 times 2
    assert evaluate(branch_point(0, -1), f) == -2  # multiplicity 2 at T
    assert evaluate(trivial_point(), f) == 0
    assert evaluate(branch_point(-1, F(-1, 2)), f) == F(-1, 2)
    assert evaluate(branch_point(5, -1), f) == 0
    assert is_neg_inf(evaluate(branch_limit(0), f))
    assert evaluate(branch_limit(3), f) == 0
    assert is_neg_inf(evaluate(generic_ray(1), FACTORED_ZERO))


def test_evaluate_accepts_plain_polynomials():
    f = poly_from_string("x^2 + 1")  # no rational roots: value 0 on branches
    assert evaluate(branch_point(0, -3), f) == 0
    assert evaluate(generic_ray(F(1, 2)), f) == 1
    assert is_neg_inf(evaluate(trivial_point(), PolyQ()))


def test_point_validation():
    with pytest.raises(ValueError):
        generic_ray(-1)
    with pytest.raises(ValueError):
        branch_point(0, 1)
    with pytest.raises(ValueError):
        point_from_value(F(0))


def test_t_values():
    assert generic_ray(F(3, 2)).t_value() == F(3, 2)
    assert branch_point(0, -2).t_value() == -2
    assert branch_point(4, -2).t_value() == 0
    assert is_neg_inf(branch_limit(0).t_value())
    assert trivial_point().t_value() == 0


# ---------------------------------------------------------------------------
# monomial valuations and witnesses


def test_monomial_valuation_values():
    from hyperalg.polyq import XX, YY, PolyXY

    beta = monomial_valuation(F(-1), F(-2))
    assert beta.evaluate(XX + YY) == -1  # max of the two weights
    beta_eq = monomial_valuation(F(-1), F(-1))
    assert beta_eq.evaluate(XX + YY) == -1
    assert beta.evaluate(PolyXY({(0, 0): 1})) == 0
    assert is_neg_inf(beta.evaluate(PolyXY()))


def test_make_witness_on_diagonal():
    w = make_witness(F(-1), F(-1), F(-3))
    assert w.on_x(T) == -1 and w.on_y(T) == -1 and w.on_diagonal(T) == -3
    assert check_witness_hom(w).passed


def test_make_witness_off_diagonal():
    w = make_witness(F(-1), F(-2), F(-1))
    assert w.on_diagonal(T) == -1
    assert check_witness_hom(w).passed


def test_make_witness_trivial_and_infinite():
    w = make_witness(F(0), F(0), F(0))
    assert w.on_diagonal(T) == 0
    w = make_witness(F(-1), F(-1), NEG_INF)
    assert is_neg_inf(w.on_diagonal(T))
    assert check_witness_hom(w).passed


def test_make_witness_refuses_non_members():
    with pytest.raises(WitnessError):
        make_witness(F(-1), F(-2), F(-3))
    with pytest.raises(WitnessError):
        make_witness(F(-1), F(-1), F(-1, 2))


# ---------------------------------------------------------------------------
# the branch group law


def test_branch_law_unequal():
    s = berk_hypersum(branch_point(0, -1), branch_point(0, -2))
    assert s.value_set == TROPICAL.singleton(F(-1))
    assert not s.includes_branch_limit
    assert s.contains(branch_point(0, -1))
    assert not s.contains(branch_point(0, -2))


def test_branch_law_equal_is_ray():
    s = berk_hypersum(branch_point(0, -1), branch_point(0, -1))
    assert s.value_set == hyperadd(TROPICAL, F(-1), F(-1))
    assert s.includes_branch_limit and "branch-limit" in s.note
    ok, w = branch_membership(branch_point(0, -5), branch_point(0, -1), branch_point(0, -1))
    assert ok and w.on_diagonal(T) == -5
    assert s.contains(branch_limit(0))
    assert not s.contains(branch_point(0, F(-1, 2)))
    assert not s.contains(generic_ray(1))


def test_branch_law_requires_branch_zero():
    with pytest.raises(BranchError):
        berk_hypersum(branch_point(1, -1), branch_point(0, -1))
    with pytest.raises(BranchError):
        berk_hypersum(generic_ray(1), branch_point(0, -1))


def test_branch_reversal():
    # membership is symmetric under inversion: labels negate, branch 0 is fixed
    rng = random.Random(7)
    for _ in range(25):
        x = F(-rng.randint(1, 30), rng.randint(1, 7))
        y = F(-rng.randint(1, 30), rng.randint(1, 7))
        s = berk_hypersum(branch_point(0, x), branch_point(0, y))
        s_rev = berk_hypersum(
            point_inverse(branch_point(0, y)), point_inverse(branch_point(0, x))
        )
        for z in (x, y, max(x, y), x - 1, NEG_INF):
            h = branch_limit(0) if is_neg_inf(z) else branch_point(0, z)
            assert s.contains(h) == s_rev.contains(point_inverse(h))
    assert point_inverse(branch_point(2, -1)) == branch_point(-2, -1)
    assert point_inverse(branch_limit(5)) == branch_limit(-5)


def test_branch_hypergroup_iso_report():
    rep = branch_hypergroup_iso()
    assert rep.passed
    assert any("branch-limit" in r.detail for r in rep.results)


# ---------------------------------------------------------------------------
# coproduct membership, bounded


def kp(text=None):
    return KrasnerLinePoint(None if text is None else poly_from_string(text))


def test_cc_krasner_translation_points():
    v = cc_membership(kp("x - 3"), kp("x - 1"), kp("x - 2"), degree_bound=4)
    assert v.consistent and v.degree_bound == 4


def test_cc_krasner_refutation():
    # the origin is not consistent inside origin + (root 1): already at a = T
    v = cc_membership(kp("x"), kp("x"), kp("x - 1"), degree_bound=2)
    assert not v.consistent
    assert v.failing is not None


def test_cc_trivial_points_consistent():
    for d in (2, 4):
        assert cc_membership(kp(), kp(), kp(), degree_bound=d).consistent


def test_cc_tropical_members_never_refuted():
    rng = random.Random(11)
    for _ in range(10):
        x = F(-rng.randint(1, 40), rng.randint(1, 5))
        y = F(-rng.randint(1, 40), rng.randint(1, 5))
        s = berk_hypersum(branch_point(0, x), branch_point(0, y))
        zs = [max(x, y)] if x != y else [x, x - 2, NEG_INF]
        for z in zs:
            h = branch_limit(0) if is_neg_inf(z) else branch_point(0, z)
            assert s.contains(h)
            v = cc_membership(h, branch_point(0, x), branch_point(0, y), degree_bound=3)
            assert v.consistent, (x, y, z, v.to_json())


def test_cc_reduction_compat():
    v, details = cc_reduction_compat(branch_point(0, -1), branch_point(0, -2))
    assert v.consistent
    v, details = cc_reduction_compat(branch_point(0, -1), branch_point(0, -1))
    assert v.consistent
    kinds = {h.kind for h, _, _ in details}
    assert "branch_limit" in kinds  # the ray end is sampled and flagged


def test_cc_consistent_set_intersections():
    # bounded stand-in for weak associativity: the two bracketings overlap
    pool = [kp(), kp("x"), kp("x - 1"), kp("x - 2"), kp("x - 3"), kp("x - 4")]
    a, b, c = kp("x - 1"), kp("x - 2"), kp("x - 1")
    ab = cc_consistent_set(pool, a, b, degree_bound=3)
    bc = cc_consistent_set(pool, b, c, degree_bound=3)
    left = set()
    for m in ab:
        left.update(cc_consistent_set(pool, m, c, degree_bound=3))
    right = set()
    for m in bc:
        right.update(cc_consistent_set(pool, a, m, degree_bound=3))
    assert left & right


def test_cc_identity_behaviour_bounded():
    # the origin point acts as the bounded identity candidate set that keeps a
    e, a = kp("x"), kp("x - 1")
    assert cc_membership(a, e, a, degree_bound=4).consistent
    assert not cc_membership(e, e, a, degree_bound=4).consistent


def test_cc_rejects_mixed_points():
    with pytest.raises(TypeError):
        cc_membership(kp(), branch_point(0, -1), kp())


# ---------------------------------------------------------------------------
# section and kernel


def test_section_and_kernel_semantic():
    for k in (kp(), kp("x"), kp("x - 3")):
        s = section_point(k)
        assert reduce_point(s) == k
    assert section_point(kp()).kind == "trivial"
    assert section_point(kp("x")) == branch_limit(0)
    assert reduce_point(trivial_point()) == kp()
    assert reduce_point(generic_ray(2)) == kp()
    with pytest.raises(ValueError):
        section_point(kp("x^2 + 1"))


def test_section_and_kernel_finite_ring():
    r = zmod(12)
    two = frozenset({0, 2, 4, 6, 8, 10})
    values, kernel = finite_section_and_kernel(r, two)
    assert kernel == two
    rep = hom_check(values, r.as_hyperring(), TROPICAL, name="trivial norm")
    assert rep.passed
    zero_ideal = frozenset({0})
    values, kernel = finite_section_and_kernel(zmod(7), zero_ideal)
    assert kernel == zero_ideal


# ---------------------------------------------------------------------------
# the punctured law


def test_diamond_cases():
    d = diamond_sum(generic_ray(1), generic_ray(2))
    assert d.value_set == TROPICAL.singleton(F(2)) and not d.excludes_zero
    d = diamond_sum(generic_ray(1), generic_ray(1))
    assert d.excludes_zero
    assert d.contains_value(F(1, 2)) and not d.contains_value(F(0))
    assert d.contains_value(NEG_INF)
    d = diamond_sum(generic_ray(1), branch_point(0, -1))
    assert d.value_set == TROPICAL.singleton(F(1))
    d = diamond_sum(branch_limit(0), branch_point(0, -2))
    assert d.value_set == TROPICAL.singleton(F(-2))


def test_diamond_rejects_zero_value_points():
    with pytest.raises(BranchError):
        diamond_sum(trivial_point(), generic_ray(1))
    with pytest.raises(BranchError):
        diamond_sum(branch_point(3, -1), generic_ray(1))


def test_diamond_matches_tropical_report():
    assert diamond_matches_tropical().passed


# ---------------------------------------------------------------------------
# semivaluation laws on a probe family


def factored_probe(max_degree=3, labels=(0, 1, -1)):
    polys = [factored([])]
    for deg in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(labels, deg):
            polys.append(factored(combo))
    return polys


def test_semivaluation_laws_on_probe():
    points = [
        trivial_point(),
        generic_ray(1),
        generic_ray(F(5, 2)),
        branch_point(0, -1),
        branch_point(-1, F(-1, 2)),
        branch_limit(0),
    ]
    polys = factored_probe()
    for p in points:
        for f, g in itertools.combinations_with_replacement(polys, 2):
            vf, vg = evaluate(p, f), evaluate(p, g)
            prod = NEG_INF if (is_neg_inf(vf) or is_neg_inf(vg)) else vf + vg
            assert evaluate(p, f * g) == prod
            total = f.to_polyq() + g.to_polyq()
            assert hyperadd(TROPICAL, vf, vg).contains(evaluate(p, total))


def test_tree_dot():
    dot = tree_dot(labels=(0, 1))
    assert dot == tree_dot(labels=(1, 0))
    assert '"delta"' in dot and '"generic ray"' in dot and '"branch 0"' in dot
