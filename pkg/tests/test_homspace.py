"""Hom-spaces, Spec and Sper correspondences, induced maps, and gluing."""

import pytest
import sympy

from hyperalg.finring import polyquot, primes, product, quotient, zmod, zmod_projection
from hyperalg.homspace import (
    Gluing,
    GluingError,
    HomPoint,
    SquarefreeError,
    affine_topology,
    check_sign_hom,
    compare_spec_affine,
    compare_sper_affine,
    default_poly_probe,
    enumerate_homs,
    glue_hom_spaces,
    induced_map,
    induced_map_continuous,
    kernel_bijection,
    krasner_vanishing,
    ordering_to_sign_hom,
    reduction_continuous,
    reduction_sper_to_spec,
    sign_hom_to_ordering,
    spec_space,
    spec_space_semantic,
    spectral_topology,
    sper_points,
)
from hyperalg.hypercore import KRASNER, SIGNS
from hyperalg.polyq import PolyQ, poly_from_string, poly_str
from hyperalg.topofin import compare_under_bijection, generate

P = poly_from_string


def sympy_real_root_count(f):
    x = sympy.symbols("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f.coeffs))
    return len(sympy.Poly(expr, x).real_roots())


# ---------------------------------------------------------------------------
# homs over finite carriers


def test_homs_z12_to_krasner():
    homs = enumerate_homs(zmod(12), KRASNER)
    assert len(homs) == 2
    kernels = sorted((h.kernel() for h in homs), key=sorted)
    assert kernels == [frozenset({0, 2, 4, 6, 8, 10}), frozenset({0, 3, 6, 9})]
    kernel_bijection(zmod(12), homs, primes(zmod(12)).primes)


def test_homs_field_to_krasner_unique():
    assert len(enumerate_homs(zmod(7), KRASNER)) == 1


def test_homs_z4_to_signs_empty():
    assert enumerate_homs(zmod(4), SIGNS) == []


def test_homs_z7_to_signs_empty():
    # -1 is a square mod 7 would force contradictions; actually no ordering of F7
    assert enumerate_homs(zmod(7), SIGNS) == []


def test_spec_space_shapes():
    t = spec_space(zmod(12))
    assert len(t.points) == 2 and len(t.opens) == 4  # two maximal points: discrete
    assert len(spec_space(zmod(4)).points) == 1
    assert len(spec_space(polyquot(2, [0, 0, 1])).points) == 1


def test_affine_matches_spec():
    for R in (zmod(12), zmod(7), zmod(30), polyquot(2, [1, 1, 1]), quotient(zmod(5), [1, 4])):
        verdict, spec, aff = compare_spec_affine(R)
        assert verdict.homeomorphic, R


def test_affine_topology_empty_space():
    t = affine_topology(zmod(4), SIGNS)
    assert len(t.points) == 0


def test_krasner_vanishing():
    r = zmod(12)
    out = krasner_vanishing(r, frozenset({0, 2, 4, 6, 8, 10}))
    assert len(out) == 1 and out[0].kernel() == frozenset({0, 2, 4, 6, 8, 10})
    assert len(krasner_vanishing(r, {0})) == 2
    assert krasner_vanishing(r, set(range(12))) == []


# ---------------------------------------------------------------------------
# orderings


@pytest.mark.parametrize(
    "s,count",
    [
        ("x^2 - 2", 2),
        ("x^2 + 1", 0),
        ("x^2 - x", 2),
        ("x^3 - 2", 1),
        ("x^4 - 5*x^2 + 6", 4),
    ],
)
def test_sper_counts_match_isolation_oracle(s, count):
    f = P(s)
    pts = sper_points(f)
    assert len(pts) == count == sympy_real_root_count(f)
    mids = [d.midpoint for d in pts]
    assert mids == sorted(mids)


def test_sper_rejects_non_squarefree():
    with pytest.raises(SquarefreeError):
        sper_points(P("x^2 - 2") * P("x^2 - 2"))


def test_ordering_signs_at_sqrt2():
    pts = sper_points(P("x^2 - 2"))
    pos = pts[-1]  # largest midpoint: +sqrt(2)
    assert pos.sign_of(P("x")) == 1
    assert pos.sign_of(P("x^2 - 2")) == 0
    assert pos.sign_of(P("1 - x")) == -1
    assert pos.sign_of(PolyQ([5])) == 1
    assert pos.sign_of(PolyQ()) == 0


def test_sign_hom_round_trip():
    for s in ("x^2 - 2", "x^2 - x", "x^3 - 2", "x^4 - 5*x^2 + 6"):
        f = P(s)
        for d in sper_points(f):
            hom = ordering_to_sign_hom(d, f)
            back = sign_hom_to_ordering(hom, f)
            assert back.same_root(d), (s, d.label(), back.label())


def test_sign_hom_passes_hom_check():
    f = P("x^2 - 2")
    for d in sper_points(f):
        rep = check_sign_hom(ordering_to_sign_hom(d, f), f)
        assert rep.passed, rep.summary()


def test_spectral_topology_discrete():
    t = spectral_topology(P("x^2 - 2"))
    assert len(t.points) == 2 and len(t.opens) == 4
    t = spectral_topology(P("x^2 + 1"))
    assert len(t.points) == 0
    t = spectral_topology(P("x - 1"))
    assert len(t.points) == 1 and len(t.opens) == 2


def test_sper_affine_comparison():
    for s in ("x^2 - 2", "x^2 - x", "x^4 - 5*x^2 + 6"):
        verdict, spectral, affine = compare_sper_affine(P(s))
        assert verdict.homeomorphic, s


def test_reduction_to_spec():
    f = P("x^2 - 2")
    pts = sper_points(f)
    assert all(poly_str(reduction_sper_to_spec(d)) == "x^2 - 2" for d in pts)
    g = P("x^2 - x")
    factors = {poly_str(reduction_sper_to_spec(d)) for d in sper_points(g)}
    assert factors == {"x", "x - 1"}
    assert reduction_continuous(f)
    assert reduction_continuous(P("x^4 - 5*x^2 + 6"))


def test_spec_space_semantic():
    t = spec_space_semantic(P("x^2 - x"))
    assert len(t.points) == 2 and len(t.opens) == 4


# ---------------------------------------------------------------------------
# induced maps


def test_induced_map_projection():
    phi = zmod_projection(12, 4)
    mapping = induced_map(phi, KRASNER)
    assert len(mapping) == 1
    (g, h), = mapping.items()
    assert g.kernel() == frozenset({0, 2})
    assert h.kernel() == frozenset({0, 2, 4, 6, 8, 10})
    assert induced_map_continuous(phi, KRASNER)


def test_induced_map_z3():
    phi = zmod_projection(12, 3)
    mapping = induced_map(phi, KRASNER)
    assert len(mapping) == 1
    ((_, h),) = mapping.items()
    assert h.kernel() == frozenset({0, 3, 6, 9})


def test_induced_map_functorial():
    phi = zmod_projection(12, 4)  # Z/12 -> Z/4
    psi = zmod_projection(4, 2)  # Z/4 -> Z/2
    comp = psi.compose(phi)
    direct = induced_map(comp, KRASNER)
    step1 = induced_map(psi, KRASNER)  # Hom(Z/2) -> Hom(Z/4)
    step2 = induced_map(phi, KRASNER)  # Hom(Z/4) -> Hom(Z/12)
    for g, expected in direct.items():
        assert step2[step1[g]].table == expected.table


# ---------------------------------------------------------------------------
# gluing


def doubled_point_charts():
    chart = spec_space(zmod(6))
    two = frozenset({0, 2, 4})
    return [chart, chart], Gluing(0, 1, {two: two})


def test_glue_doubled_point():
    charts, g = doubled_point_charts()
    glued = glue_hom_spaces(charts, [g])
    assert len(glued.points) == 3
    # hand oracle: both charts are discrete, so the colimit is discrete
    assert len(glued.opens) == 8


def test_glue_single_chart_unchanged():
    chart = spec_space(zmod(6))
    glued = glue_hom_spaces([chart], [])
    assert len(glued.points) == len(chart.points)
    assert len(glued.opens) == len(chart.opens)


def test_glue_everything_gives_one_copy():
    chart = spec_space(zmod(6))
    ident = {p: p for p in chart.points}
    glued = glue_hom_spaces([chart, chart], [Gluing(0, 1, ident)])
    assert len(glued.points) == len(chart.points)


def test_glue_rejects_non_open_locus():
    chart = generate(["g", "c"], [["g"]])  # {c} is not open
    with pytest.raises(GluingError):
        glue_hom_spaces([chart, chart], [Gluing(0, 1, {"c": "c"})])


def test_glue_rejects_cocycle_failure():
    chart = generate(["a", "b"], [["a"], ["b"]])
    g01 = Gluing(0, 1, {"a": "a"})
    g12 = Gluing(1, 2, {"a": "a"})
    g02 = Gluing(0, 2, {"a": "b"})  # disagrees with the composite
    with pytest.raises(GluingError):
        glue_hom_spaces([chart, chart, chart], [g01, g12, g02])


def test_glue_detects_chart_collapse():
    chart = generate(["a", "b"], [["a"], ["b"]])
    # chain a->a' and b->a' collapses two points of chart 0
    g1 = Gluing(0, 1, {"a": "a"})
    g2 = Gluing(0, 1, {"b": "a"})
    with pytest.raises(GluingError):
        glue_hom_spaces([chart, chart], [g1, g2])
