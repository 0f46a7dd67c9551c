"""Finite topology generation, comparison, and export determinism."""

import pytest

from hyperalg.topofin import FiniteTopology, compare_under_bijection, export, generate


def test_generate_basic():
    t = generate(["a", "b"], [["a"]])
    assert sorted(map(tuple, t.open_sets_as_points())) == [(), ("a",), ("a", "b")]


def test_generate_indiscrete_and_discrete():
    t = generate(["a", "b"], [])
    assert len(t.opens) == 2
    t = generate(["a", "b", "c"], [["a"], ["b"], ["c"]])
    assert len(t.opens) == 8


def test_generate_idempotent():
    t = generate(["a", "b", "c"], [["a"], ["a", "b"]])
    again = generate(t.points, list(t.open_sets_as_points()))
    assert again == t


def test_compare_identity_homeomorphic():
    t = generate(["a", "b", "c"], [["a"], ["a", "b"]])
    v = compare_under_bijection(t, t, {p: p for p in t.points})
    assert v.homeomorphic


def test_compare_discrete_vs_indiscrete():
    d = generate(["a", "b"], [["a"], ["b"]])
    i = generate(["a", "b"], [])
    v = compare_under_bijection(d, i, {"a": "a", "b": "b"})
    assert not v.homeomorphic
    direction, open_set = v.counterexample
    assert direction == "image" and len(open_set) == 1


def test_compare_rejects_non_bijection():
    t = generate(["a", "b"], [])
    with pytest.raises(ValueError):
        compare_under_bijection(t, t, {"a": "a", "b": "a"})


def test_specialization_edges():
    # doubled closed point over a generic point: two specialization edges
    t = generate(["g", "p1", "p2"], [["g"], ["g", "p1"], ["g", "p2"]])
    assert sorted(t.specialization_edges()) == [("g", "p1"), ("g", "p2")]
    dot = export(t, "dot")
    assert dot.count("->") == 2
    assert '"g" -> "p1"' in dot


def test_discrete_space_has_no_edges():
    t = generate([1, 2], [[1], [2]])
    assert t.specialization_edges() == []


def test_export_byte_stable():
    t1 = generate(["a", "b", "c"], [["a"], ["a", "b"]])
    t2 = generate(["a", "b", "c"], [["a", "b"], ["a"]])
    assert export(t1, "json") == export(t2, "json")
    assert export(t1, "dot") == export(t2, "dot")
    assert export(t1, "json").endswith("\n")


def test_single_point_dot():
    t = generate(["only"], [])
    dot = export(t, "dot")
    assert '"only";' in dot and "->" not in dot


def test_subspace():
    t = generate(["a", "b", "c"], [["a"], ["a", "b"]])
    s = t.subspace(["a", "b"])
    assert sorted(map(tuple, s.open_sets_as_points())) == [(), ("a",), ("a", "b")]
