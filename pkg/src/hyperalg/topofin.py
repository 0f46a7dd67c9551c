"""Finite topological spaces: subbasis generation, comparison, export.

Opens are stored as frozensets of indices into a canonical point tuple; the
lattice is closed off by fixpoint iteration over pairwise unions and
intersections.  Exports are deterministic: identical spaces give identical
bytes.  DOT output renders the specialization preorder (an edge x -> y
whenever every open containing y contains x).
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a homeomorphism comparison under a fixed bijection."""

    homeomorphic: bool
    counterexample: tuple | None = None  # (direction, open set as labels)

    def to_json(self):
        out = {"schema": "compare.v1", "homeomorphic": self.homeomorphic}
        if self.counterexample is not None:
            direction, open_set = self.counterexample
            out["counterexample"] = {"direction": direction, "open": sorted(map(str, open_set))}
        return out


class FiniteTopology:
    """An explicit topology on a finite point tuple."""

    def __init__(self, points, opens, label_fn=str):
        self.points = tuple(points)
        self.index = {p: i for i, p in enumerate(self.points)}
        if len(self.index) != len(self.points):
            raise ValueError("points must be distinct")
        self.opens = frozenset(frozenset(u) for u in opens)
        self.label_fn = label_fn
        full = frozenset(range(len(self.points)))
        if frozenset() not in self.opens or full not in self.opens:
            raise ValueError("a topology contains the empty set and the whole space")

    @classmethod
    def generate(cls, points, subbasis, label_fn=str):
        """Close a subbasis (given as collections of points) under union/intersection."""
        points = tuple(points)
        index = {p: i for i, p in enumerate(points)}
        full = frozenset(range(len(points)))
        family = {frozenset(), full}
        for s in subbasis:
            family.add(frozenset(index[p] for p in s))
        while True:
            new = set()
            fam = list(family)
            for i, a in enumerate(fam):
                for b in fam[i:]:
                    for c in (a | b, a & b):
                        if c not in family:
                            new.add(c)
            if not new:
                break
            family |= new
        return cls(points, family, label_fn)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteTopology)
            and self.points == other.points
            and self.opens == other.opens
        )

    def __hash__(self):
        return hash((self.points, self.opens))

    def open_sets_as_points(self):
        out = [sorted(u) for u in self.opens]
        for u in sorted(out, key=lambda u: (len(u), u)):
            yield [self.points[i] for i in u]

    def is_open(self, subset):
        return frozenset(self.index[p] for p in subset) in self.opens

    def subspace(self, subset):
        """The subspace topology on a subset of the points."""
        sub = [p for p in self.points if p in set(subset)]
        keep = frozenset(self.index[p] for p in sub)
        opens = {frozenset(i for i in u if i in keep) for u in self.opens}
        renum = {old: new for new, old in enumerate(sorted(keep))}
        return FiniteTopology(sub, [frozenset(renum[i] for i in u) for u in opens], self.label_fn)

    def specialization_edges(self):
        """Pairs (x, y), x != y, with every open around y containing x."""
        n = len(self.points)
        edges = []
        for xi in range(n):
            for yi in range(n):
                if xi == yi:
                    continue
                if all(xi in u for u in self.opens if yi in u):
                    edges.append((self.points[xi], self.points[yi]))
        return edges

    def to_json(self):
        return {
            "schema": "topology.v1",
            "points": [self.label_fn(p) for p in self.points],
            "opens": sorted(
                (sorted(self.label_fn(self.points[i]) for i in u) for u in self.opens),
                key=lambda u: (len(u), u),
            ),
        }

    def to_json_text(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def to_dot(self, name="space"):
        lines = [f"digraph {name} {{"]
        for p in self.points:
            lines.append(f'  "{self.label_fn(p)}";')
        edges = sorted(
            (self.label_fn(x), self.label_fn(y)) for x, y in self.specialization_edges()
        )
        for x, y in edges:
            lines.append(f'  "{x}" -> "{y}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def generate(points, subbasis, label_fn=str):
    return FiniteTopology.generate(points, subbasis, label_fn)


def compare_under_bijection(t1, t2, bijection):
    """Homeomorphism verdict for a given point bijection; no search happens.

    Checks that images of opens are open and preimages of opens are open;
    returns the first failing open set otherwise.
    """
    if set(bijection) != set(t1.points) or set(bijection.values()) != set(t2.points):
        raise ValueError("not a bijection between the point sets")
    if len(set(bijection.values())) != len(bijection):
        raise ValueError("not injective")
    fwd = {t1.index[p]: t2.index[q] for p, q in bijection.items()}
    for u in sorted(t1.opens, key=lambda u: (len(u), sorted(u))):
        image = frozenset(fwd[i] for i in u)
        if image not in t2.opens:
            return Verdict(False, ("image", [t1.points[i] for i in u]))
    back = {v: k for k, v in fwd.items()}
    for u in sorted(t2.opens, key=lambda u: (len(u), sorted(u))):
        pre = frozenset(back[i] for i in u)
        if pre not in t1.opens:
            return Verdict(False, ("preimage", [t2.points[i] for i in u]))
    return Verdict(True)


def export(topology, fmt="json"):
    """Deterministic text export; fmt is 'json' or 'dot'."""
    if fmt == "json":
        return topology.to_json_text()
    if fmt == "dot":
        return topology.to_dot()
    raise ValueError(f"unknown format {fmt!r}")
