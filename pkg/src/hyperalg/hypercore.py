"""Hyperfields with exact multivalued arithmetic, plus axiom-verification engines.

Carrier elements are plain Python values interpreted by a structure object:

* Krasner:        ints 0, 1
* signs:          ints -1, 0, 1
* tropical:       fractions.Fraction, or NEG_INF for the additive identity
* ordered group:  group elements (Fraction, or lex-ordered int pairs), or NEG_INF
* phase:          Fraction angle in [0, 1) measured in turns, or PHASE_ZERO
* finite tables:  small ints indexing the carrier (see finring)

Hyperaddition returns a ValueSet: an exact, decidable subset of the carrier.
Three set representations cover everything the instances produce: plain finite
sets, down-closed rays with stray points (totally ordered carriers), and
finite unions of open arcs and points on the rational circle (phase).

Axiom checks run exhaustively on finite carriers and on finite probe grids
otherwise; every report records which of the two happened and carries a
counterexample on failure.  Verdicts on probe grids are never "proved".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

HALF = Fraction(1, 2)


class CarrierError(ValueError):
    """An operand does not belong to the structure's carrier."""


class UnsupportedSetSum(ValueError):
    """Hypersum of two symbolic sets with no exact closed form here."""


# ---------------------------------------------------------------------------
# sentinels


class _NegInf:
    """Bottom of every totally ordered carrier; the tropical additive identity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return not isinstance(other, _NegInf)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInf)

    def __eq__(self, other):
        return isinstance(other, _NegInf)

    def __hash__(self):
        return hash("neg-inf")


class _PhaseZero:
    """The absorbing zero of the phase hyperfield (the circle's origin)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "zero"

    def __eq__(self, other):
        return isinstance(other, _PhaseZero)

    def __hash__(self):
        return hash("phase-zero")


NEG_INF = _NegInf()
PHASE_ZERO = _PhaseZero()


def is_neg_inf(x):
    return isinstance(x, _NegInf)


# ---------------------------------------------------------------------------
# value sets


class ValueSet:
    """Marker base class; concrete sets implement contains/union/intersect."""


@dataclass(frozen=True)
class FiniteVS(ValueSet):
    elems: frozenset

    def contains(self, x):
        return x in self.elems

    def union(self, other):
        return FiniteVS(self.elems | other.elems)

    def intersect(self, other):
        return FiniteVS(self.elems & other.elems)

    def is_empty(self):
        return not self.elems


def finite_set(elems):
    return FiniteVS(frozenset(elems))


@dataclass(frozen=True)
class RaySet(ValueSet):
    """Down-closed ray [-inf, top] plus finitely many points above it.

    top is None when there is no ray part; extras are then the whole set.
    Normalised so extras never meet the ray; a finite set and a ray therefore
    never compare equal, matching the density of the rational carrier.
    """

    top: object
    extras: frozenset

    def contains(self, x):
        if self.top is not None and x <= self.top:
            return True
        return x in self.extras

    def union(self, other):
        if self.top is None:
            top = other.top
        elif other.top is None:
            top = self.top
        else:
            top = max(self.top, other.top)
        return ray_set(top, self.extras | other.extras)

    def intersect(self, other):
        if self.top is not None and other.top is not None:
            top = min(self.top, other.top)
        else:
            top = None
        pts = {e for e in self.extras if other.contains(e)}
        pts |= {e for e in other.extras if self.contains(e)}
        return ray_set(top, pts)

    def is_empty(self):
        return self.top is None and not self.extras


def ray_set(top, extras=()):
    extras = frozenset(extras)
    if top is not None and is_neg_inf(top):
        extras |= {NEG_INF}
        top = None
    if top is not None:
        extras = frozenset(e for e in extras if not e <= top)
    return RaySet(top, extras)


def down_ray(top):
    """The interval [-inf, top] of a totally ordered carrier."""
    return ray_set(top)


def _norm_angle(a):
    return a - (a // 1)


def _arc_interior(start, length, p):
    d = _norm_angle(p - start)
    return 0 < d < length


def _merge_two_arcs(a1, a2):
    """Merged arc if interiors overlap on the circle, 'full', or None."""
    s1, l1 = a1
    for k in (-1, 0, 1):
        s2 = a2[0] + k
        l2 = a2[1]
        lo, hi = max(s1, s2), min(s1 + l1, s2 + l2)
        if lo < hi:  # open intervals intersect
            start = min(s1, s2)
            end = max(s1 + l1, s2 + l2)
            if end - start >= 1:
                return "full"
            return (_norm_angle(start), end - start)
    return None


def _phase_normalize(arcs, points, zero, full):
    arcs = [(_norm_angle(s), min(l, Fraction(1))) for (s, l) in arcs if l > 0]
    pts = {_norm_angle(p) for p in points}
    while not full:
        changed = False
        pts = {p for p in pts if not any(_arc_interior(s, l, p) for (s, l) in arcs)}
        merged = None
        for i in range(len(arcs)):
            for j in range(i + 1, len(arcs)):
                m = _merge_two_arcs(arcs[i], arcs[j])
                if m == "full":
                    full = True
                elif m is not None:
                    merged = (i, j, m)
                if full or merged:
                    break
            if full or merged:
                break
        if full:
            break
        if merged:
            i, j, m = merged
            arcs = [a for k, a in enumerate(arcs) if k not in (i, j)] + [m]
            changed = True
        # join two arcs (or close a full-length arc) through a boundary point
        for p in list(pts):
            left = next((a for a in arcs if _norm_angle(a[0] + a[1]) == p), None)
            right = next((a for a in arcs if a[0] == p), None)
            if left is not None and left == right:  # length-1 arc plus its seam
                full = True
                break
            if left is not None and right is not None:
                new_len = left[1] + right[1]
                if new_len >= 1:
                    full = True
                    break
                arcs = [a for a in arcs if a not in (left, right)] + [(left[0], new_len)]
                pts.discard(p)
                changed = True
                break
        if full or not changed:
            break
    if full:
        return True, (), frozenset(), zero
    return False, tuple(sorted(arcs)), frozenset(pts), zero


@dataclass(frozen=True)
class PhaseVS(ValueSet):
    """Finite union of open arcs and points on the circle, plus optionally zero.

    Arcs are (start, length) in turns, open at both ends, normalised (merged,
    sorted, boundary points kept separate).  full=True is the whole circle.
    """

    full: bool
    arcs: tuple
    points: frozenset
    zero: bool

    def contains(self, x):
        if isinstance(x, _PhaseZero):
            return self.zero
        if self.full:
            return True
        if x in self.points:
            return True
        return any(_arc_interior(s, l, x) for (s, l) in self.arcs)

    def union(self, other):
        return phase_set(
            self.arcs + other.arcs,
            self.points | other.points,
            self.zero or other.zero,
            self.full or other.full,
        )

    def intersect(self, other):
        zero = self.zero and other.zero
        if self.full:
            return phase_set(other.arcs, other.points, zero, other.full)
        if other.full:
            return phase_set(self.arcs, self.points, zero, False)
        arcs = []
        for (s1, l1) in self.arcs:
            for (s2, l2) in other.arcs:
                for k in (-1, 0, 1):
                    lo = max(s1, s2 + k)
                    hi = min(s1 + l1, s2 + k + l2)
                    if lo < hi:
                        arcs.append((_norm_angle(lo), hi - lo))
        pts = {p for p in self.points if other.contains(p)}
        pts |= {p for p in other.points if self.contains(p)}
        return phase_set(arcs, pts, zero, False)

    def is_empty(self):
        return not (self.full or self.arcs or self.points or self.zero)

    @property
    def is_all(self):
        return self.full and self.zero


def phase_set(arcs=(), points=(), zero=False, full=False):
    full, arcs, pts, zero = _phase_normalize(arcs, points, zero, full)
    return PhaseVS(full, arcs, pts, zero)


ALL_PHASE = phase_set(full=True, zero=True)


def open_arc(a, b):
    """The shorter open arc strictly between two non-antipodal angles."""
    a, b = _norm_angle(a), _norm_angle(b)
    d = _norm_angle(b - a)
    if d == 0 or d == HALF:
        raise ValueError("no shorter arc between equal or antipodal angles")
    if d < HALF:
        return phase_set(arcs=[(a, d)])
    return phase_set(arcs=[(b, 1 - d)])


def vs_subset(a, b):
    """Exact containment a <= b for sets over the same carrier."""
    return a.union(b) == b


def iter_finite(vs):
    """Members of an explicitly finite ValueSet, or None if it is infinite."""
    if isinstance(vs, FiniteVS):
        return sorted(vs.elems, key=repr)
    if isinstance(vs, RaySet) and vs.top is None:
        return sorted(vs.extras, key=repr)
    if isinstance(vs, PhaseVS) and not vs.full and not vs.arcs:
        out = sorted(vs.points)
        if vs.zero:
            out = [PHASE_ZERO] + out
        return out
    return None


# ---------------------------------------------------------------------------
# structures


class HyperStructure:
    """Interface shared by every carrier; subclasses fill in the arithmetic."""

    kind = "hyperfield"
    name = "?"
    zero = None
    one = None

    def elements(self):
        """Full carrier as a list, or None when infinite."""
        return None

    def default_probe(self):
        elems = self.elements()
        if elems is None:
            raise NotImplementedError
        return list(elems)

    def contains(self, x):
        raise NotImplementedError

    def check_element(self, x):
        if not self.contains(x):
            raise CarrierError(f"{x!r} is not in the carrier of {self.name}")

    def add(self, a, b) -> ValueSet:
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError(f"{self.name} does not provide inverses")

    def singleton(self, a) -> ValueSet:
        raise NotImplementedError

    def sum_sets(self, A, B) -> ValueSet:
        raise NotImplementedError

    def mul_sets(self, A, B) -> ValueSet:
        raise NotImplementedError

    def scale_set(self, x, A) -> ValueSet:
        return self.mul_sets(self.singleton(x), A)

    def value_str(self, a) -> str:
        return repr(a)

    def sort_key(self, a):
        return repr(a)

    def set_to_json(self, vs):
        if isinstance(vs, FiniteVS):
            return {"kind": "finite", "elements": sorted(self.value_str(e) for e in vs.elems)}
        if isinstance(vs, RaySet):
            out = {"kind": "down_ray" if vs.top is not None else "finite"}
            if vs.top is not None:
                out["top"] = self.value_str(vs.top)
                if vs.extras:
                    out["extra_points"] = sorted(self.value_str(e) for e in vs.extras)
            else:
                out["elements"] = sorted(self.value_str(e) for e in vs.extras)
            return out
        if isinstance(vs, PhaseVS):
            if vs.is_all:
                return {"kind": "all"}
            return {
                "kind": "arcs",
                "full_circle": vs.full,
                "arcs": [[str(s), str(s + l)] for (s, l) in vs.arcs],
                "points": sorted(str(p) for p in vs.points),
                "includes_zero": vs.zero,
            }
        raise TypeError(f"unknown value set {vs!r}")


class _FiniteCarrier(HyperStructure):
    """Common machinery for structures whose carrier is an explicit list."""

    def singleton(self, a):
        return finite_set([a])

    def sum_sets(self, A, B):
        out = frozenset()
        for a in A.elems:
            for b in B.elems:
                out |= self.add(a, b).elems
        return FiniteVS(out)

    def mul_sets(self, A, B):
        return finite_set(self.mul(a, b) for a in A.elems for b in B.elems)


class KrasnerHyperfield(_FiniteCarrier):
    """{0, 1} with 1 + 1 = {0, 1}; the final object among hyperfields."""

    name = "K"
    zero = 0
    one = 1
    # fixed topology: opens are {}, {1}, {0,1}
    opens = (frozenset(), frozenset({1}), frozenset({0, 1}))

    def elements(self):
        return [0, 1]

    def contains(self, x):
        return x in (0, 1)

    def add(self, a, b):
        self.check_element(a)
        self.check_element(b)
        if a == b == 1:
            return finite_set([0, 1])
        return finite_set([max(a, b)])

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return 1

    def value_str(self, a):
        return str(a)

    def sort_key(self, a):
        return a


class SignHyperfield(_FiniteCarrier):
    """{-1, 0, 1} under the rule of signs; 1 + (-1) is everything."""

    name = "S"
    zero = 0
    one = 1
    opens = (
        frozenset(),
        frozenset({1}),
        frozenset({-1}),
        frozenset({-1, 1}),
        frozenset({-1, 0, 1}),
    )

    def elements(self):
        return [0, 1, -1]

    def contains(self, x):
        return x in (-1, 0, 1)

    def add(self, a, b):
        self.check_element(a)
        self.check_element(b)
        if a == 0:
            return finite_set([b])
        if b == 0 or a == b:
            return finite_set([a])
        return finite_set([-1, 0, 1])

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return a

    def value_str(self, a):
        return str(a)

    def sort_key(self, a):
        return a


class RationalAddGroup:
    """(Q, +) with its usual order."""

    name = "Q"
    zero = Fraction(0)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def contains(self, a):
        return isinstance(a, (int, Fraction)) and not isinstance(a, bool)

    def probe(self):
        return [Fraction(k, 2) for k in range(-6, 7)]

    def value_str(self, a):
        return str(Fraction(a))

    def sort_key(self, a):
        return Fraction(a)


class LexZ2Group:
    """Z^2 ordered lexicographically; realises a rank-two value group."""

    name = "Z2lex"
    zero = (0, 0)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == 2
            and all(isinstance(c, int) and not isinstance(c, bool) for c in a)
        )

    def probe(self):
        return [(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)]

    def value_str(self, a):
        return f"({a[0]},{a[1]})"

    def sort_key(self, a):
        return a


class OrderedGroupHyperfield(HyperStructure):
    """Gamma u {-inf}: max off the diagonal, the ray [-inf, a] on it.

    With the rational group this is the tropical hyperfield; any totally
    ordered abelian group gives the same rules.
    """

    def __init__(self, group, name=None):
        self.group = group
        self.name = name or f"{group.name}_hyp"
        self.zero = NEG_INF
        self.one = group.zero

    def elements(self):
        return None

    def contains(self, x):
        return is_neg_inf(x) or self.group.contains(x)

    def default_probe(self):
        return [NEG_INF] + self.group.probe()

    def add(self, a, b):
        self.check_element(a)
        self.check_element(b)
        if a == b:
            return down_ray(a)
        return ray_set(None, [max(a, b)])

    def mul(self, a, b):
        self.check_element(a)
        self.check_element(b)
        if is_neg_inf(a) or is_neg_inf(b):
            return NEG_INF
        return self.group.add(a, b)

    def neg(self, a):
        return a

    def inv(self, a):
        if is_neg_inf(a):
            raise ZeroDivisionError
        return self.group.neg(a)

    def singleton(self, a):
        return ray_set(None, [a])

    def sum_sets(self, A, B):
        pieces = []
        if A.top is not None and B.top is not None:
            pieces.append(down_ray(max(A.top, B.top)))
        for ray, pts in ((A.top, B.extras), (B.top, A.extras)):
            if ray is None:
                continue
            for y in pts:
                pieces.append(ray_set(None, [y]) if y > ray else down_ray(ray))
        for a in A.extras:
            for b in B.extras:
                pieces.append(self.add(a, b))
        out = ray_set(None, [])
        for p in pieces:
            out = out.union(p)
        return out

    def mul_sets(self, A, B):
        pieces = []
        if A.top is not None and B.top is not None:
            pieces.append(down_ray(self.mul(A.top, B.top)))
        for ray, pts in ((A.top, B.extras), (B.top, A.extras)):
            if ray is None:
                continue
            for y in pts:
                if is_neg_inf(y):
                    pieces.append(ray_set(None, [NEG_INF]))
                else:
                    pieces.append(down_ray(self.mul(ray, y)))
        for a in A.extras:
            for b in B.extras:
                pieces.append(ray_set(None, [self.mul(a, b)]))
        out = ray_set(None, [])
        for p in pieces:
            out = out.union(p)
        return out

    def value_str(self, a):
        return "-inf" if is_neg_inf(a) else self.group.value_str(a)

    def sort_key(self, a):
        return (0,) if is_neg_inf(a) else (1, self.group.sort_key(a))

    def parse_value(self, text):
        text = text.strip()
        if text in ("-inf", "-oo"):
            return NEG_INF
        if isinstance(self.group, LexZ2Group):
            parts = text.strip("()").split(",")
            return (int(parts[0]), int(parts[1]))
        return Fraction(text)


class PhaseHyperfield(HyperStructure):
    """Unit circle plus zero; the sum of non-antipodal points is the open arc.

    The degenerate cases x + x = {x} and x + 0 = {x} are conventions taken
    here (the continuous limits), not quoted rules.
    """

    name = "P"
    zero = PHASE_ZERO
    one = Fraction(0)

    def elements(self):
        return None

    def contains(self, x):
        if isinstance(x, _PhaseZero):
            return True
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool) and 0 <= x < 1

    def default_probe(self):
        return [PHASE_ZERO] + [Fraction(k, 8) for k in range(8)]

    def add(self, a, b):
        self.check_element(a)
        self.check_element(b)
        if isinstance(a, _PhaseZero):
            return phase_set(points=[b]) if not isinstance(b, _PhaseZero) else phase_set(zero=True)
        if isinstance(b, _PhaseZero):
            return phase_set(points=[a])
        if a == b:
            return phase_set(points=[a])
        if _norm_angle(b - a) == HALF:
            return phase_set(points=[a, b], zero=True)
        return open_arc(a, b)

    def mul(self, a, b):
        self.check_element(a)
        self.check_element(b)
        if isinstance(a, _PhaseZero) or isinstance(b, _PhaseZero):
            return PHASE_ZERO
        return _norm_angle(a + b)

    def neg(self, a):
        if isinstance(a, _PhaseZero):
            return a
        return _norm_angle(a + HALF)

    def inv(self, a):
        if isinstance(a, _PhaseZero):
            raise ZeroDivisionError
        return _norm_angle(-a)

    def singleton(self, a):
        if isinstance(a, _PhaseZero):
            return phase_set(zero=True)
        return phase_set(points=[a])

    def _sweep(self, A, z):
        """Union of w + z over all w in A, for a single circle point z."""
        if isinstance(z, _PhaseZero):
            return A
        if A.full:
            return ALL_PHASE  # the antipode of z lies in the sweep
        out = phase_set()
        if A.zero:
            out = out.union(phase_set(points=[z]))
        for p in A.points:
            out = out.union(self.add(p, z))
        for (s, l) in A.arcs:
            out = out.union(self._arc_sweep(s, l, z))
        return out

    def _arc_sweep(self, s, l, z):
        # parametrise by t = w - z; w = z at t = 0 mod 1 and w = -z at t = 1/2 mod 1
        t1 = _norm_angle(s - z)
        t2 = t1 + l
        marks = [m for m in (Fraction(1, 2), Fraction(1), Fraction(3, 2)) if t1 < m < t2]
        pieces = []
        for m in marks:
            if m == 1:  # the sweep passes through z itself
                pieces.append(phase_set(points=[z]))
            else:  # through the antipode: contributes {z, -z} and the zero element
                pieces.append(phase_set(points=[z, _norm_angle(z + HALF)], zero=True))
        cuts = [t1] + marks + [t2]
        for u, v in zip(cuts, cuts[1:]):
            if v <= u:
                continue
            k = ((u + v) / 2) // 1  # the mark-free piece sits inside one zone mod 1
            lo, hi = u - k, v - k
            if hi <= HALF:
                # t mod 1 in (0, 1/2): union of shorter arcs (z, z+t) running forward
                pieces.append(phase_set(arcs=[(z, hi)]))
            else:
                # t mod 1 in (1/2, 1): arcs (z-(1-t), z) running backward, longest first
                pieces.append(phase_set(arcs=[(_norm_angle(z + lo - 1), 1 - lo)]))
        out = phase_set()
        for p in pieces:
            out = out.union(p)
        return out

    def sum_sets(self, A, B):
        a_fin = not A.full and not A.arcs
        b_fin = not B.full and not B.arcs
        if not a_fin and not b_fin:
            raise UnsupportedSetSum("phase hypersum of two arc regions is not supported")
        if a_fin:
            A, B = B, A
        # B is now finite: sweep A by each member of B
        out = phase_set()
        if B.zero:
            out = out.union(A)
        for z in B.points:
            out = out.union(self._sweep(A, z))
        return out

    def mul_sets(self, A, B):
        zero = (A.zero and not B.is_empty()) or (B.zero and not A.is_empty())
        if (A.full and (B.full or B.arcs or B.points)) or (B.full and (A.arcs or A.points)):
            return phase_set(zero=zero, full=True)
        arcs = []
        pts = set()
        for (s1, l1) in A.arcs:
            for (s2, l2) in B.arcs:
                arcs.append((_norm_angle(s1 + s2), l1 + l2))
        for (s, l) in A.arcs:
            for p in B.points:
                arcs.append((_norm_angle(s + p), l))
        for (s, l) in B.arcs:
            for p in A.points:
                arcs.append((_norm_angle(s + p), l))
        for p in A.points:
            for q in B.points:
                pts.add(_norm_angle(p + q))
        return phase_set(arcs, pts, zero, False)

    def value_str(self, a):
        return "zero" if isinstance(a, _PhaseZero) else str(a)

    def sort_key(self, a):
        return (0,) if isinstance(a, _PhaseZero) else (1, a)

    def parse_value(self, text):
        text = text.strip()
        if text in ("zero", "0c"):
            return PHASE_ZERO
        return _norm_angle(Fraction(text))


KRASNER = KrasnerHyperfield()
SIGNS = SignHyperfield()
TROPICAL = OrderedGroupHyperfield(RationalAddGroup(), name="T")
GAMMA_Q = OrderedGroupHyperfield(RationalAddGroup(), name="Q_hyp")
GAMMA_Z2LEX = OrderedGroupHyperfield(LexZ2Group())
PHASE = PhaseHyperfield()


def hyperadd(s, a, b):
    """Multivalued sum a + b in the structure s."""
    return s.add(a, b)


def hypersum_sets(s, A, B):
    """Union of elementwise hypersums over A x B, exactly."""
    return s.sum_sets(A, B)


# ---------------------------------------------------------------------------
# axiom reports


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    counterexample: tuple | None = None
    detail: str = ""


@dataclass
class Report:
    structure: str
    checked: str
    scope: str  # 'exhaustive' or 'probe grid'
    probe: list
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def to_json(self, value_str=repr):
        return {
            "schema": "axiom_report.v1",
            "structure": self.structure,
            "checked": self.checked,
            "scope": self.scope,
            "probe_size": len(self.probe),
            "passed": self.passed,
            "axioms": [
                {
                    "axiom": r.axiom,
                    "passed": r.passed,
                    "counterexample": (
                        None
                        if r.counterexample is None
                        else [value_str(v) for v in r.counterexample]
                    ),
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }

    def summary(self):
        lines = [f"{self.structure}: {self.checked} ({self.scope})"]
        for r in self.results:
            mark = "pass" if r.passed else "FAIL"
            extra = f"  {r.detail}" if r.detail else ""
            lines.append(f"  [{mark}] {r.axiom}{extra}")
        return "\n".join(lines)


def _probe_for(s, probe):
    elems = s.elements()
    if probe is not None:
        return list(probe), ("exhaustive" if elems is not None and set(probe) == set(elems) else "probe grid")
    if elems is not None:
        return list(elems), "exhaustive"
    return list(s.default_probe()), "probe grid"


def check_hypergroup(s, probe=None):
    """Canonical-hypergroup axioms for (carrier, +), exhaustively or on a grid."""
    probe, scope = _probe_for(s, probe)
    rep = Report(s.name, "hypergroup", scope, probe)

    cex = None
    for a, b in itertools.combinations_with_replacement(probe, 2):
        if s.add(a, b) != s.add(b, a):
            cex = (a, b)
            break
    rep.results.append(AxiomResult("commutativity", cex is None, cex))

    cex = None
    for a, b, c in itertools.product(probe, repeat=3):
        lhs = s.sum_sets(s.add(a, b), s.singleton(c))
        rhs = s.sum_sets(s.singleton(a), s.add(b, c))
        if lhs != rhs:
            cex = (a, b, c)
            break
    rep.results.append(AxiomResult("associativity", cex is None, cex))

    cex = None
    for x in probe:
        if s.add(s.zero, x) != s.singleton(x):
            cex = (s.zero, x)
            break
    rep.results.append(AxiomResult("identity", cex is None, cex))

    cex = None
    detail = ""
    for e in probe:
        if e == s.zero:
            continue
        if all(s.add(e, x) == s.singleton(x) for x in probe):
            cex = (e,)
            detail = "second identity found"
            break
    rep.results.append(AxiomResult("unique identity", cex is None, cex, detail))

    cex = None
    detail = ""
    for x in probe:
        inverses = [y for y in probe if s.add(x, y).contains(s.zero)]
        expected = s.neg(x)
        if not s.add(x, expected).contains(s.zero):
            cex = (x,)
            detail = "no inverse"
            break
        if any(y != expected for y in inverses):
            cex = (x,)
            detail = "inverse not unique"
            break
    rep.results.append(AxiomResult("unique inverses", cex is None, cex, detail))

    cex = None
    for y, z in itertools.product(probe, repeat=2):
        sumset = s.add(y, z)
        for x in probe:
            if not sumset.contains(x):
                continue
            if not s.add(x, s.neg(z)).contains(y) or not s.add(s.neg(y), x).contains(z):
                cex = (x, y, z)
                break
        if cex:
            break
    rep.results.append(AxiomResult("reversibility", cex is None, cex))
    return rep


def _check_monoid_and_distributivity(s, probe, rep):
    cex = None
    for a, b in itertools.combinations_with_replacement(probe, 2):
        if s.mul(a, b) != s.mul(b, a):
            cex = (a, b)
            break
    rep.results.append(AxiomResult("multiplication commutes", cex is None, cex))

    cex = None
    for a, b, c in itertools.product(probe, repeat=3):
        if s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)):
            cex = (a, b, c)
            break
    rep.results.append(AxiomResult("multiplication associates", cex is None, cex))

    cex = None
    for a in probe:
        if s.mul(s.one, a) != a:
            cex = (a,)
            break
    rep.results.append(AxiomResult("multiplicative identity", cex is None, cex))

    cex = None
    for a in probe:
        if s.mul(a, s.zero) != s.zero:
            cex = (a,)
            break
    rep.results.append(AxiomResult("zero absorbs", cex is None, cex))

    cex = None
    detail = ""
    for x, y, z in itertools.product(probe, repeat=3):
        lhs = s.scale_set(x, s.add(y, z))
        rhs = s.add(s.mul(x, y), s.mul(x, z))
        if lhs != rhs:
            cex = (x, y, z)
            detail = (
                "containment holds, equality fails"
                if vs_subset(lhs, rhs)
                else "containment fails"
            )
            break
    rep.results.append(AxiomResult("distributivity (as equality)", cex is None, cex, detail))


def check_hyperring(s, probe=None):
    probe, scope = _probe_for(s, probe)
    rep = check_hypergroup(s, probe)
    rep.checked = "hyperring"
    rep.scope = scope
    _check_monoid_and_distributivity(s, probe, rep)
    return rep


def check_hyperfield(s, probe=None):
    probe, scope = _probe_for(s, probe)
    rep = check_hyperring(s, probe)
    rep.checked = "hyperfield"
    rep.scope = scope
    cex = None
    detail = ""
    elems = s.elements()
    for x in probe:
        if x == s.zero:
            continue
        try:
            y = s.inv(x)
        except NotImplementedError:
            y = next((c for c in (elems or probe) if s.mul(x, c) == s.one), None)
        except ZeroDivisionError:
            y = None
        if y is None or s.mul(x, y) != s.one:
            cex = (x,)
            detail = "no multiplicative inverse"
            break
    rep.results.append(AxiomResult("nonzero elements invertible", cex is None, cex, detail))
    return rep


def check_doubly_distributive(s, probe=None):
    """(a+b)(c+d) = ac + ad + bc + bd as exact value sets."""
    probe, scope = _probe_for(s, probe)
    rep = Report(s.name, "doubly distributive", scope, probe)
    cex = None
    detail = ""
    for a, b, c, d in itertools.product(probe, repeat=4):
        lhs = s.mul_sets(s.add(a, b), s.add(c, d))
        rhs = s.singleton(s.mul(a, c))
        for term in (s.mul(a, d), s.mul(b, c), s.mul(b, d)):
            rhs = s.sum_sets(rhs, s.singleton(term))
        if lhs != rhs:
            cex = (a, b, c, d)
            detail = "containment holds, equality fails" if vs_subset(lhs, rhs) else "sets differ"
            break
    rep.results.append(AxiomResult("doubly distributive", cex is None, cex, detail))
    return rep


# ---------------------------------------------------------------------------
# homomorphisms


def hom_check(f, src, dst, elements=None, pairs=None, name="f"):
    """Verify a map src -> dst as a hyperring homomorphism; also reports strictness.

    f may be a dict or a callable.  On infinite carriers the additive check
    samples hypersums through the probe; the verdict scope says so.
    """
    fn = f.__getitem__ if isinstance(f, dict) else f
    if elements is None:
        elements, scope = _probe_for(src, None)
    else:
        elements = list(elements)
        scope = "exhaustive" if (src.elements() is not None and set(elements) == set(src.elements())) else "probe grid"
    if pairs is None:
        pairs = list(itertools.combinations_with_replacement(elements, 2))
    rep = Report(f"{name}: {src.name} -> {dst.name}", "homomorphism", scope, elements)

    ok = fn(src.zero) == dst.zero
    rep.results.append(AxiomResult("maps zero to zero", ok, None if ok else (src.zero,)))
    ok = fn(src.one) == dst.one
    rep.results.append(AxiomResult("maps one to one", ok, None if ok else (src.one,)))

    cex = None
    for a, b in pairs:
        if fn(src.mul(a, b)) != dst.mul(fn(a), fn(b)):
            cex = (a, b)
            break
    rep.results.append(AxiomResult("multiplicative", cex is None, cex))

    cex = None
    strict = True
    sampled = False
    value_sample = {fn(e) for e in elements}
    for a, b in pairs:
        sumset = src.add(a, b)
        members = iter_finite(sumset)
        pair_sampled = members is None
        if pair_sampled:
            members = [x for x in elements if sumset.contains(x)]
            sampled = True
        target = dst.add(fn(a), fn(b))
        image = [fn(x) for x in members]
        if not all(target.contains(v) for v in image):
            cex = (a, b)
            break
        if pair_sampled:
            # strictness sampled: every probed target value must be hit
            hit = set(image)
            if any(v not in hit for v in value_sample if target.contains(v)):
                strict = False
        else:
            img_set = dst.singleton(image[0]) if image else None
            for v in image[1:]:
                img_set = img_set.union(dst.singleton(v))
            if img_set is None or img_set != target:
                strict = False
    detail = "hypersums sampled through the probe" if sampled else ""
    rep.results.append(AxiomResult("additive containment f(a+b) <= f(a)+f(b)", cex is None, cex, detail))
    strict_known = cex is None and not sampled
    rep.results.append(
        AxiomResult(
            "strict (equality throughout)",
            True,
            None,
            ("yes" if strict else "no") if strict_known else ("on probe: " + ("yes" if strict else "no")),
        )
    )
    rep.strict = strict if strict_known else (strict, "probe")
    return rep


def enumerate_finite_homs(src, dst):
    """All hyperring homomorphisms between finite structures, by pruned search.

    Returns value tables as tuples over src.elements(), sorted lexicographically
    by target position.  Backtracking branches on the element with fewest
    remaining candidates and propagates multiplicativity (an equality, so it
    forces values) and hyperadditive containment (a filter).
    """
    s_elems = list(src.elements())
    d_elems = list(dst.elements())
    n, m = len(s_elems), len(d_elems)
    s_index = {e: i for i, e in enumerate(s_elems)}
    d_index = {e: i for i, e in enumerate(d_elems)}

    smul = [[s_index[src.mul(a, b)] for b in s_elems] for a in s_elems]
    sadd = [
        [frozenset(s_index[c] for c in iter_finite(src.add(a, b))) for b in s_elems]
        for a in s_elems
    ]
    dmul = [[d_index[dst.mul(a, b)] for b in d_elems] for a in d_elems]
    dadd = [
        [frozenset(d_index[c] for c in iter_finite(dst.add(a, b))) for b in d_elems]
        for a in d_elems
    ]

    full = frozenset(range(m))
    cand = [full] * n
    cand[s_index[src.zero]] = frozenset([d_index[dst.zero]])
    cand[s_index[src.one]] = frozenset([d_index[dst.one]])

    def propagate(cand):
        queue = [i for i in range(n) if len(cand[i]) == 1]
        seen = set(queue)
        while queue:
            i = queue.pop()
            vi = next(iter(cand[i]))
            for j in range(n):
                if len(cand[j]) != 1:
                    continue
                vj = next(iter(cand[j]))
                for (x, y, vx, vy) in ((i, j, vi, vj), (j, i, vj, vi)):
                    k = smul[x][y]
                    forced = frozenset([dmul[vx][vy]])
                    if not cand[k] & forced:
                        return None
                    if cand[k] != cand[k] & forced:
                        cand[k] = cand[k] & forced
                        if k not in seen:
                            queue.append(k)
                            seen.add(k)
                    allowed = dadd[vx][vy]
                    for c in sadd[x][y]:
                        newc = cand[c] & allowed
                        if not newc:
                            return None
                        if newc != cand[c]:
                            cand[c] = newc
                            if len(newc) == 1 and c not in seen:
                                queue.append(c)
                                seen.add(c)
        return cand

    def verify(values):
        for i in range(n):
            for j in range(n):
                if values[smul[i][j]] != dmul[values[i]][values[j]]:
                    return False
                allowed = dadd[values[i]][values[j]]
                if any(values[c] not in allowed for c in sadd[i][j]):
                    return False
        return True

    results = []

    def search(cand):
        cand = propagate(list(cand))
        if cand is None:
            return
        open_cells = [i for i in range(n) if len(cand[i]) > 1]
        if not open_cells:
            values = tuple(next(iter(c)) for c in cand)
            if verify(values):
                results.append(values)
            return
        i = min(open_cells, key=lambda k: len(cand[k]))
        for v in sorted(cand[i]):
            branch = list(cand)
            branch[i] = frozenset([v])
            search(branch)

    search(cand)
    tables = sorted(set(results))
    return [tuple(d_elems[v] for v in values) for values in tables]
