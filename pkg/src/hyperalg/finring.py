"""Finite commutative rings, their quotient hyperrings, primes, and localization.

Rings are Cayley tables over carrier indices 0..n-1, built by three
constructors (Z/n, F_p[x]/(f), binary products) and verified exhaustively at
construction with vectorised table identities.  A ring viewed as a hyperring
has singleton hypersums; quotients by a unit subgroup get genuinely
multivalued addition [a] + [b] = {[g1 a + g2 b]}.

Prime ideals are computed two independent ways: kernels of enumerated
homomorphisms to the Krasner hyperfield, and the complement-is-a-monoid test
over an enumerated ideal family.  The ideal family is complete: closure
search for small carriers, principal ideals for the constructor rings (all
principal ideal rings).  Localization at a prime works with fractions over
the complement, exactly as multisets of carrier pairs.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from hyperalg import hypercore
from hyperalg.hypercore import KRASNER, FiniteVS, _FiniteCarrier, finite_set

IDEAL_BRUTE_LIMIT = 16  # closure-search ideal enumeration above this is skipped


class RingConstructionError(ValueError):
    pass


def _as_array(table):
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise RingConstructionError("tables must be square")
    return arr


def _verify_ring_tables(add, mul, zero, one):
    n = add.shape[0]
    if not (add == add.T).all() or not (mul == mul.T).all():
        raise RingConstructionError("tables are not commutative")
    if not (add[add, :] == add[:, add]).all():
        raise RingConstructionError("addition is not associative")
    if not (mul[mul, :] == mul[:, mul]).all():
        raise RingConstructionError("multiplication is not associative")
    if not (mul[:, add] == add[mul[:, :, None], mul[:, None, :]]).all():
        raise RingConstructionError("distributivity fails")
    if not (add[zero] == np.arange(n)).all():
        raise RingConstructionError("additive identity is wrong")
    if not (mul[one] == np.arange(n)).all():
        raise RingConstructionError("multiplicative identity is wrong")
    if not (add == zero).any(axis=1).all():
        raise RingConstructionError("some element has no additive inverse")


class FiniteRing:
    """Commutative unital ring on indices 0..n-1, verified by exhaustion."""

    def __init__(self, add, mul, labels, descriptor, zero=0, one=1, principal=False):
        self.add_table = _as_array(add)
        self.mul_table = _as_array(mul)
        self.n = self.add_table.shape[0]
        self.zero = zero
        self.one = one
        self.labels = [str(x) for x in labels]
        self.descriptor = descriptor
        self.is_principal_ideal_ring = principal
        if self.n < 2:
            raise RingConstructionError("rings here have at least two elements")
        _verify_ring_tables(self.add_table, self.mul_table, zero, one)
        self.neg_table = [int(np.nonzero(self.add_table[i] == zero)[0][0]) for i in range(self.n)]

    def elements(self):
        return range(self.n)

    def add(self, a, b):
        return int(self.add_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return self.neg_table[a]

    def label(self, a):
        return self.labels[a]

    def units(self):
        return [a for a in range((self.n)) if self.one in self.mul_table[a]]

    def inverse(self, a):
        hits = np.nonzero(self.mul_table[a] == self.one)[0]
        if len(hits) == 0:
            raise ZeroDivisionError(f"{self.label(a)} is not a unit")
        return int(hits[0])

    def as_hyperring(self):
        return RingHyperring(self)

    def __repr__(self):
        return f"FiniteRing({self.descriptor}, n={self.n})"


def zmod(n):
    if n < 2:
        raise RingConstructionError("zmod needs n >= 2")
    idx = np.arange(n)
    return FiniteRing(
        (idx[:, None] + idx) % n,
        (idx[:, None] * idx) % n,
        [str(i) for i in range(n)],
        f"zmod({n})",
        principal=True,
    )


def _poly_label(digits):
    parts = []
    for k in range(len(digits) - 1, -1, -1):
        c = digits[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            xp = "x" if k == 1 else f"x^{k}"
            parts.append(xp if c == 1 else f"{c}{xp}")
    return "+".join(parts) if parts else "0"


def polyquot(p, f_coeffs):
    """F_p[x]/(f) with f given little-endian; f is normalised monic mod p."""
    if p < 2 or any(p % k == 0 for k in range(2, p)):
        raise RingConstructionError("polyquot needs a prime modulus")
    f = [c % p for c in f_coeffs]
    while f and f[-1] == 0:
        f.pop()
    if len(f) < 2:
        raise RingConstructionError("polyquot needs deg f >= 1")
    lc = f[-1]
    lc_inv = pow(lc, -1, p)
    f = [(c * lc_inv) % p for c in f]
    d = len(f) - 1
    n = p**d

    def digits(e):
        out = []
        for _ in range(d):
            out.append(e % p)
            e //= p
        return out

    def index(ds):
        e = 0
        for c in reversed(ds):
            e = e * p + c
        return e

    def polymulmod(a, b):
        prod = [0] * (2 * d - 1 or 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(d):
                    prod[k - d + i] = (prod[k - d + i] - c * f[i]) % p
        return prod[:d]

    add = [[index([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(n)] for a in range(n)]
    mul = [[index(polymulmod(digits(a), digits(b))) for b in range(n)] for a in range(n)]
    labels = [_poly_label(digits(e)) for e in range(n)]
    return FiniteRing(add, mul, labels, f"polyquot({p},{f_coeffs})", principal=True)


def product(r1, r2):
    n1, n2 = r1.n, r2.n
    a1, a2 = r1.add_table, r2.add_table
    m1, m2 = r1.mul_table, r2.mul_table
    add = (a1[:, None, :, None] * n2 + a2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    mul = (m1[:, None, :, None] * n2 + m2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = [f"({r1.label(i)},{r2.label(j)})" for i in range(n1) for j in range(n2)]
    return FiniteRing(
        add,
        mul,
        labels,
        f"product({r1.descriptor},{r2.descriptor})",
        zero=0,
        one=r1.one * n2 + r2.one,
        principal=r1.is_principal_ideal_ring and r2.is_principal_ideal_ring,
    )


# ---------------------------------------------------------------------------
# finite hyperrings as tables


class TableHyperring(_FiniteCarrier):
    """Finite hyperring presented by a multiplication table and hypersum map."""

    kind = "hyperring"

    def __init__(self, n, mul_table, hyperadd, labels, name, zero=0, one=1):
        self.n = n
        self._mul = [[int(v) for v in row] for row in mul_table]
        self._hyperadd = {k: frozenset(int(c) for c in v) for k, v in hyperadd.items()}
        self.labels = list(labels)
        self.name = name
        self.zero = zero
        self.one = one
        self._neg = {}
        for a in range(n):
            invs = [b for b in range(n) if zero in self.add_raw(a, b)]
            self._neg[a] = invs[0] if invs else None

    def elements(self):
        return range(self.n)

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.n

    def add_raw(self, a, b):
        return self._hyperadd[(a, b)]

    def add(self, a, b):
        self.check_element(a)
        self.check_element(b)
        return finite_set(self._hyperadd[(a, b)])

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        v = self._neg[a]
        if v is None:
            raise ValueError(f"{self.label(a)} has no additive inverse")
        return v

    def inv(self, a):
        for b in range(self.n):
            if self.mul(a, b) == self.one:
                return b
        raise ZeroDivisionError(f"{self.label(a)} is not a unit")

    def label(self, a):
        return self.labels[a]

    def value_str(self, a):
        return self.labels[a]

    def sort_key(self, a):
        return a

    def __repr__(self):
        return f"TableHyperring({self.name}, n={self.n})"


class RingHyperring(TableHyperring):
    """A commutative ring viewed inside hyperrings: singleton hypersums."""

    def __init__(self, ring):
        hyperadd = {
            (a, b): frozenset([ring.add(a, b)])
            for a in range(ring.n)
            for b in range(ring.n)
        }
        super().__init__(
            ring.n,
            ring.mul_table,
            hyperadd,
            ring.labels,
            ring.descriptor,
            ring.zero,
            ring.one,
        )
        self.ring = ring


@dataclass(frozen=True)
class UnitSubgroup:
    """A subgroup of the unit group of a finite ring."""

    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        r = self.ring
        if r.one not in self.members:
            raise RingConstructionError("unit subgroup must contain 1")
        units = set(r.units())
        for g in self.members:
            if g not in units:
                raise RingConstructionError(f"{r.label(g)} is not a unit")
            if r.inverse(g) not in self.members:
                raise RingConstructionError("subgroup not closed under inverses")
            for h in self.members:
                if r.mul(g, h) not in self.members:
                    raise RingConstructionError("subgroup not closed under products")


class QuotientHyperring(TableHyperring):
    """A/G for a unit subgroup G: orbits with multivalued addition."""

    def __init__(self, ring, subgroup):
        if not isinstance(subgroup, UnitSubgroup):
            subgroup = UnitSubgroup(ring, frozenset(subgroup))
        self.parent = ring
        self.subgroup = subgroup
        orbit_sets = {}
        for a in range(ring.n):
            orb = frozenset(ring.mul(g, a) for g in subgroup.members)
            orbit_sets[min(orb)] = orb
        reps = sorted(orbit_sets)  # orbit ids ordered by least parent element
        self.orbits = [orbit_sets[r] for r in reps]
        self._orbit_of = {}
        for idx, orb in enumerate(self.orbits):
            for a in orb:
                self._orbit_of[a] = idx
        n = len(self.orbits)
        mul = [[self._orbit_of[ring.mul(reps[i], reps[j])] for j in range(n)] for i in range(n)]
        gs = sorted(subgroup.members)
        hyperadd = {}
        for i in range(n):
            for j in range(n):
                sums = set()
                for g1 in gs:
                    for g2 in gs:
                        c = ring.add(ring.mul(g1, reps[i]), ring.mul(g2, reps[j]))
                        sums.add(self._orbit_of[c])
                hyperadd[(i, j)] = frozenset(sums)
        labels = ["[" + ring.label(r) + "]" for r in reps]
        name = f"quotient({ring.descriptor},{sorted(ring.label(g) for g in subgroup.members)})"
        super().__init__(
            n, mul, hyperadd, labels, name,
            zero=self._orbit_of[ring.zero], one=self._orbit_of[ring.one],
        )
        # multiplication must not depend on orbit representatives
        for i, orb_i in enumerate(self.orbits):
            for j, orb_j in enumerate(self.orbits):
                vals = {self._orbit_of[ring.mul(a, b)] for a in orb_i for b in orb_j}
                if len(vals) != 1:
                    raise RingConstructionError("quotient multiplication ill-defined")

    def orbit_of(self, parent_element):
        return self._orbit_of[parent_element]


def quotient(ring, units):
    return QuotientHyperring(ring, units)


# ---------------------------------------------------------------------------
# ideals and primes


def _hyper(R):
    return R.as_hyperring() if isinstance(R, FiniteRing) else R


def ideal_closure(R, seed):
    """Smallest ideal of the finite hyperring R containing the seed."""
    R = _hyper(R)
    I = {R.zero} | set(seed)
    while True:
        new = set()
        items = list(I)
        for a in items:
            na = R.neg(a)
            if na not in I:
                new.add(na)
            for b in items:
                new |= R.add_raw(a, b) - I
            for r in R.elements():
                m = R.mul(r, a)
                if m not in I:
                    new.add(m)
        if not new:
            return frozenset(I)
        I |= new


def is_ideal(R, I):
    R = _hyper(R)
    I = frozenset(I)
    if R.zero not in I:
        return False
    for a in I:
        if R.neg(a) not in I:
            return False
        for b in I:
            if not R.add_raw(a, b) <= I:
                return False
        for r in R.elements():
            if R.mul(r, a) not in I:
                return False
    return True


def is_prime_ideal(R, I):
    """Proper ideal whose complement is a multiplicative monoid."""
    R = _hyper(R)
    I = frozenset(I)
    if R.one in I:
        return False
    comp = [a for a in R.elements() if a not in I]
    return all(R.mul(a, b) not in I for a in comp for b in comp)


def all_ideals(R):
    """Every ideal, by closure search from {0}; intended for small carriers."""
    R = _hyper(R)
    start = ideal_closure(R, [])
    seen = {start}
    frontier = [start]
    while frontier:
        I = frontier.pop()
        for x in R.elements():
            if x in I:
                continue
            J = ideal_closure(R, I | {x})
            if J not in seen:
                seen.add(J)
                frontier.append(J)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def principal_ideals(R):
    """The ideals aR of a classical finite ring (complete when R is a PIR)."""
    ring = R.ring if isinstance(R, RingHyperring) else R
    out = {frozenset(int(v) for v in ring.mul_table[a]) for a in range(ring.n)}
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass
class PrimesResult:
    primes: list
    via_ideals: list | None
    via_homs: list
    notice: str = ""


def primes(R, method="auto"):
    """All prime ideals of a finite (hyper)ring, cross-checked when feasible.

    The hom route enumerates homomorphisms to the Krasner hyperfield and takes
    kernels.  The ideal route tests complements of an enumerated ideal family
    for multiplicative closure; it is exact for small carriers (closure
    search) and for the constructor rings (principal ideals).  Disagreement
    raises; a skipped cross-check is recorded in the notice.
    """
    H = _hyper(R)
    via_homs = None
    via_ideals = None
    notice = ""
    if method in ("auto", "homs", "both"):
        tables = hypercore.enumerate_finite_homs(H, KRASNER)
        kernels = {frozenset(i for i, v in enumerate(t) if v == 0) for t in tables}
        via_homs = sorted(kernels, key=sorted)
    if method in ("auto", "ideals", "both"):
        if H.n <= IDEAL_BRUTE_LIMIT:
            fam = all_ideals(H)
        elif isinstance(H, RingHyperring) and H.ring.is_principal_ideal_ring:
            fam = principal_ideals(H)
        else:
            fam = None
            notice = f"ideal-route cross-check skipped: carrier {H.n} > {IDEAL_BRUTE_LIMIT}"
        if fam is not None:
            via_ideals = sorted(
                (I for I in fam if is_prime_ideal(H, I)), key=sorted
            )
    if via_homs is not None and via_ideals is not None and via_homs != via_ideals:
        raise AssertionError(
            f"prime routes disagree on {H.name}: homs={via_homs} ideals={via_ideals}"
        )
    result = via_homs if via_homs is not None else via_ideals
    return PrimesResult(result, via_ideals, via_homs, notice)


def maximal_ideals(R):
    H = _hyper(R)
    proper = [I for I in all_ideals(H) if H.one not in I]
    return [I for I in proper if not any(I < J for J in proper if J != I)]


def vanishing_set(prime_list, ideal):
    """V(I) = primes containing I."""
    ideal = frozenset(ideal)
    return [p for p in prime_list if ideal <= p]


def basic_open(R, prime_list, a):
    """D(a) = primes not containing a; the complement of V((a))."""
    return [p for p in prime_list if a not in p]


# ---------------------------------------------------------------------------
# localization


def localize(R, prime):
    """R_p with denominators from S = R minus p, as classes of pairs r/s.

    The underlying set is (R x S)/~ with (r,a) ~ (r1,a1) iff c r a1 = c r1 a
    for some c in S.  Addition: r/a + r1/a1 = { c/(a a1) : c in a r1 + a1 r }.
    The output always carries this reading of the construction in its note.
    """
    H = _hyper(R)
    prime = frozenset(prime)
    if not is_ideal(H, prime) or not is_prime_ideal(H, prime):
        raise ValueError("localization requires a prime ideal")
    S = [a for a in H.elements() if a not in prime]
    pairs = [(r, s) for r in H.elements() for s in S]
    index = {p: i for i, p in enumerate(pairs)}

    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for i, (r1, s1) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            r2, s2 = pairs[j]
            if any(H.mul(H.mul(c, r1), s2) == H.mul(H.mul(c, r2), s1) for c in S):
                union(i, j)

    roots = sorted({find(i) for i in range(len(pairs))})
    class_of = {i: roots.index(find(i)) for i in range(len(pairs))}
    n = len(roots)

    def cls(r, s):
        return class_of[index[(r, s)]]

    reps = [pairs[root] for root in roots]
    mul = [[cls(H.mul(reps[i][0], reps[j][0]), H.mul(reps[i][1], reps[j][1])) for j in range(n)] for i in range(n)]
    hyperadd = {}
    for i in range(n):
        for j in range(n):
            (r1, a1), (r2, a2) = reps[i], reps[j]
            numerators = H.add_raw(H.mul(a1, r2), H.mul(a2, r1))
            hyperadd[(i, j)] = frozenset(cls(c, H.mul(a1, a2)) for c in numerators)
    # class arithmetic must not depend on representatives
    for i in range(n):
        for (r1, s1) in (p for p in pairs if class_of[index[p]] == i):
            if cls(H.mul(r1, reps[0][0]), H.mul(s1, reps[0][1])) != mul[i][0]:
                raise AssertionError("localization multiplication ill-defined")
    labels = [f"{H.label(r)}/{H.label(s)}" for (r, s) in reps]
    loc = TableHyperring(
        n, mul, hyperadd, labels,
        f"localize({H.name}, {sorted(prime)})",
        zero=cls(H.zero, H.one), one=cls(H.one, H.one),
    )
    loc.note = "fractions taken over S = R \\ p (denominators in the complement)"
    return loc


# ---------------------------------------------------------------------------
# isomorphisms and ring homomorphisms


def hyperring_isomorphism(R1, R2):
    """A table isomorphism R1 -> R2 fixing 0 and 1, by exhaustive search."""
    A, B = _hyper(R1), _hyper(R2)
    if A.n != B.n:
        return None
    rest_a = [x for x in A.elements() if x not in (A.zero, A.one)]
    rest_b = [x for x in B.elements() if x not in (B.zero, B.one)]
    for perm in itertools.permutations(rest_b):
        f = {A.zero: B.zero, A.one: B.one}
        f.update(dict(zip(rest_a, perm)))
        ok = all(
            f[A.mul(x, y)] == B.mul(f[x], f[y])
            and {f[c] for c in A.add_raw(x, y)} == B.add_raw(f[x], f[y])
            for x in A.elements()
            for y in A.elements()
        )
        if ok:
            return f
    return None


@dataclass(frozen=True)
class RingHom:
    """A verified unital ring homomorphism between finite rings."""

    src: FiniteRing
    dst: FiniteRing
    values: tuple

    def __post_init__(self):
        f, A, B = self.values, self.src, self.dst
        if len(f) != A.n:
            raise ValueError("value table has the wrong length")
        if f[A.zero] != B.zero or f[A.one] != B.one:
            raise ValueError("not unital")
        for a in range(A.n):
            for b in range(A.n):
                if f[A.add(a, b)] != B.add(f[a], f[b]) or f[A.mul(a, b)] != B.mul(f[a], f[b]):
                    raise ValueError("not a ring homomorphism")

    def __call__(self, a):
        return self.values[a]

    def compose(self, other):
        """self after other (other: A -> B, self: B -> C)."""
        if other.dst.descriptor != self.src.descriptor or other.dst.n != self.src.n:
            raise ValueError("homs do not compose")
        return RingHom(other.src, self.dst, tuple(self.values[v] for v in other.values))


def identity_hom(R):
    return RingHom(R, R, tuple(range(R.n)))


def zmod_projection(m, n):
    """The reduction Z/m -> Z/n for n dividing m."""
    if m % n:
        raise ValueError("projection needs n | m")
    return RingHom(zmod(m), zmod(n), tuple(i % n for i in range(m)))


# ---------------------------------------------------------------------------
# structure descriptors


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|[(),\[\]-])")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad descriptor near {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _DescParser:
    """zmod(n) | product(d1,d2,...) | polyquot(p,[c0,c1,...]) | quotient(d,[units])"""

    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        t = self.peek()
        if t is None or (expect is not None and t != expect):
            raise ValueError(f"expected {expect!r}, found {t!r}")
        self.i += 1
        return t

    def int_value(self):
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        return sign * int(self.take())

    def int_list(self):
        self.take("[")
        out = []
        if self.peek() != "]":
            out.append(self.int_value())
            while self.peek() == ",":
                self.take()
                out.append(self.int_value())
        self.take("]")
        return out

    def ring(self):
        head = self.take()
        if head == "zmod":
            self.take("(")
            n = self.int_value()
            self.take(")")
            return zmod(n)
        if head == "product":
            self.take("(")
            r = self.ring()
            while self.peek() == ",":
                self.take()
                r = product(r, self.ring())
            self.take(")")
            return r
        if head == "polyquot":
            self.take("(")
            p = self.int_value()
            self.take(",")
            coeffs = self.int_list()
            self.take(")")
            return polyquot(p, coeffs)
        raise ValueError(f"unknown ring constructor {head!r}")

    def structure(self):
        if self.peek() == "quotient":
            self.take()
            self.take("(")
            ring = self.ring()
            self.take(",")
            units = self.int_list()
            self.take(")")
            out = quotient(ring, frozenset(units))
        else:
            out = self.ring()
        if self.peek() is not None:
            raise ValueError(f"trailing tokens after descriptor: {self.toks[self.i:]}")
        return out


def parse_structure(text):
    """Parse a ring/hyperring descriptor; see the grammar in docs/config.md."""
    return _DescParser(text).structure()
