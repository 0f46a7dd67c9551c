"""Hom-sets into the Krasner and sign hyperfields, realised as finite spaces.

Finite (hyper)rings get exhaustive homomorphism enumeration, the
kernel-to-prime bijection, and the evaluation topology on Hom(A, H) (the
coarsest making every evaluation map continuous), compared point-for-point
against the Zariski spectrum.

For rational polynomial quotients Q[x]/(f) with f squarefree, orderings are
real-root descriptors: an irreducible factor plus an isolating rational
interval.  Signs of arbitrary polynomials at the root are decided exactly by
interval refinement and Sturm counting.  The spectral topology with subbasis
U(g) = {P : g positive at P} is generated over a deterministic polynomial
probe and compared against the evaluation topology for the sign hyperfield.

Charts of hom-spaces glue along open embeddings into a colimit topology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from hyperalg import hypercore, topofin
from hyperalg.finring import FiniteRing, RingHom
from hyperalg.hypercore import KRASNER, SIGNS, AxiomResult, Report
from hyperalg.polyq import (
    PolyQ,
    count_real_roots,
    factor_rational,
    is_squarefree,
    isolate_real_roots,
    poly_str,
    root_bound,
    sign_at_root,
    sturm_sequence,
)

TARGETS = {"K": KRASNER, "S": SIGNS}


class SquarefreeError(ValueError):
    """The polynomial has repeated factors; the caller must radical-ize."""


class GluingError(ValueError):
    pass


def _hyper(R):
    return R.as_hyperring() if isinstance(R, FiniteRing) else R


# ---------------------------------------------------------------------------
# hom enumeration over finite carriers


@dataclass(frozen=True)
class HomPoint:
    """A homomorphism into a hyperfield, as a value table over the carrier."""

    domain: str
    target: str
    table: tuple

    def __call__(self, a):
        return self.table[a]

    def kernel(self):
        return frozenset(i for i, v in enumerate(self.table) if v == 0)

    def to_json(self, target=None):
        vs = (target or TARGETS.get(self.target)).value_str
        return {
            "domain": self.domain,
            "target": self.target,
            "values": [vs(v) for v in self.table],
            "kernel": sorted(self.kernel()),
        }


def enumerate_homs(R, H):
    """All homomorphisms R -> H for a finite target, canonically ordered.

    Search is exhaustive over value assignments with multiplicative forcing
    and hyperadditive filtering; tables come back sorted lexicographically.
    """
    src = _hyper(R)
    tables = hypercore.enumerate_finite_homs(src, H)
    return [HomPoint(src.name, H.name, t) for t in tables]


def kernel_bijection(R, homs, prime_list):
    """The map hom -> kernel, required to be a bijection onto the primes."""
    mapping = {h: h.kernel() for h in homs}
    kernels = sorted(mapping.values(), key=sorted)
    if kernels != sorted(prime_list, key=sorted) or len(set(kernels)) != len(kernels):
        raise AssertionError(f"kernel map is not a bijection for {_hyper(R).name}")
    return mapping


# ---------------------------------------------------------------------------
# spaces over finite carriers


def _prime_label(R, prime):
    H = _hyper(R)
    return "{" + ",".join(H.label(a) for a in sorted(prime)) + "}"


def spec_space(R, prime_list=None):
    """Spec with the Zariski topology; opens generated by the D(a)."""
    from hyperalg.finring import primes as _primes

    H = _hyper(R)
    if prime_list is None:
        prime_list = _primes(H).primes
    points = sorted(prime_list, key=sorted)
    subbasis = [[p for p in points if a not in p] for a in H.elements()]
    return topofin.generate(points, subbasis, label_fn=lambda p: _prime_label(R, p))


def affine_topology(R, H, homs=None):
    """The coarsest topology on Hom(R, H) making every evaluation continuous."""
    src = _hyper(R)
    if homs is None:
        homs = enumerate_homs(src, H)
    points = [h.table for h in homs]
    full = frozenset(H.elements())
    subbasis = []
    for a in src.elements():
        for U in H.opens:
            if not U or U == full:
                continue
            subbasis.append([t for t in points if t[a] in U])
    return topofin.generate(
        points, subbasis, label_fn=lambda t: "(" + ",".join(map(str, t)) + ")"
    )


def compare_spec_affine(R):
    """Spec vs Hom(R, K) under the kernel bijection; verdict plus witnesses."""
    from hyperalg.finring import primes as _primes

    src = _hyper(R)
    homs = enumerate_homs(src, KRASNER)
    prime_list = _primes(src).primes
    mapping = kernel_bijection(src, homs, prime_list)
    spec = spec_space(src, prime_list)
    aff = affine_topology(src, KRASNER, homs)
    bij = {kernel: hom.table for hom, kernel in mapping.items()}
    verdict = topofin.compare_under_bijection(spec, aff, bij)
    return verdict, spec, aff


def krasner_vanishing(R, ideal, homs=None):
    """V_K(I): homs killing the ideal; checked equal to the image of V(I)."""
    from hyperalg.finring import primes as _primes, vanishing_set

    src = _hyper(R)
    if homs is None:
        homs = enumerate_homs(src, KRASNER)
    ideal = frozenset(ideal)
    vk = [h for h in homs if all(h(x) == 0 for x in ideal)]
    expected = {frozenset(p) for p in vanishing_set(_primes(src).primes, ideal)}
    if {h.kernel() for h in vk} != expected:
        raise AssertionError("V_K(I) does not match the image of V(I)")
    return vk


def induced_map(phi: RingHom, H):
    """Hom(B, H) -> Hom(A, H), g -> g o phi, for a ring hom phi: A -> B."""
    src_homs = enumerate_homs(phi.dst, H)
    valid = {h.table for h in enumerate_homs(phi.src, H)}
    out = {}
    for g in src_homs:
        table = tuple(g.table[phi(a)] for a in range(phi.src.n))
        if table not in valid:
            raise AssertionError("composed map is not a homomorphism")
        out[g] = HomPoint(phi.src.descriptor, H.name, table)
    return out


def induced_map_continuous(phi: RingHom, H):
    """Check continuity of the induced map against the two affine topologies."""
    mapping = induced_map(phi, H)
    t_src = affine_topology(phi.dst, H)  # domain of the induced map
    t_dst = affine_topology(phi.src, H)
    fwd = {g.table: h.table for g, h in mapping.items()}
    for u in t_dst.opens:
        open_pts = {t_dst.points[i] for i in u}
        pre = [p for p in t_src.points if fwd[p] in open_pts]
        if not t_src.is_open(pre):
            return False
    return True


# ---------------------------------------------------------------------------
# orderings of Q[x]/(f)


class OrderingDescriptor:
    """An ordering: an irreducible rational factor plus an isolated real root."""

    def __init__(self, factor, lo, hi):
        if factor(lo) == 0 or factor(hi) == 0:
            raise ValueError("isolating interval endpoints must not be roots")
        if factor(lo) * factor(hi) > 0:
            raise ValueError("no sign change over the isolating interval")
        self.factor = factor
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._signs = {}

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def refine(self, limit=None):
        """Halve the interval (to width <= limit if given); keeps the root."""
        limit = limit if limit is not None else (self.hi - self.lo) / 2
        lo, hi, flo = self.lo, self.hi, self.factor(self.lo)
        while hi - lo > limit:
            mid = (lo + hi) / 2
            fm = self.factor(mid)
            if fm == 0:  # rational root: degree-one factor; shift the cut
                mid = (lo + mid) / 2
                fm = self.factor(mid)
            if (flo > 0) != (fm > 0):
                hi = mid
            else:
                lo, flo = mid, fm
        self.lo, self.hi = lo, hi

    def sign_of(self, h):
        """Exact sign in {-1, 0, 1} of h at this root."""
        if not isinstance(h, PolyQ):
            h = PolyQ([h])
        if h not in self._signs:
            self._signs[h] = sign_at_root(h, self.factor, self.lo, self.hi)
        return self._signs[h]

    def same_root(self, other):
        if self.factor != other.factor:
            return False
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo >= hi:
            return False
        if self.factor.degree == 1:
            root = -self.factor.coeffs[0] / self.factor.coeffs[1]
            return lo < root < hi
        return count_real_roots(self.factor, lo, hi) == 1

    def label(self):
        return f"{poly_str(self.factor)} @ ({self.lo},{self.hi})"

    def __repr__(self):
        return f"OrderingDescriptor({self.label()})"

    def to_json(self):
        return {
            "factor": poly_str(self.factor),
            "interval": [str(self.lo), str(self.hi)],
        }


class SignHom:
    """The sign homomorphism Q[x]/(f) -> S attached to an ordering."""

    def __init__(self, descriptor, modulus):
        self.descriptor = descriptor
        self.modulus = modulus

    def __call__(self, h):
        return self.descriptor.sign_of(h)


def sper_points(f):
    """One ordering per real root of the squarefree polynomial f, sorted.

    Intervals are refined until pairwise disjoint, so midpoints give a total
    order matching the roots on the real line.
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if not is_squarefree(f):
        raise SquarefreeError(f"{poly_str(f)} has repeated factors; radical-ize first")
    descs = []
    for g, _ in factor_rational(f):
        for lo, hi in isolate_real_roots(g):
            descs.append(OrderingDescriptor(g, lo, hi))
    while True:
        descs.sort(key=lambda d: d.midpoint)
        clash = next(
            (
                (a, b)
                for a, b in zip(descs, descs[1:])
                if max(a.lo, b.lo) < min(a.hi, b.hi)
            ),
            None,
        )
        if clash is None:
            return descs
        for d in clash:
            d.refine()


def ordering_to_sign_hom(descriptor, f):
    """The sign map of an ordering, as a semantic hom into the sign hyperfield."""
    return SignHom(descriptor, f)


def sign_hom_to_ordering(hom, f):
    """Recover the ordering descriptor from sign queries alone.

    Finds the support factor as the unique irreducible factor with sign 0,
    then pins the root by binary search on signs of linear polynomials.
    """
    factors = [g for g, _ in factor_rational(f)]
    zeros = [g for g in factors if hom(g) == 0]
    if len(zeros) != 1:
        raise ValueError("sign data does not single out a support factor")
    g = zeros[0]
    if g.degree == 1:
        root = -g.coeffs[0] / g.coeffs[1]
        return OrderingDescriptor(g, root - 1, root + 1)
    B = root_bound(g)
    lo, hi = -B, B
    seq = sturm_sequence(g)
    while count_real_roots(g, lo, hi, seq) > 1:
        mid = (lo + hi) / 2
        s = hom(PolyQ([-mid, 1]))  # sign of (x - mid) at the root
        if s > 0:
            lo = mid
        else:
            hi = mid
    return OrderingDescriptor(g, lo, hi)


def check_sign_hom(hom, f, polys=None):
    """Homomorphism laws for a sign map, over a probe polynomial family."""
    if polys is None:
        polys = list(default_poly_probe(2, 1))
    rep = Report(f"sign hom on Q[x]/({poly_str(f)})", "homomorphism", "probe grid", polys)

    ok = hom(PolyQ()) == 0 and hom(PolyQ([1])) == 1
    rep.results.append(AxiomResult("maps zero to zero and one to one", ok, None if ok else ()))

    cex = None
    for a, b in itertools.combinations_with_replacement(polys, 2):
        if hom(a * b) != hom(a) * hom(b):
            cex = (a, b)
            break
    rep.results.append(AxiomResult("multiplicative", cex is None, cex))

    cex = None
    for a, b in itertools.combinations_with_replacement(polys, 2):
        if not SIGNS.add(hom(a), hom(b)).contains(hom(a + b)):
            cex = (a, b)
            break
    rep.results.append(
        AxiomResult("additive containment f(a+b) in f(a)+f(b)", cex is None, cex)
    )

    cex = None
    for q in polys[: min(len(polys), 8)]:
        if hom(polys[1] + f * q) != hom(polys[1]):
            cex = (q,)
            break
    rep.results.append(AxiomResult("well-defined modulo f", cex is None, cex))
    return rep


# ---------------------------------------------------------------------------
# spectral topology and the reduction to Spec


def default_poly_probe(max_degree=4, coeff_bound=2):
    """Deterministic probe family: degree ascending, coefficients lex."""
    rng = range(-coeff_bound, coeff_bound + 1)
    for d in range(0, max_degree + 1):
        for coeffs in itertools.product(rng, repeat=d + 1):
            if coeffs[-1] == 0:
                continue
            yield PolyQ(coeffs)


def _generate_with_early_exit(points, subbasis_iter, label_fn):
    """Generate a topology, stopping the probe sweep once it turns discrete."""
    points = list(points)
    limit = 2 ** len(points)
    family = []
    seen = set()
    topo = topofin.generate(points, family, label_fn)
    for subset in subbasis_iter:
        key = frozenset(subset)
        if key in seen:
            continue
        seen.add(key)
        family.append(subset)
        topo = topofin.generate(points, family, label_fn)
        if len(topo.opens) == limit:
            break
    return topo


def spectral_topology(f, probe=None, points=None):
    """Sper Q[x]/(f) with subbasis U(g) = {orderings where g is positive}."""
    descs = points if points is not None else sper_points(f)
    probe = probe if probe is not None else default_poly_probe()
    subbasis = ([d for d in descs if d.sign_of(g) == 1] for g in probe)
    return _generate_with_early_exit(descs, subbasis, lambda d: d.label())


def affine_sign_topology(f, probe=None, points=None):
    """Evaluation topology on Hom(Q[x]/(f), S) over the same probe family."""
    descs = points if points is not None else sper_points(f)
    probe = list(probe) if probe is not None else list(default_poly_probe())

    def subsets():
        for g in probe:
            signs = {d: d.sign_of(g) for d in descs}
            yield [d for d in descs if signs[d] == 1]
            yield [d for d in descs if signs[d] == -1]
            yield [d for d in descs if signs[d] != 0]

    return _generate_with_early_exit(descs, subsets(), lambda d: d.label())


def compare_sper_affine(f, probe=None):
    """Spectral vs evaluation topology under the identity on orderings.

    The subbasic open U(g) equals the evaluation preimage of {1} at g by
    construction; the content is that closing off the larger evaluation
    subbasis (which also has the preimages of {-1} and {-1,1}) changes
    nothing.
    """
    descs = sper_points(f)
    probe = list(probe) if probe is not None else list(default_poly_probe())
    spectral = spectral_topology(f, probe, points=descs)
    affine = affine_sign_topology(f, probe, points=descs)
    verdict = topofin.compare_under_bijection(spectral, affine, {d: d for d in descs})
    return verdict, spectral, affine


def reduction_sper_to_spec(descriptor):
    """The support of an ordering: its irreducible factor, a prime of Q[x]/(f)."""
    return descriptor.factor


def spec_space_semantic(f):
    """Spec Q[x]/(f) for squarefree f: points are irreducible factors.

    Ideals correspond to monic divisors of f, so the closed sets V(d) sweep
    every subset: the space is computed from the complete divisor lattice.
    """
    if not is_squarefree(f):
        raise SquarefreeError(f"{poly_str(f)} has repeated factors")
    factors = [g for g, _ in factor_rational(f)]
    points = sorted(factors, key=lambda g: (g.degree, g.coeffs))
    subbasis = []
    for k in range(len(points) + 1):
        for combo in itertools.combinations(points, k):
            d = PolyQ([1])
            for g in combo:
                d = d * g
            subbasis.append([g for g in points if not (d % g).is_zero()])
    return topofin.generate(points, subbasis, label_fn=poly_str)


def reduction_continuous(f, probe=None):
    """Continuity of ordering -> support between the two finite topologies."""
    descs = sper_points(f)
    sper_topo = spectral_topology(f, probe, points=descs)
    spec_topo = spec_space_semantic(f)
    for u in spec_topo.opens:
        open_factors = {spec_topo.points[i] for i in u}
        pre = [d for d in descs if d.factor in open_factors]
        if not sper_topo.is_open(pre):
            return False
    return True


# ---------------------------------------------------------------------------
# gluing hom-spaces along open embeddings


@dataclass
class Gluing:
    """An identification of an open part of chart i with an open part of chart j."""

    i: int
    j: int
    mapping: dict


def glue_hom_spaces(charts, gluings):
    """Colimit of chart topologies along open homeomorphisms.

    Checks that every gluing domain and image is open, that each gluing is a
    homeomorphism between the subspaces, and that explicit gluings agree on
    triple overlaps.  The glued opens are exactly the subsets whose preimage
    in every chart is open; chart images must come out open.
    """
    for g in gluings:
        dom, img = list(g.mapping), list(g.mapping.values())
        if not charts[g.i].is_open(dom):
            raise GluingError(f"gluing domain in chart {g.i} is not open")
        if not charts[g.j].is_open(img):
            raise GluingError(f"gluing image in chart {g.j} is not open")
        sub_i = charts[g.i].subspace(dom)
        sub_j = charts[g.j].subspace(img)
        verdict = topofin.compare_under_bijection(sub_i, sub_j, g.mapping)
        if not verdict.homeomorphic:
            raise GluingError("gluing map is not a homeomorphism onto its image")

    tags = [(i, p) for i, t in enumerate(charts) for p in t.points]
    parent = {t: t for t in tags}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb, key=str)] = min(ra, rb, key=str)

    lookup = {}
    for g in gluings:
        for p, q in g.mapping.items():
            union((g.i, p), (g.j, q))
            lookup[(g.i, g.j, p)] = q

    # explicit gluings must compose on triple overlaps
    for g1 in gluings:
        for g2 in gluings:
            if g2.i != g1.j:
                continue
            for g3 in gluings:
                if (g3.i, g3.j) != (g1.i, g2.j):
                    continue
                for p, q in g1.mapping.items():
                    if q in g2.mapping and p in g3.mapping:
                        if g3.mapping[p] != g2.mapping[q]:
                            raise GluingError("cocycle condition fails on a triple overlap")

    classes = {}
    for t in tags:
        classes.setdefault(find(t), []).append(t)
    for members in classes.values():
        per_chart = {}
        for (i, p) in members:
            if i in per_chart and per_chart[i] != p:
                raise GluingError("gluing identifies two points of one chart")
            per_chart[i] = p

    class_list = sorted(classes.values(), key=lambda ms: sorted(map(str, ms)))
    point_names = []
    class_of = {}
    for members, name in (
        (ms, "~".join(f"{i}:{charts[i].label_fn(p)}" for i, p in sorted(ms, key=str)))
        for ms in class_list
    ):
        point_names.append(name)
        for t in members:
            class_of[t] = name

    n = len(point_names)
    opens = []
    for bits in range(2**n):
        subset = {point_names[k] for k in range(n) if bits >> k & 1}
        ok = True
        for i, t in enumerate(charts):
            pre = [p for p in t.points if class_of[(i, p)] in subset]
            if not t.is_open(pre):
                ok = False
                break
        if ok:
            opens.append(frozenset(point_names.index(q) for q in subset))
    glued = topofin.FiniteTopology(point_names, opens)

    for i, t in enumerate(charts):
        image = [class_of[(i, p)] for p in t.points]
        if not glued.is_open(image):
            raise GluingError(f"chart {i} image is not open in the glued space")
    return glued
