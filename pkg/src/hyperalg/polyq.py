"""Exact polynomial arithmetic over Q.

Univariate polynomials are immutable little-endian coefficient tuples of
Fractions, with Sturm-sequence root counting, real-root isolation, and exact
sign determination at real algebraic numbers.  Factorisation into rational
irreducibles is delegated to sympy; everything else is done here so the
isolation/sign machinery stays an independent route.

Sparse bivariate polynomials (dict keyed by exponent pairs) support the
substitutions needed for monomial valuations after a linear change of
variables.
"""

from __future__ import annotations

from fractions import Fraction

import sympy


class PolyQ:
    """Univariate polynomial over Q; coeffs little-endian, trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("PolyQ is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        r = list(self.coeffs)
        d = other.degree
        lc = other.coeffs[-1]
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] / lc
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
        return PolyQ(q), PolyQ(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self):
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return PolyQ([c / lc for c in self.coeffs])

    def __repr__(self):
        return poly_str(self)


ZERO = PolyQ()
ONE = PolyQ([1])
X = PolyQ([0, 1])


def _coerce(p):
    if isinstance(p, PolyQ):
        return p
    if isinstance(p, (int, Fraction)):
        return PolyQ([p])
    raise TypeError(f"cannot coerce {p!r} to PolyQ")


def poly_gcd(f, g):
    """Monic gcd by the Euclidean algorithm."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree(f):
    if f.is_zero():
        return False
    return poly_gcd(f, f.derivative()).degree == 0


def mult_of_linear_factor(f, b):
    """Multiplicity of (x + b) in f, by repeated exact division."""
    if f.is_zero():
        raise ValueError("zero polynomial has no factor multiplicities")
    g = PolyQ([b, 1])
    m = 0
    while f(-Fraction(b)) == 0:
        f = f // g
        m += 1
    return m


def poly_str(f, var="x"):
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            if c == 1:
                term = xpow
            elif c == -1:
                term = f"-{xpow}"
            else:
                term = f"{c}*{xpow}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def poly_from_string(text, var=None):
    """Parse forms like 'x^3 - 2*x + 1/2'; variable name x, T, X, or Y."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    names = [var] if var else ["x", "T", "X", "Y", "t", "y"]
    name = next((n for n in names if n in s), None) or (var or "x")
    s = s.replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    coeffs = {}
    for term in s.split("+"):
        if not term:
            continue
        if name in term:
            head, _, tail = term.partition(name)
            coef = head.rstrip("*")
            if coef in ("", "-"):
                coef += "1"
            power = 1
            if tail.startswith("^"):
                power = int(tail[1:])
            elif tail:
                raise ValueError(f"bad term {term!r} in {text!r}")
            coeffs[power] = coeffs.get(power, Fraction(0)) + Fraction(coef)
        else:
            coeffs[0] = coeffs.get(0, Fraction(0)) + Fraction(term)
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return PolyQ(out)


# ---------------------------------------------------------------------------
# Sturm sequences and real-root isolation


def sturm_sequence(f):
    seq = [f, f.derivative()]
    while seq[-1].degree > 0:
        seq.append(-(seq[-2] % seq[-1]))
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(seq, x):
    signs = [c for c in (p(x) for p in seq) if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_real_roots(f, lo, hi, seq=None):
    """Number of distinct real roots of f in (lo, hi); endpoints must not be roots."""
    if f(lo) == 0 or f(hi) == 0:
        raise ValueError("Sturm endpoints must not be roots")
    seq = seq or sturm_sequence(f)
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(f):
    """Cauchy bound: all real roots lie in (-B, B)."""
    lc = abs(f.coeffs[-1])
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def _nonroot_near(f, x, step):
    while f(x) == 0:
        x += step
    return x


def isolate_real_roots(f):
    """Disjoint rational intervals each holding exactly one real root of f.

    f must be squarefree.  Endpoints are never roots, so the intervals refine
    by plain bisection afterwards.
    """
    if f.degree <= 0:
        return []
    if not is_squarefree(f):
        raise ValueError("isolate_real_roots expects a squarefree polynomial")
    seq = sturm_sequence(f)
    B = root_bound(f)
    out = []
    stack = [(-B, B)]  # Cauchy bound is strict, endpoints are safe
    while stack:
        lo, hi = stack.pop()
        n = count_real_roots(f, lo, hi, seq)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if f(mid) == 0:
            # rational root at mid: carve a clean isolating interval around it
            delta = (hi - lo) / 4
            while True:
                l, u = mid - delta, mid + delta
                if f(l) != 0 and f(u) != 0 and count_real_roots(f, l, u, seq) == 1:
                    break
                delta /= 2
            out.append((l, u))
            stack.append((lo, l))
            stack.append((u, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    return sorted(out)


def refine_interval(f, lo, hi, limit):
    """Halve a sign-change isolating interval of f until hi - lo <= limit."""
    flo = f(lo)
    while hi - lo > limit:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:  # only possible for a rational root; nudge off it
            mid = _nonroot_near(f, mid, (hi - lo) / 64)
            fm = f(mid)
        if (flo > 0) != (fm > 0):
            hi = mid
        else:
            lo, flo = mid, fm
    return lo, hi


def sign_at_root(h, g, lo, hi):
    """Exact sign of h at the unique root of g in (lo, hi).

    g must be irreducible with a sign change on [lo, hi] and nonzero
    endpoints.  Degree-one factors evaluate directly; otherwise the interval
    is refined until a Sturm count shows h has constant sign across it.
    """
    if g.degree == 1:
        alpha = -g.coeffs[0] / g.coeffs[1]
        v = h(alpha)
        return 0 if v == 0 else (1 if v > 0 else -1)
    r = h % g
    if r.is_zero():
        return 0
    seq_r = sturm_sequence(r)
    glo = g(lo)
    while True:
        if r(lo) != 0 and r(hi) != 0 and count_real_roots(r, lo, hi, seq_r) == 0:
            v = r(lo)
            return 1 if v > 0 else -1
        mid = (lo + hi) / 2
        if r(mid) == 0 or g(mid) == 0:
            mid = _nonroot_near(r * g, mid, (hi - lo) / 64)
        if (glo > 0) != (g(mid) > 0):
            hi = mid
        else:
            lo, glo = mid, g(mid)


# ---------------------------------------------------------------------------
# factorisation over Q (delegated)


_SYM_X = sympy.symbols("x")


def _to_sympy(f):
    return sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)],
        _SYM_X,
        domain="QQ",
    )


def _from_sympy(p):
    return PolyQ([Fraction(c.p, c.q) for c in reversed(p.all_coeffs())])


def factor_rational(f):
    """Monic irreducible factors of f over Q with multiplicities, sorted."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    _, factors = _to_sympy(f).factor_list()
    out = [(_from_sympy(p).monic(), m) for p, m in factors if p.degree() > 0]
    return sorted(out, key=lambda fm: (fm[0].degree, fm[0].coeffs))


def is_irreducible(f):
    if f.degree <= 0:
        return False
    fac = factor_rational(f)
    return len(fac) == 1 and fac[0][1] == 1


# ---------------------------------------------------------------------------
# bivariate polynomials


class PolyXY:
    """Sparse bivariate polynomial over Q: {(i, j): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        d = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            c = Fraction(c)
            if c:
                d[(i, j)] = d.get((i, j), Fraction(0)) + c
        object.__setattr__(self, "terms", {k: v for k, v in d.items() if v})

    def __setattr__(self, *a):
        raise AttributeError("PolyXY is immutable")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, PolyXY) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _coerce_xy(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PolyXY(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyXY({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce_xy(other))

    def __mul__(self, other):
        other = _coerce_xy(other)
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + a * b
        return PolyXY(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = XY_ONE
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            mono = "".join(
                (f"X^{i}" if i > 1 else "X") if k == 0 and i else (f"Y^{j}" if j > 1 else "Y") if k == 1 and j else ""
                for k in (0, 1)
            )
            bits.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(bits)


XY_ZERO = PolyXY()
XY_ONE = PolyXY({(0, 0): 1})
XX = PolyXY({(1, 0): 1})
YY = PolyXY({(0, 1): 1})


def _coerce_xy(p):
    if isinstance(p, PolyXY):
        return p
    if isinstance(p, (int, Fraction)):
        return PolyXY({(0, 0): p})
    raise TypeError(f"cannot coerce {p!r} to PolyXY")


def compose_uni(f, arg):
    """f(arg) for univariate f and bivariate arg, by Horner's rule."""
    out = XY_ZERO
    for c in reversed(f.coeffs):
        out = out * arg + PolyXY({(0, 0): c})
    return out
