"""Monic polynomial algebra over F_q2.

Provides the tilde conjugation f~(t) = conj(f(0))^-1 t^deg(f) fbar(1/t) (whose
roots are the inverse conjugates of the roots of f), irreducibility testing,
complete deterministic factorisation, and the classification of monic
irreducibles into

  * SCIM        -- self-conjugate irreducible monic, f = f~;
  * PAIR_MEMBER -- irreducible with f(0) != 0 and f != f~ (one half of an
                   unordered pair {f, f~});
  * LINEAR_T    -- the polynomial t itself (excluded from conjugacy data,
                   which ranges over invertible classes);
  * REDUCIBLE   -- everything else.

On top of that sit the power-map classifications: a SCIM f of degree d is an
M~-power polynomial when f(x^M) has a SCIM factor of degree d, and a pair
member f is an M-power polynomial when f(x^M) has an irreducible factor of
degree d (equivalently, the companion matrix of f has an M-th root in
GL(d, q^2)).  `butler_pattern` predicts the full factor-degree multiset of
f(x^m) from the multiplicative order of the roots of f.

Factorisation is squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting; the equal-degree stage scans splitter candidates
in a fixed lexicographic order, so the whole pipeline is deterministic.
"""

from __future__ import annotations

import itertools
from enum import Enum
from functools import lru_cache
from math import gcd

from ._numth import divisors, euler_phi, factorint, mult_order, prime_factors
from .gf import FieldDesc, FieldElem

__all__ = [
    "Poly",
    "PolyClass",
    "tilde",
    "is_irreducible",
    "factor",
    "classify",
    "compose_power",
    "is_mtilde_power",
    "is_m_power_pair",
    "butler_pattern",
    "root_order",
    "monic_polys",
    "irreducible_polys",
]


class PolyClass(Enum):
    SCIM = "scim"
    PAIR_MEMBER = "pair_member"
    LINEAR_T = "linear_t"
    REDUCIBLE = "reducible"


class Poly:
    """Dense polynomial over a `FieldDesc` field, coefficients constant-first.

    Stored as a tuple of integer codes with no trailing zeros; the zero
    polynomial has an empty tuple and degree -1.  Polynomials are immutable,
    hashable, and totally ordered by (degree, coefficient codes), which fixes
    the ordering of factorisations.
    """

    __slots__ = ("desc", "codes")

    def __init__(self, desc: FieldDesc, coeffs=()):
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.desc is not desc:
                    raise ValueError("coefficient from a different field")
                codes.append(c.code)
            else:
                codes.append(int(c))
        while codes and codes[-1] == 0:
            codes.pop()
        for c in codes:
            if not 0 <= c < desc.order:
                raise ValueError(f"coefficient code {c} out of range")
        self.desc = desc
        self.codes = tuple(codes)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, desc):
        return cls(desc)

    @classmethod
    def one(cls, desc):
        return cls(desc, (1,))

    @classmethod
    def t(cls, desc):
        return cls(desc, (0, 1))

    @classmethod
    def linear(cls, root: FieldElem) -> "Poly":
        """t - root."""
        return cls(root.desc, (root.desc.neg_c(root.code), 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.codes) - 1

    def is_zero(self) -> bool:
        return not self.codes

    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == 1

    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.desc, c) for c in self.codes)

    def constant(self) -> FieldElem:
        return FieldElem(self.desc, self.codes[0] if self.codes else 0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b, add = self.codes, other.codes, self.desc.add_c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.desc, out)

    def __neg__(self) -> "Poly":
        neg = self.desc.neg_c
        return Poly(self.desc, [neg(c) for c in self.codes])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.codes, other.codes
        if not a or not b:
            return Poly(self.desc)
        add, mul = self.desc.add_c, self.desc.mul_c
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(self.desc, out)

    def scale(self, code: int) -> "Poly":
        mul = self.desc.mul_c
        return Poly(self.desc, [mul(c, code) for c in self.codes])

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        desc = self.desc
        rem = list(self.codes)
        db = other.degree
        inv_lb = desc.inv_c(other.codes[-1])
        quot = [0] * max(len(rem) - db, 0)
        sub, mul = desc.sub_c, desc.mul_c
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = mul(c, inv_lb)
                quot[i - db] = f
                for j, bj in enumerate(other.codes):
                    rem[i - db + j] = sub(rem[i - db + j], mul(f, bj))
        return Poly(desc, quot), Poly(desc, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.desc.inv_c(self.codes[-1]))

    def derivative(self) -> "Poly":
        desc = self.desc
        out = []
        for i in range(1, len(self.codes)):
            out.append(desc.mul_c(self.codes[i], i % desc.p))
        return Poly(desc, out)

    def __call__(self, a):
        code = a.code if isinstance(a, FieldElem) else int(a)
        desc = self.desc
        acc = 0
        for c in reversed(self.codes):
            acc = desc.add_c(desc.mul_c(acc, code), c)
        return FieldElem(desc, acc)

    # -- comparisons -------------------------------------------------------

    def sort_key(self):
        return (self.degree, self.codes)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.desc is other.desc and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((id(self.desc), self.codes))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.codes:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.codes[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coeff = "" if c == 1 else str(c)
                terms.append(f"{coeff}t" if i == 1 else f"{coeff}t^{i}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly(GF({self.desc.order}): {self})"


# ----------------------------------------------------------------------
# gcd and modular exponentiation
# ----------------------------------------------------------------------

def gcd_poly(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(base: Poly, e: int, modulus: Poly) -> Poly:
    result = Poly.one(base.desc)
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------

def monic_polys(desc: FieldDesc, degree: int):
    """All monic polynomials of the given degree, in lexicographic order
    on the constant-first coefficient vector."""
    for tail in itertools.product(range(desc.order), repeat=degree):
        yield Poly(desc, tail + (1,))


@lru_cache(maxsize=None)
def irreducible_polys(desc: FieldDesc, degree: int) -> tuple[Poly, ...]:
    """All monic irreducibles of the given degree (includes t in degree 1).

    Sieved by trial division against the cached irreducibles of degree at
    most degree/2; deterministic order.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    if degree == 1:
        return tuple(monic_polys(desc, 1))
    smalls = [g for e in range(1, degree // 2 + 1) for g in irreducible_polys(desc, e)]
    out = []
    for f in monic_polys(desc, degree):
        if all((f % g).codes for g in smalls):
            out.append(f)
    return tuple(out)


# ----------------------------------------------------------------------
# tilde conjugation and classification
# ----------------------------------------------------------------------

def tilde(f: Poly) -> Poly:
    """f~(t) = conj(f(0))^-1 t^d fbar(1/t): the monic polynomial whose roots
    are the inverse conjugates a^(-q) of the roots of f.  An involution."""
    if not f.is_monic():
        raise ValueError("tilde conjugation requires a monic polynomial")
    if f.codes[0] == 0:
        raise ValueError("tilde conjugation requires a nonzero constant term")
    desc = f.desc
    inv0 = desc.inv_c(desc.conj_c(f.codes[0]))
    d = f.degree
    return Poly(desc, [desc.mul_c(desc.conj_c(f.codes[d - j]), inv0) for j in range(d + 1)])


def is_irreducible(f: Poly) -> bool:
    """Rabin test over the coefficient field."""
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility is about polynomials of degree >= 1")
    if d == 1:
        return True
    f = f.monic()
    Q = f.desc.order
    x = Poly.t(f.desc)
    if pow_mod(x, Q**d, f) != x % f:
        return False
    for r in prime_factors(d):
        if gcd_poly(pow_mod(x, Q ** (d // r), f) - x, f).degree > 0:
            return False
    return True


def classify(f: Poly) -> PolyClass:
    if f.degree < 1:
        raise ValueError("classification is about polynomials of degree >= 1")
    if not f.is_monic():
        raise ValueError("classification requires a monic polynomial")
    if f == Poly.t(f.desc):
        return PolyClass.LINEAR_T
    if not is_irreducible(f):
        return PolyClass.REDUCIBLE
    return PolyClass.SCIM if tilde(f) == f else PolyClass.PAIR_MEMBER


def compose_power(f: Poly, M: int) -> Poly:
    """f(x^M)."""
    if M < 1:
        raise ValueError(f"M = {M} must be a positive integer")
    out = [0] * (M * f.degree + 1) if not f.is_zero() else []
    for i, c in enumerate(f.codes):
        out[i * M] = c
    return Poly(f.desc, out)


def is_mtilde_power(f: Poly, M: int) -> bool:
    """SCIM f of degree d: does f(x^M) have a SCIM factor of degree d?"""
    if classify(f) is not PolyClass.SCIM:
        raise ValueError("M~-power classification applies to SCIM polynomials")
    d = f.degree
    return any(g.degree == d and tilde(g) == g for g, _ in factor(compose_power(f, M)))


def is_m_power_pair(f: Poly, M: int) -> bool:
    """Pair member f of degree d: does f(x^M) have an irreducible factor of
    degree d?  (Equivalently C_f has an M-th root in GL(d, q^2).)"""
    if classify(f) is not PolyClass.PAIR_MEMBER:
        raise ValueError("M-power classification applies to pair members")
    d = f.degree
    return any(g.degree == d for g, _ in factor(compose_power(f, M)))


def root_order(f: Poly) -> int:
    """Multiplicative order of the roots of an irreducible f != t
    (the order of t in the field F_Q[t]/(f))."""
    if not is_irreducible(f) or f.codes[0] == 0:
        raise ValueError("root order needs an irreducible polynomial with f(0) != 0")
    f = f.monic()
    n = f.desc.order**f.degree - 1
    one = Poly.one(f.desc)
    x = Poly.t(f.desc)
    t = n
    for r in prime_factors(n):
        while t % r == 0 and pow_mod(x, t // r, f) == one:
            t //= r
    return t


def butler_pattern(d: int, t: int, m: int, Q: int) -> tuple[tuple[int, int], ...]:
    """Predicted factor degrees of f(x^m) for an irreducible f of degree d
    over F_Q whose roots have multiplicative order t.

    Split m = m1*m2 with gcd(m1, t) = 1 and every prime of m2 dividing t.
    For each divisor e of m1 there are d*m2*phi(e)/ord_Q(e*m2*t) irreducible
    factors, each of degree ord_Q(e*m2*t) (ord_Q(s) = multiplicative order of
    Q modulo s).  Returned as ((degree, count), ...) with one entry per
    divisor, sorted.
    """
    if d < 1 or t < 1 or m < 1:
        raise ValueError("d, t, m must be positive")
    if gcd(m, Q) != 1:
        raise ValueError(f"butler_pattern requires gcd(m, Q) = 1, got m={m}, Q={Q}")
    m1, m2 = 1, 1
    for p, e in factorint(m).items():
        if t % p == 0:
            m2 *= p**e
        else:
            m1 *= p**e
    out = []
    for e in divisors(m1):
        deg = mult_order(Q, e * m2 * t)
        count, rem = divmod(d * m2 * euler_phi(e), deg)
        assert rem == 0, "factor count must be integral"
        out.append((deg, count))
    return tuple(sorted(out))


# ----------------------------------------------------------------------
# factorisation: squarefree -> distinct degree -> equal degree
# ----------------------------------------------------------------------

def _pth_root(f: Poly) -> Poly:
    """g with g^p = f, for f whose exponents are all divisible by p."""
    desc = f.desc
    e = desc.order // desc.p
    assert all(c == 0 for i, c in enumerate(f.codes) if i % desc.p != 0), \
        "polynomial is not a p-th power"
    codes = f.codes[:: desc.p]
    return Poly(desc, [desc.pow_c(c, e) for c in codes])


def _squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """f = prod g_i^e_i with the g_i squarefree and pairwise coprime."""
    out = []
    base = 1
    p = f.desc.p
    while f.degree > 0:
        df = f.derivative()
        if df.is_zero():
            f = _pth_root(f)
            base *= p
            continue
        c = gcd_poly(f, df)
        w = f // c
        j = 1
        while w.degree > 0:
            y = gcd_poly(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z, base * j))
            w = y
            c = c // y
            j += 1
        if c.degree > 0:
            f = _pth_root(c)
            base *= p
        else:
            break
    return out


def _distinct_degree(g: Poly) -> list[tuple[Poly, int]]:
    """Split squarefree monic g into (product of degree-i irreducibles, i)."""
    desc = g.desc
    Q = desc.order
    x = Poly.t(desc)
    parts = []
    h = x % g
    i = 1
    while g.degree >= 2 * i:
        h = pow_mod(h, Q, g)
        d = gcd_poly(g, h - x)
        if d.degree > 0:
            parts.append((d, i))
            g = g // d
            h = h % g
        i += 1
    if g.degree > 0:
        parts.append((g, g.degree))
    return parts


def _splitter_candidates(desc: FieldDesc, max_degree: int):
    for deg in range(1, max_degree):
        for tail in itertools.product(range(desc.order), repeat=deg):
            for lead in range(1, desc.order):
                yield Poly(desc, tail + (lead,))


def _edf_split(h: Poly, e: int) -> Poly:
    """A proper monic factor of h, a product of >= 2 irreducibles of degree e.

    Candidates are scanned in a fixed order, so the split is deterministic;
    by CRT surjectivity some candidate always separates two of the factors.
    """
    desc = h.desc
    Q = desc.order
    one = Poly.one(desc)
    if desc.p == 2:
        bits = e * desc.degree  # Q^e = 2^(e * degree)
        for r in _splitter_candidates(desc, h.degree):
            cur = r % h
            acc = cur
            for _ in range(bits - 1):
                cur = (cur * cur) % h
                acc = acc + cur
            g = gcd_poly(h, acc)
            if 0 < g.degree < h.degree:
                return g
    else:
        exp = (Q**e - 1) // 2
        for r in _splitter_candidates(desc, h.degree):
            s = pow_mod(r, exp, h) - one
            g = gcd_poly(h, s)
            if 0 < g.degree < h.degree:
                return g
    raise AssertionError("equal-degree splitter search exhausted")


def _equal_degree(h: Poly, e: int) -> list[Poly]:
    stack, out = [h], []
    while stack:
        g = stack.pop()
        if g.degree == e:
            out.append(g)
            continue
        d = _edf_split(g, e)
        stack.append(d)
        stack.append(g // d)
    return out


@lru_cache(maxsize=None)
def factor(f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Complete factorisation of monic f (degree >= 1) into monic
    irreducibles, as ((factor, multiplicity), ...) sorted by
    (degree, coefficient codes)."""
    if f.degree < 1:
        raise ValueError("factorisation is about polynomials of degree >= 1")
    if not f.is_monic():
        raise ValueError("factorisation requires a monic polynomial")
    found: dict[Poly, int] = {}
    for g, e in _squarefree_decomposition(f):
        for part, d in _distinct_degree(g):
            for h in _equal_degree(part, d):
                found[h] = found.get(h, 0) + e
    out = tuple(sorted(found.items(), key=lambda pair: pair[0].sort_key()))
    check = Poly.one(f.desc)
    for g, e in out:
        for _ in range(e):
            check = check * g
    assert check == f, "factorisation does not multiply back"
    return out
