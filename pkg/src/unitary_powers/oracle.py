"""Ground-truth brute force for small unitary groups.

U(n, q) is realised concretely as the invertible n x n matrices A over F_q2
with A L conj(A)^t = L, where L is the anti-diagonal Hermitian form.  Groups
are built either by scanning the full candidate space or, past the scan
bound, by multiplicative closure from structured seed elements (diagonal,
unipotent upper-triangular, and monomial unitary matrices, which generate).

Every invertible matrix gets a conjugacy datum: the map from the irreducible
factors of its characteristic polynomial to partitions, read off the kernel
dimensions of powers of phi(A), with tilde-conjugate pairs stored once under
the smaller member.  U-conjugacy classes are computed by the conjugation
action inside the group and then cross-checked against the datum fibers
(unitary conjugacy agrees with GL-conjugacy, so the two partitions of the
group must coincide; a mismatch raises).

`power_image_counts` pushes the whole group through g -> g^M and tabulates
elements and classes of the image per matrix family.  `check_block_power`
verifies that powering a cyclic block U(f, m) lands on the cyclic block of
the powered companion polynomial, whenever that companion exists.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from . import polyalg
from ._numth import prime_power
from .gf import FieldDesc, FieldElem, make_field
from .polyalg import Poly
from .series import group_order_U

__all__ = [
    "DEFAULT_SCAN_BOUND",
    "SCAN_BOUND_ENV",
    "MatrixRep",
    "HermitianForm",
    "hermitian_form",
    "is_unitary",
    "GroupTable",
    "ConjClass",
    "ConjugacyDatum",
    "MatrixClassKind",
    "build_group",
    "group_table",
    "classify_matrix",
    "datum_of",
    "gl_class_data",
    "char_poly",
    "power_image_counts",
    "PowerImageCounts",
    "companion",
    "block_matrix",
    "check_block_power",
]

DEFAULT_SCAN_BOUND = 1 << 22
SCAN_BOUND_ENV = "UPC_SCAN_BOUND"


def _scan_bound(explicit=None) -> int:
    if explicit is not None:
        return explicit
    return int(os.environ.get(SCAN_BOUND_ENV, DEFAULT_SCAN_BOUND))


# ----------------------------------------------------------------------
# matrices
# ----------------------------------------------------------------------

class MatrixRep:
    """Immutable n x n matrix over a `FieldDesc` field, stored as a flat
    row-major tuple of coefficient codes (which also serves as its hash key).
    """

    __slots__ = ("desc", "n", "codes")

    def __init__(self, desc: FieldDesc, n: int, codes):
        codes = tuple(codes)
        if len(codes) != n * n:
            raise ValueError("entry vector does not match the dimension")
        self.desc = desc
        self.n = n
        self.codes = codes

    @classmethod
    def identity(cls, desc: FieldDesc, n: int) -> "MatrixRep":
        return cls(desc, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, desc: FieldDesc, rows) -> "MatrixRep":
        rows = [list(r) for r in rows]
        n = len(rows)
        flat = []
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for c in r:
                flat.append(c.code if isinstance(c, FieldElem) else int(c))
        return cls(desc, n, flat)

    def entry(self, i: int, j: int) -> FieldElem:
        return FieldElem(self.desc, self.codes[i * self.n + j])

    @property
    def entries(self) -> tuple[tuple[FieldElem, ...], ...]:
        n = self.n
        return tuple(
            tuple(FieldElem(self.desc, self.codes[i * n + j]) for j in range(n))
            for i in range(n)
        )

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.codes[i * n : (i + 1) * n]) for i in range(n)]

    def __mul__(self, other: "MatrixRep") -> "MatrixRep":
        if self.desc is not other.desc or self.n != other.n:
            raise ValueError("matrix shapes or fields do not match")
        n = self.n
        add, mul = self.desc.add_c, self.desc.mul_c
        a, b = self.codes, other.codes
        out = []
        for i in range(n):
            row = a[i * n : (i + 1) * n]
            for j in range(n):
                s = 0
                for k in range(n):
                    aik = row[k]
                    if aik:
                        s = add(s, mul(aik, b[k * n + j]))
                out.append(s)
        return MatrixRep(self.desc, n, out)

    def __pow__(self, e: int) -> "MatrixRep":
        if e < 0:
            raise ValueError("negative matrix powers are not needed here")
        result = MatrixRep.identity(self.desc, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def conj_transpose(self) -> "MatrixRep":
        n, cj = self.n, self.desc.conj_c
        return MatrixRep(
            self.desc, n, tuple(cj(self.codes[j * n + i]) for i in range(n) for j in range(n))
        )

    def __eq__(self, other):
        if isinstance(other, MatrixRep):
            return self.desc is other.desc and self.n == other.n and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((id(self.desc), self.codes))

    def __repr__(self):
        return f"MatrixRep({self.n}x{self.n} over GF({self.desc.order}), {self.codes})"


@dataclass(frozen=True)
class HermitianForm:
    """The anti-diagonal form L_n: entries(i, j) = 1 iff i + j = n - 1."""

    n: int
    entries: MatrixRep


def hermitian_form(n: int, desc: FieldDesc) -> HermitianForm:
    mat = MatrixRep(
        desc, n, tuple(1 if i + j == n - 1 else 0 for i in range(n) for j in range(n))
    )
    return HermitianForm(n, mat)


def is_unitary(A: MatrixRep) -> bool:
    """A L conj(A)^t = L for the anti-diagonal form of A's dimension."""
    n = A.n
    desc = A.desc
    add, mul, cj = desc.add_c, desc.mul_c, desc.conj_c
    a = A.codes
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                aik = a[i * n + (n - 1 - k)]
                if aik:
                    s = add(s, mul(aik, cj(a[j * n + k])))
            if s != (1 if i + j == n - 1 else 0):
                return False
    return True


def _unitary_inverse(A: MatrixRep) -> MatrixRep:
    # from A L conj(A)^t = L and L^2 = I: A^(-1) = L conj(A)^t L
    lam = hermitian_form(A.n, A.desc).entries
    return lam * A.conj_transpose() * lam


# ----------------------------------------------------------------------
# linear algebra over the coefficient field
# ----------------------------------------------------------------------

def _rank(desc: FieldDesc, rows: list[list[int]]) -> int:
    if not rows:
        return 0
    sub, mul, inv = desc.sub_c, desc.mul_c, desc.inv_c
    n_rows, n_cols = len(rows), len(rows[0])
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        piv_inv = inv(rows[r][col])
        rows[r] = [mul(piv_inv, c) for c in rows[r]]
        for i in range(r + 1, n_rows):
            f = rows[i][col]
            if f:
                rows[i] = [sub(c, mul(f, d)) for c, d in zip(rows[i], rows[r])]
        r += 1
        if r == n_rows:
            break
    return r


def char_poly(A: MatrixRep) -> Poly:
    """det(tI - A), computed by cofactor expansion on the polynomial matrix."""
    desc = A.desc
    n = A.n
    entries = [
        [
            Poly(desc, (desc.neg_c(A.codes[i * n + j]), 1) if i == j
                 else (desc.neg_c(A.codes[i * n + j]),))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(desc, entries)


def _poly_det(desc: FieldDesc, m: list[list[Poly]]) -> Poly:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Poly.zero(desc)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
        term = m[0][j] * _poly_det(desc, minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def _poly_at_matrix(f: Poly, A: MatrixRep) -> MatrixRep:
    desc, n = A.desc, A.n
    result = MatrixRep(desc, n, (0,) * (n * n))
    for c in reversed(f.codes):
        result = result * A
        if c:
            codes = list(result.codes)
            for i in range(n):
                codes[i * n + i] = desc.add_c(codes[i * n + i], c)
            result = MatrixRep(desc, n, codes)
    return result


# ----------------------------------------------------------------------
# conjugacy data
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyDatum:
    """Class label: polynomial -> partition, pairs stored once.

    `assignments` maps each SCIM factor, or the smaller member of each
    tilde-conjugate pair, to a non-empty partition (a non-increasing tuple).
    The total sum of |partition| * degree, counting pairs twice, is n, and t
    never appears (the data label invertible classes only).
    """

    n: int
    assignments: tuple[tuple[Poly, tuple[int, ...]], ...]

    def __post_init__(self):
        total = 0
        for phi, lam in self.assignments:
            if not lam or list(lam) != sorted(lam, reverse=True):
                raise ValueError(f"invalid partition {lam}")
            if phi.codes[:1] == (0,):
                raise ValueError("the polynomial t cannot label an invertible class")
            weight = 1 if polyalg.tilde(phi) == phi else 2
            total += weight * sum(lam) * phi.degree
        if total != self.n:
            raise ValueError(f"partition sizes sum to {total}, expected {self.n}")

    def items(self) -> tuple[tuple[Poly, tuple[int, ...]], ...]:
        return self.assignments

    def as_dict(self) -> dict[Poly, tuple[int, ...]]:
        return dict(self.assignments)

    def __str__(self):
        return ";".join(f"{phi}:{'+'.join(map(str, lam))}" for phi, lam in self.assignments)


@dataclass(frozen=True)
class MatrixClassKind:
    """Family flags; separable implies cyclic and semisimple, and a matrix
    that is both cyclic and semisimple is separable."""

    separable: bool
    cyclic: bool
    semisimple: bool

    def __post_init__(self):
        if self.separable and not (self.cyclic and self.semisimple):
            raise ValueError("separable must imply cyclic and semisimple")
        if self.cyclic and self.semisimple and not self.separable:
            raise ValueError("cyclic + semisimple must imply separable")


def kind_of_datum(datum: ConjugacyDatum) -> MatrixClassKind:
    lams = [lam for _, lam in datum.items()]
    cyclic = all(len(lam) == 1 for lam in lams)
    semisimple = all(set(lam) == {1} for lam in lams)
    return MatrixClassKind(cyclic and semisimple, cyclic, semisimple)


def _conjugate_partition(cs: list[int]) -> tuple[int, ...]:
    if not cs:
        return ()
    assert all(cs[i] >= cs[i + 1] for i in range(len(cs) - 1)), "kernel steps must decrease"
    return tuple(sum(1 for c in cs if c >= i) for i in range(1, cs[0] + 1))


def gl_class_data(A: MatrixRep) -> tuple[tuple[Poly, tuple[int, ...]], ...]:
    """Rational canonical data of an invertible matrix over F_q2: every
    irreducible factor of the characteristic polynomial with its partition,
    sorted.  A complete GL(n, q^2)-conjugacy invariant.

    The partition of a factor phi with multiplicity m comes from the kernel
    dimensions of phi(A)^j: the increments divided by deg(phi) form the
    conjugate partition.
    """
    desc, n = A.desc, A.n
    ch = char_poly(A)
    if ch.codes[0] == 0:
        raise ValueError("conjugacy data are defined for invertible matrices only")
    out = []
    for phi, mult in polyalg.factor(ch):
        d = phi.degree
        target = mult * d
        B = _poly_at_matrix(phi, A)
        Bj = B
        cs: list[int] = []
        prev = 0
        while prev < target:
            k = n - _rank(desc, Bj.rows())
            step, rem = divmod(k - prev, d)
            assert rem == 0, "kernel growth must be a multiple of the factor degree"
            cs.append(step)
            prev = k
            if prev < target:
                Bj = Bj * B
        lam = _conjugate_partition(cs)
        assert sum(lam) == mult
        out.append((phi, lam))
    return tuple(out)


def datum_of(A: MatrixRep) -> ConjugacyDatum:
    """Conjugacy datum of a unitary-type invertible matrix over F_q2: the
    GL class data with each tilde-conjugate pair {phi, phi~} merged into one
    entry under the smaller member.

    Matrices whose factors are not tilde-symmetric (possible for general
    GL matrices, never for members of a unitary group) are rejected.
    """
    data = dict(gl_class_data(A))
    assignments: dict[Poly, tuple[int, ...]] = {}
    for phi, lam in data.items():
        phit = polyalg.tilde(phi)
        if phit != phi and data.get(phit) != lam:
            raise ValueError(
                "factor partitions are not tilde-symmetric; the matrix has no "
                "unitary conjugacy datum"
            )
        key = phi if phit == phi else min(phi, phit)
        assignments[key] = lam
    ordered = tuple(sorted(assignments.items(), key=lambda kv: kv[0].sort_key()))
    return ConjugacyDatum(A.n, ordered)


def classify_matrix(A: MatrixRep) -> MatrixClassKind:
    """Separable / cyclic / semisimple flags of an invertible matrix.

    Separable means squarefree characteristic polynomial (all partitions
    [1]); semisimple means squarefree minimal polynomial (all-ones
    partitions); cyclic means minimal = characteristic (single-part
    partitions)."""
    lams = [lam for _, lam in gl_class_data(A)]
    cyclic = all(len(lam) == 1 for lam in lams)
    semisimple = all(set(lam) == {1} for lam in lams)
    return MatrixClassKind(cyclic and semisimple, cyclic, semisimple)


# ----------------------------------------------------------------------
# group construction
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ConjClass:
    rep: MatrixRep
    size: int
    member_codes: frozenset
    datum: ConjugacyDatum
    kind: MatrixClassKind


class GroupTable:
    """Explicit element list of U(n, q), with lazily computed classes."""

    def __init__(self, n: int, q: int, desc: FieldDesc, elements):
        self.n = n
        self.q = q
        self.desc = desc
        self.elements = sorted(elements, key=lambda A: A.codes)
        self.index = {A.codes: i for i, A in enumerate(self.elements)}
        self.order = len(self.elements)
        self._classes = None

    def __len__(self):
        return self.order

    def __contains__(self, A: MatrixRep):
        return A.codes in self.index

    @property
    def classes(self) -> tuple[ConjClass, ...]:
        if self._classes is None:
            self._classes = self._compute_classes()
        return self._classes

    def _compute_classes(self) -> tuple[ConjClass, ...]:
        fibers: dict[ConjugacyDatum, set] = {}
        data: dict[tuple, ConjugacyDatum] = {}
        for A in self.elements:
            dm = datum_of(A)
            data[A.codes] = dm
            fibers.setdefault(dm, set()).add(A.codes)
        inverses = {A.codes: _unitary_inverse(A) for A in self.elements}
        seen: set = set()
        out = []
        for A in self.elements:
            if A.codes in seen:
                continue
            orbit = {(B * A * inverses[B.codes]).codes for B in self.elements}
            dm = data[A.codes]
            if orbit != fibers[dm]:
                raise AssertionError(
                    "mismatch between unitary conjugation orbits and class data"
                )
            seen |= orbit
            out.append(ConjClass(A, len(orbit), frozenset(orbit), dm, kind_of_datum(dm)))
        assert sum(c.size for c in out) == self.order
        return tuple(out)


def _scan_elements(desc: FieldDesc, n: int):
    Q = desc.order
    add, mul, cj = desc.add_c, desc.mul_c, desc.conj_c
    conj_tab = [cj(c) for c in range(Q)]
    out = []
    target = [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)]
    for codes in itertools.product(range(Q), repeat=n * n):
        ok = True
        for i in range(n):
            base_i = i * n
            for j in range(n):
                base_j = j * n
                s = 0
                for k in range(n):
                    aik = codes[base_i + n - 1 - k]
                    if aik:
                        s = add(s, mul(aik, conj_tab[codes[base_j + k]]))
                if s != target[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(MatrixRep(desc, n, codes))
    return out


def _seed_elements(desc: FieldDesc, n: int):
    """Structured unitary matrices that generate U(n, q): the diagonal torus,
    the unipotent upper-triangular radical, and the unitary monomials."""
    Q = desc.order
    seeds = []
    for diag in itertools.product(range(1, Q), repeat=n):
        A = MatrixRep(desc, n, tuple(diag[i] if i == j else 0 for i in range(n) for j in range(n)))
        if is_unitary(A):
            seeds.append(A)
    upper_slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for vals in itertools.product(range(Q), repeat=len(upper_slots)):
        codes = [0] * (n * n)
        for i in range(n):
            codes[i * n + i] = 1
        for (i, j), v in zip(upper_slots, vals):
            codes[i * n + j] = v
        A = MatrixRep(desc, n, tuple(codes))
        if is_unitary(A):
            seeds.append(A)
    for perm in itertools.permutations(range(n)):
        for vals in itertools.product(range(1, Q), repeat=n):
            codes = [0] * (n * n)
            for i in range(n):
                codes[i * n + perm[i]] = vals[i]
            A = MatrixRep(desc, n, tuple(codes))
            if is_unitary(A):
                seeds.append(A)
    unique = {A.codes: A for A in seeds}
    return [unique[c] for c in sorted(unique)]


def _closure_elements(desc: FieldDesc, n: int, expected: int):
    seeds = _seed_elements(desc, n)
    group = {A.codes: A for A in seeds}
    group.setdefault(MatrixRep.identity(desc, n).codes, MatrixRep.identity(desc, n))
    frontier = list(group.values())
    while frontier and len(group) < expected:
        fresh = []
        for A in frontier:
            for S in seeds:
                B = A * S
                if B.codes not in group:
                    group[B.codes] = B
                    fresh.append(B)
        frontier = fresh
    return list(group.values())


def build_group(n: int, q: int, scan_bound: int | None = None) -> GroupTable:
    """Construct U(n, q) explicitly.

    Scans all q^(2 n^2) candidate matrices when that fits under the scan
    bound (the UPC_SCAN_BOUND environment variable overrides the default);
    otherwise closes the structured seed elements under multiplication.
    Either way the element count must equal the predicted group order.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    p, l = prime_power(q)
    desc = make_field(p, l, 1)
    expected = group_order_U(n, q)
    bound = _scan_bound(scan_bound)
    if desc.order ** (n * n) <= bound:
        elements = _scan_elements(desc, n)
    else:
        elements = _closure_elements(desc, n, expected)
    if len(elements) != expected:
        raise RuntimeError(
            f"constructed {len(elements)} elements of U({n},{q}), expected {expected}"
        )
    return GroupTable(n, q, desc, elements)


@lru_cache(maxsize=None)
def group_table(n: int, q: int) -> GroupTable:
    """Cached `build_group` with default bounds (groups are reused heavily)."""
    return build_group(n, q)


# ----------------------------------------------------------------------
# power images
# ----------------------------------------------------------------------

_FAMILIES = ("all", "separable", "cyclic", "semisimple")


@dataclass(frozen=True)
class PowerImageCounts:
    """Element and class counts of {g^M : g in G}, per matrix family."""

    n: int
    q: int
    M: int
    elements: dict = field(compare=False)
    classes: dict = field(compare=False)


def power_image_counts(G: GroupTable, M: int) -> PowerImageCounts:
    """Tabulate the image of g -> g^M by family (M = 1 tabulates all of G).

    The image is a union of conjugacy classes, so classes are counted through
    their representatives; this is asserted member by member.
    """
    if M < 1:
        raise ValueError(f"M = {M} must be a positive integer")
    image = {(A**M).codes for A in G.elements}
    elements = dict.fromkeys(_FAMILIES, 0)
    classes = dict.fromkeys(_FAMILIES, 0)
    for c in G.classes:
        inside = c.rep.codes in image
        assert inside == c.member_codes.issubset(image), "image must be a class union"
        if not inside:
            continue
        tags = ["all"]
        if c.kind.separable:
            tags.append("separable")
        if c.kind.cyclic:
            tags.append("cyclic")
        if c.kind.semisimple:
            tags.append("semisimple")
        for tag in tags:
            elements[tag] += c.size
            classes[tag] += 1
    return PowerImageCounts(G.n, G.q, M, elements, classes)


# ----------------------------------------------------------------------
# companion blocks
# ----------------------------------------------------------------------

def companion(f: Poly) -> MatrixRep:
    """Standard companion matrix of a monic f: ones on the subdiagonal,
    -coefficients in the last column."""
    if not f.is_monic() or f.degree < 1:
        raise ValueError("companion matrices are about monic polynomials of degree >= 1")
    desc = f.desc
    d = f.degree
    codes = [0] * (d * d)
    for i in range(1, d):
        codes[i * d + (i - 1)] = 1
    for i in range(d):
        codes[i * d + (d - 1)] = desc.neg_c(f.codes[i])
    return MatrixRep(desc, d, codes)


def block_matrix(f: Poly, m: int) -> MatrixRep:
    """U(f, m): m companion blocks of f on the diagonal, identity blocks on
    the superdiagonal.  Its characteristic polynomial is f^m."""
    if m < 1:
        raise ValueError("multiplicity must be positive")
    C = companion(f)
    d = f.degree
    n = d * m
    codes = [0] * (n * n)
    for b in range(m):
        off = b * d
        for i in range(d):
            for j in range(d):
                codes[(off + i) * n + (off + j)] = C.codes[i * d + j]
        if b + 1 < m:
            for i in range(d):
                codes[(off + i) * n + (off + d + i)] = 1
    return MatrixRep(f.desc, n, codes)


def check_block_power(f: Poly, m: int, M: int) -> bool:
    """Does U(f, m)^M land in the GL-class of U(g, m), for g the
    characteristic polynomial of C_f^M?

    Needs gcd(M, q) = 1 and irreducible f with f(0) != 0.  When C_f^M is not
    cyclic (the powered eigenvalues drop degree), no companion matrix is
    similar to it, there is no such g to compare against, and the statement
    holds vacuously."""
    desc = f.desc
    if gcd(M, desc.q) != 1:
        raise ValueError(f"block power check requires gcd(M, q) = 1, got M={M}, q={desc.q}")
    if not polyalg.is_irreducible(f) or f.codes[0] == 0:
        raise ValueError("block power check requires an irreducible f with f(0) != 0")
    B = companion(f) ** M
    if not classify_matrix(B).cyclic:
        return True
    g = char_poly(B)
    return gl_class_data(block_matrix(f, m) ** M) == gl_class_data(block_matrix(g, m))
