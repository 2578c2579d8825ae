"""The six generating functions for M-th powers in the unitary groups U(n, q).

For each matrix family (separable / cyclic / semisimple) there is a CLASSES
series, whose z^n coefficient is the number of U(n, q)-conjugacy classes of
that family lying in the image of the M-th power map, and an ELEMENTS series,
whose z^n coefficient is the corresponding number of group elements divided
by |U(n, q)|.  The element coefficients are sums of reciprocal centraliser
orders over the qualifying classes, which is why they come out as proportions.

With N~_M and R~_M the counts from `counts` (N~ = N~_1, R~ = R~_1):

  separable classes    prod over odd d of (1 + z^d)^N~_M
                       * prod over d >= 1 of (1 + z^(2d))^R~_M
  separable elements   same shape with z^d/(q^d + 1) and z^(2d)/(q^(2d) - 1)
  cyclic classes       prod (1 - z^d)^-N~_M * prod (1 - z^(2d))^-R~_M
  cyclic elements      factors 1 + sum over m of z^(dm)/(q^(d(m-1)) (q^d+1))
                       and the pair analogue with 2d and q^(2d) - 1
  semisimple classes   the cyclic-classes product times
                       prod (1 - z^(dM))^-S~'_M * prod (1 - z^(2dM))^-S'_M
  semisimple elements  factors 1 + sum z^(dm)/|U(m, q^(2d))| etc., with the
                       non-power families stepping by M and using
                       |U(mM, q^(2d))| and |GL(mM, q^(2d))|

Hypotheses: the cyclic series need gcd(M, q) = 1 (an M-th power of a
unipotent block collapses when the characteristic divides M), and the
semisimple series need M prime with gcd(M, q) = 1 (the degree dichotomy for
f(x^M) holds factor by factor only for prime M).  M = 1 is accepted
everywhere and yields the unrestricted all-matrices series, used as a sanity
baseline.

`centralizer_order` gives |C_U(A)| for classes of the three supported shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING

from . import counts, polyalg, series
from ._numth import is_prime
from .series import Series, group_order_GL, group_order_U

if TYPE_CHECKING:
    from .oracle import ConjugacyDatum

__all__ = [
    "Family",
    "Kind",
    "SeriesRequest",
    "series_for",
    "sep_class_series",
    "sep_elem_series",
    "cyc_class_series",
    "cyc_elem_series",
    "ss_class_series",
    "ss_elem_series",
    "centralizer_order",
]


class Family(str, Enum):
    SEPARABLE = "sep"
    CYCLIC = "cyc"
    SEMISIMPLE = "ss"


class Kind(str, Enum):
    CLASSES = "classes"
    ELEMENTS = "elements"


def _check_common(q: int, M: int, T: int):
    counts._validate(q, 1, M)
    if T < 0:
        raise ValueError("truncation must be non-negative")


def _check_cyclic(q: int, M: int):
    if gcd(M, q) != 1:
        raise ValueError(f"cyclic series require gcd(M, q) = 1, got M={M}, q={q}")


def _check_semisimple(q: int, M: int):
    if M == 1:
        return
    if not is_prime(M) or gcd(M, q) != 1:
        raise ValueError(
            f"semisimple series require prime M with gcd(M, q) = 1, got M={M}, q={q}"
        )


@dataclass(frozen=True)
class SeriesRequest:
    q: int
    M: int
    T: int
    family: Family
    kind: Kind

    def __post_init__(self):
        _check_common(self.q, self.M, self.T)
        if self.family is Family.CYCLIC:
            _check_cyclic(self.q, self.M)
        if self.family is Family.SEMISIMPLE:
            _check_semisimple(self.q, self.M)


def series_for(request: SeriesRequest) -> Series:
    table = {
        (Family.SEPARABLE, Kind.CLASSES): sep_class_series,
        (Family.SEPARABLE, Kind.ELEMENTS): sep_elem_series,
        (Family.CYCLIC, Kind.CLASSES): cyc_class_series,
        (Family.CYCLIC, Kind.ELEMENTS): cyc_elem_series,
        (Family.SEMISIMPLE, Kind.CLASSES): ss_class_series,
        (Family.SEMISIMPLE, Kind.ELEMENTS): ss_elem_series,
    }
    return table[(request.family, request.kind)](request.q, request.M, request.T)


# ----------------------------------------------------------------------
# series assembly
# ----------------------------------------------------------------------

def _scim_degrees(T: int):
    return range(1, T + 1, 2)


def _pair_degrees(T: int):
    return range(1, T // 2 + 1)


def sep_class_series(q: int, M: int, T: int) -> Series:
    """Conjugacy classes of separable matrices that are M-th powers."""
    _check_common(q, M, T)
    s = series.one(T)
    for d in _scim_degrees(T):
        e = counts.count_mtilde_scim(q, d, M)
        if e:
            s = s * series.binom_factor(d, 1, e, T)
    for d in _pair_degrees(T):
        e = counts.count_mpower_pairs(q, d, M)
        if e:
            s = s * series.binom_factor(2 * d, 1, e, T)
    return s


def sep_elem_series(q: int, M: int, T: int) -> Series:
    """Proportion of U(n, q) that is separable and an M-th power."""
    _check_common(q, M, T)
    s = series.one(T)
    for d in _scim_degrees(T):
        e = counts.count_mtilde_scim(q, d, M)
        if e:
            s = s * series.binom_factor(d, Fraction(1, q**d + 1), e, T)
    for d in _pair_degrees(T):
        e = counts.count_mpower_pairs(q, d, M)
        if e:
            s = s * series.binom_factor(2 * d, Fraction(1, q ** (2 * d) - 1), e, T)
    return s


def cyc_class_series(q: int, M: int, T: int) -> Series:
    """Conjugacy classes of cyclic matrices that are M-th powers."""
    _check_common(q, M, T)
    _check_cyclic(q, M)
    s = series.one(T)
    for d in _scim_degrees(T):
        e = counts.count_mtilde_scim(q, d, M)
        if e:
            s = s * series.binom_factor(d, 1, -e, T)
    for d in _pair_degrees(T):
        e = counts.count_mpower_pairs(q, d, M)
        if e:
            s = s * series.binom_factor(2 * d, 1, -e, T)
    return s


def cyc_elem_series(q: int, M: int, T: int) -> Series:
    """Proportion of U(n, q) that is cyclic and an M-th power.

    A cyclic block with companion polynomial of SCIM degree d and
    multiplicity m has centraliser order q^(d(m-1)) (q^d + 1); geometric
    expansion of the closed form 1 + z^d / ((q^d+1)(1 - (z/q)^d)) gives
    exactly those reciprocal terms, so the factors are built term by term.
    """
    _check_common(q, M, T)
    _check_cyclic(q, M)
    s = series.one(T)
    for d in _scim_degrees(T):
        e = counts.count_mtilde_scim(q, d, M)
        if e:
            f = series.euler_factor(
                d, lambda m, d=d: q ** (d * (m - 1)) * (q**d + 1), 1, T
            )
            s = s * f**e
    for d in _pair_degrees(T):
        e = counts.count_mpower_pairs(q, d, M)
        if e:
            f = series.euler_factor(
                2 * d, lambda m, d=d: q ** (2 * d * (m - 1)) * (q ** (2 * d) - 1), 1, T
            )
            s = s * f**e
    return s


def ss_class_series(q: int, M: int, T: int) -> Series:
    """Conjugacy classes of semisimple matrices that are M-th powers."""
    _check_common(q, M, T)
    _check_semisimple(q, M)
    s = series.one(T)
    for d in _scim_degrees(T):
        e = counts.count_mtilde_scim(q, d, M)
        if e:
            s = s * series.binom_factor(d, 1, -e, T)
    for d in _pair_degrees(T):
        e = counts.count_mpower_pairs(q, d, M)
        if e:
            s = s * series.binom_factor(2 * d, 1, -e, T)
    for d in range(1, T // M + 1, 2):
        e = counts.s_tilde_prime(q, d, M)
        if e:
            s = s * series.binom_factor(d * M, 1, -e, T)
    for d in range(1, T // (2 * M) + 1):
        e = counts.s_prime(q, d, M)
        if e:
            s = s * series.binom_factor(2 * d * M, 1, -e, T)
    return s


def ss_elem_series(q: int, M: int, T: int) -> Series:
    """Proportion of U(n, q) that is semisimple and an M-th power.

    A semisimple class assigns multiplicity m to each polynomial; the
    centraliser factor is |U(m, q^(2d))| for a SCIM of degree d (the unitary
    group over F_{q^(2d)}) and |GL(m, q^(2d))| for a pair of degree d.  SCIMs
    that are not M~-powers and pairs that are not M-powers only occur with
    multiplicities in M*Z, stepping their factors by M.
    """
    _check_common(q, M, T)
    _check_semisimple(q, M)
    s = series.one(T)
    for d in _scim_degrees(T):
        e = counts.count_mtilde_scim(q, d, M)
        if e:
            f = series.euler_factor(d, lambda m, d=d: group_order_U(m, q**d), 1, T)
            s = s * f**e
    for d in _pair_degrees(T):
        e = counts.count_mpower_pairs(q, d, M)
        if e:
            f = series.euler_factor(
                2 * d, lambda m, d=d: group_order_GL(m, q ** (2 * d)), 1, T
            )
            s = s * f**e
    for d in range(1, T // M + 1, 2):
        e = counts.s_tilde_prime(q, d, M)
        if e:
            f = series.euler_factor(d, lambda m, d=d: group_order_U(m * M, q**d), M, T)
            s = s * f**e
    for d in range(1, T // (2 * M) + 1):
        e = counts.s_prime(q, d, M)
        if e:
            f = series.euler_factor(
                2 * d, lambda m, d=d: group_order_GL(m * M, q ** (2 * d)), M, T
            )
            s = s * f**e
    return s


# ----------------------------------------------------------------------
# centraliser orders
# ----------------------------------------------------------------------

def centralizer_order(datum: "ConjugacyDatum", q: int) -> int:
    """|C_U(A)| for a separable, cyclic, or semisimple conjugacy datum.

    Per stored polynomial (SCIM, or the canonical member of a pair) of
    degree d with partition lambda:

      * all partitions single-part [m] (cyclic shape):
        q^(d(m-1)) (q^d + 1) for SCIMs, q^(2d(m-1)) (q^(2d) - 1) for pairs;
      * all partitions all-ones [1^m] (semisimple shape):
        |U(m, q^(2d))| for SCIMs, |GL(m, q^(2d))| for pairs.

    Separable data ([1] everywhere) satisfy both shapes and both formulas
    agree there.  Any other partition shape is outside the supported
    families and is rejected.
    """
    items = datum.items()
    if not items:
        return 1
    if any(p.desc.q != q for p, _ in items):
        raise ValueError("conjugacy datum does not live over F_q2 for this q")
    cyclic_shape = all(len(lam) == 1 for _, lam in items)
    semisimple_shape = all(set(lam) == {1} for _, lam in items)
    if not (cyclic_shape or semisimple_shape):
        raise ValueError(
            "centraliser orders are only provided for separable, cyclic, or "
            f"semisimple class data, got partitions {[lam for _, lam in items]}"
        )
    total = 1
    for phi, lam in items:
        d = phi.degree
        scim = polyalg.tilde(phi) == phi
        if cyclic_shape:
            m = lam[0]
            if scim:
                total *= q ** (d * (m - 1)) * (q**d + 1)
            else:
                total *= q ** (2 * d * (m - 1)) * (q ** (2 * d) - 1)
        else:
            m = len(lam)
            total *= group_order_U(m, q**d) if scim else group_order_GL(m, q ** (2 * d))
    return total
