"""Counts of the polynomial families that drive the generating functions.

For q a prime power and the coefficient field F_q2:

  * N~(q, d)    -- SCIM polynomials of degree d (zero for even d; for odd d
                   they correspond to Frobenius orbits of norm-one elements
                   generating F_{q^(2d)});
  * N~_M(q, d)  -- the M~-power SCIM polynomials among them, by the closed
                   form (1 / (d * (M, q^d + 1))) * sum over l | d of
                   mu(l) * (M * (q^(2d/l) - 1), q^d + 1);
  * R~(q, d)    -- unordered pairs {g, g~} of non-self-conjugate irreducibles
                   of degree d with g(0) != 0;
  * R~_M(q, d)  -- the pairs whose members are M-power polynomials, counted
                   by exhausting the degree-d elements of F_{q^(2d)} grouped
                   by multiplicative order (no closed form is claimed; the
                   polynomial-level enumeration is the reference the tests
                   compare against);
  * S~'_M(d,q) = N~ - N~_M and S'_M(d,q) = R~ - R~_M, the non-power leftovers.

All counts are exact integers; internal divisibility is asserted so a misread
formula fails loudly rather than rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ._numth import (
    EnumerationBoundError,
    divisors,
    euler_phi,
    mobius,
    mult_order,
    prime_power,
)

__all__ = [
    "mobius",
    "count_scim",
    "count_mtilde_scim",
    "count_irreducible",
    "count_pairs",
    "count_mpower_pairs",
    "s_tilde_prime",
    "s_prime",
    "CountRecord",
    "count_record",
    "DEFAULT_ENUM_BOUND",
]

DEFAULT_ENUM_BOUND = 1 << 20


def count_scim(q: int, d: int) -> int:
    """N~(q, d): SCIM polynomials of degree d over F_q2.

    (1/d) * sum over l | d of mu(l) * (q^(d/l) + 1) for odd d, else 0.
    """
    _validate(q, d)
    if d % 2 == 0:
        return 0
    total = sum(mobius(l) * (q ** (d // l) + 1) for l in divisors(d))
    count, rem = divmod(total, d)
    assert rem == 0, "SCIM count must be integral"
    return count


def count_mtilde_scim(q: int, d: int, M: int) -> int:
    """N~_M(q, d): M~-power SCIM polynomials of degree d.

    (1 / (d * (M, q^d + 1))) * sum over l | d of
    mu(l) * (M * (q^(2d/l) - 1), q^d + 1) for odd d, else 0.

    The Moebius sum counts norm-one elements b with b^M still generating
    F_{q^(2d)}; the power map on the norm-one circle is (M, q^d + 1)-to-one
    onto its image, whence the denominator.  M = 1 reproduces N~(q, d)
    (every polynomial is a first power), which the series builders use as
    the unrestricted baseline.
    """
    _validate(q, d, M)
    if d % 2 == 0:
        return 0
    total = sum(
        mobius(l) * gcd(M * (q ** (2 * d // l) - 1), q**d + 1) for l in divisors(d)
    )
    count, rem = divmod(total, d * gcd(M, q**d + 1))
    assert rem == 0, "M~-power SCIM count must be integral"
    return count


def count_irreducible(Q: int, d: int) -> int:
    """Monic irreducibles of degree d over F_Q (necklace formula)."""
    if Q < 2 or d < 1:
        raise ValueError("need a field size Q >= 2 and degree d >= 1")
    total = sum(mobius(l) * Q ** (d // l) for l in divisors(d))
    count, rem = divmod(total, d)
    assert rem == 0
    return count


def count_pairs(q: int, d: int) -> int:
    """R~(q, d): unordered pairs {g, g~} with g irreducible of degree d,
    g(0) != 0 and g != g~.  The polynomial t is removed in degree 1."""
    _validate(q, d)
    loose = count_irreducible(q * q, d) - (1 if d == 1 else 0) - count_scim(q, d)
    count, rem = divmod(loose, 2)
    if rem:
        raise ArithmeticError(f"non-SCIM irreducible count {loose} is odd")
    return count


def _order_is_self_conjugate(D: int, q: int, d: int) -> bool:
    # minimal polynomial of an order-D element equals its own tilde conjugate
    # iff a^(-q) lies in the Frobenius orbit of a, i.e. D | q^(2j-1) + 1 for
    # some 1 <= j <= d.
    return any((q ** (2 * j - 1) + 1) % D == 0 for j in range(1, d + 1))


def count_mpower_pairs(q: int, d: int, M: int, *, enum_bound: int = DEFAULT_ENUM_BOUND) -> int:
    """R~_M(q, d): pairs {g, g~} whose members are M-power polynomials.

    Enumerates the elements of F_{q^(2d)}^* grouped by multiplicative order D
    (phi(D) elements each).  An order-D element has degree d over F_q2 iff
    the order of q^2 mod D is d; its minimal polynomial is a pair member iff
    the order fails every self-conjugacy divisibility; and it is an M-th
    power iff D divides (q^(2d) - 1) / (M, q^(2d) - 1).  Each qualifying pair
    {g, g~} accounts for exactly 2d such elements.
    """
    _validate(q, d, M)
    if q ** (2 * d) > enum_bound:
        raise EnumerationBoundError(
            f"pair enumeration for q={q}, d={d} exceeds the bound {enum_bound}"
        )
    Q = q * q
    n = Q**d - 1
    power_target = n // gcd(M, n)
    total = 0
    for D in divisors(n):
        if mult_order(Q, D) != d:
            continue
        if _order_is_self_conjugate(D, q, d):
            continue
        if power_target % D == 0:
            total += euler_phi(D)
    count, rem = divmod(total, 2 * d)
    assert rem == 0, "pair-member element count must split into pairs of orbits"
    return count


def s_tilde_prime(q: int, d: int, M: int) -> int:
    """S~'_M(d, q) = N~(q, d) - N~_M(q, d): SCIM but not M~-power."""
    value = count_scim(q, d) - count_mtilde_scim(q, d, M)
    if value < 0:
        raise ArithmeticError("M~-power count exceeds the SCIM count")
    return value


def s_prime(q: int, d: int, M: int) -> int:
    """S'_M(d, q) = R~(q, d) - R~_M(q, d): pairs that are not M-power."""
    value = count_pairs(q, d) - count_mpower_pairs(q, d, M)
    if value < 0:
        raise ArithmeticError("M-power pair count exceeds the pair count")
    return value


@dataclass(frozen=True)
class CountRecord:
    """One row of the count table for fixed (q, d, M)."""

    q: int
    d: int
    M: int
    n_tilde: int
    n_tilde_M: int
    r_tilde: int
    r_tilde_M: int
    s_tilde_prime: int
    s_prime: int

    def __post_init__(self):
        ok = (
            0 <= self.n_tilde_M <= self.n_tilde
            and 0 <= self.r_tilde_M <= self.r_tilde
            and self.s_tilde_prime == self.n_tilde - self.n_tilde_M
            and self.s_prime == self.r_tilde - self.r_tilde_M
        )
        if not ok:
            raise ValueError(f"inconsistent count record {self}")


def count_record(q: int, d: int, M: int, *, enum_bound: int = DEFAULT_ENUM_BOUND) -> CountRecord:
    n = count_scim(q, d)
    n_M = count_mtilde_scim(q, d, M)
    r = count_pairs(q, d)
    r_M = count_mpower_pairs(q, d, M, enum_bound=enum_bound)
    return CountRecord(q, d, M, n, n_M, r, r_M, n - n_M, r - r_M)


def _validate(q: int, d: int, M: int = 1):
    prime_power(q)  # raises for non-prime-powers
    if d < 1:
        raise ValueError(f"degree d = {d} must be positive")
    if M < 1:
        raise ValueError(f"M = {M} must be a positive integer")
