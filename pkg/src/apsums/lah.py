"""Generalized Lah triangles: rising factorials in the falling-factorial basis.

L[d,a] is the triangle product S1phat[d,a] * S2hat[d,a]; as a Sheffer
pair it is ((1 - d*t)^(-2a/d), t/(1 - d*t)).  Its a-sequence is
{1, d, 0, 0, ...}, which yields the three-term recurrence

    L(n,m) = (n/m) L(n-1,m-1) + d*n L(n-1,m),   m >= 1,

with column 0 supplied from the e.g.f. (1 - d*t)^(-2a/d).  A four-term
recurrence with a look-back of two rows follows from the same column
e.g.f.  The inverse matrix is the same triangle with checkerboard signs.

The published form of the three-term recurrence carries coefficient n
instead of d*n on the second term, which contradicts the product
construction whenever d >= 2; ``lah_three_term(..., printed=True)``
evaluates that variant so the verifier can confirm the discrepancy.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .exact import Progression
from .fps import Fps
from .sheffer import ShefferPair, Triangle
from .stirling import s1phat_triangle, s2hat_triangle

__all__ = [
    "lah_pair",
    "lah_inverse_pair",
    "lah_triangle",
    "lah_sheffer_triangle",
    "lah_four_term",
    "lah_three_term",
    "lah_inverse",
    "lah_inverse_four_term",
    "lah_column0",
]


def lah_pair(prog: Progression, order: int) -> ShefferPair:
    """((1 - d*t)^(-2a/d), t/(1 - d*t))."""
    one_minus_d = Fps([1, -prog.d], order=order)
    g = one_minus_d.pow(Fraction(-2 * prog.a, prog.d))
    f = Fps.x(order) * one_minus_d.reciprocal()
    return ShefferPair(g, f, label=f"lah[{prog.d},{prog.a}]")


def lah_inverse_pair(prog: Progression, order: int) -> ShefferPair:
    """((1 + d*t)^(-2a/d), t/(1 + d*t)), the group inverse of lah_pair."""
    one_plus_d = Fps([1, prog.d], order=order)
    g = one_plus_d.pow(Fraction(-2 * prog.a, prog.d))
    f = Fps.x(order) * one_plus_d.reciprocal()
    return ShefferPair(g, f, label=f"lahinv[{prog.d},{prog.a}]")


def lah_column0(prog: Progression, size: int) -> list[Fraction]:
    """Column m = 0: n! [t^n] (1 - d*t)^(-2a/d), extracted from the series."""
    if size < 0:
        raise DomainError("size must be non-negative")
    g = Fps([1, -prog.d], order=size).pow(Fraction(-2 * prog.a, prog.d))
    return [g.coefficient_times_factorial(n) for n in range(size + 1)]


def _as_lah(rows, prog: Progression, family: str = "lah") -> Triangle:
    tri = Triangle(rows, family=family, prog=prog)
    if not tri.is_integer():
        raise DomainError("Lah triangle produced a non-integer entry")
    return tri


def lah_triangle(prog: Progression, size: int) -> Triangle:
    """L[d,a] rows 0..size by the triangle product S1phat * S2hat.

    The Sheffer-pair route is evaluated alongside and must agree; a
    mismatch would mean one of the underlying builders broke.
    """
    if size < 0:
        raise DomainError("size must be non-negative")
    product = s1phat_triangle(prog, size).multiply(s2hat_triangle(prog, size))
    sheffer = lah_sheffer_triangle(prog, size)
    if product != sheffer:
        raise AssertionError("Lah product and Sheffer routes disagree")  # pragma: no cover
    return _as_lah(product.rows, prog)


def lah_sheffer_triangle(prog: Progression, size: int) -> Triangle:
    """L[d,a] materialized directly from its Sheffer pair."""
    tri = lah_pair(prog, size).triangle(size, family="lah", prog=prog)
    return _as_lah(tri.rows, prog)


def lah_four_term(prog: Progression, size: int) -> Triangle:
    """L[d,a] from the four-term recurrence

    L(n,m) = L(n-1,m-1) + 2(a + d(n-1)) L(n-1,m)
             - d(n-1)(2a + d(n-2)) L(n-2,m).
    """
    if size < 0:
        raise DomainError("size must be non-negative")
    d, a = prog.d, prog.a
    rows = [[Fraction(1)]]
    for n in range(1, size + 1):
        prev = rows[n - 1]
        prev2 = rows[n - 2] if n >= 2 else []
        row = []
        for m in range(n + 1):
            acc = prev[m - 1] if m >= 1 else Fraction(0)
            if m < n:
                acc += 2 * (a + d * (n - 1)) * prev[m]
            if m < n - 1:
                acc -= d * (n - 1) * (2 * a + d * (n - 2)) * prev2[m]
            row.append(acc)
        rows.append(row)
    return _as_lah(rows, prog)


def lah_three_term(prog: Progression, size: int, printed: bool = False) -> Triangle:
    """L[d,a] from the a-sequence three-term recurrence, for m >= 1:

    L(n,m) = (n/m) L(n-1,m-1) + d*n L(n-1,m),

    with column 0 taken from the e.g.f.  ``printed=True`` swaps the d*n
    coefficient for the published plain n, which is expected to disagree
    with the other routes whenever d >= 2.
    """
    if size < 0:
        raise DomainError("size must be non-negative")
    d = prog.d
    column0 = lah_column0(prog, size)
    rows = [[column0[0]]]
    for n in range(1, size + 1):
        prev = rows[-1]
        row = [column0[n]]
        for m in range(1, n + 1):
            left = prev[m - 1]
            right = prev[m] if m < n else Fraction(0)
            growth = n if printed else d * n
            row.append(Fraction(n, m) * left + growth * right)
        rows.append(row)
    tri = Triangle(rows, family="lah", prog=prog)
    if not printed and not tri.is_integer():
        raise DomainError("Lah triangle produced a non-integer entry")
    return tri


def lah_inverse(prog: Progression, size: int) -> Triangle:
    """L^(-1)[d,a]: checkerboard-signed Lah entries; L * L^(-1) = identity."""
    signed = lah_triangle(prog, size).signed()
    return Triangle(signed.rows, family="lahinv", prog=prog)


def lah_inverse_four_term(prog: Progression, size: int) -> Triangle:
    """L^(-1) from the four-term recurrence with a -> -a, d -> -d:

    L^(-1)(n,m) = L^(-1)(n-1,m-1) - 2(a + d(n-1)) L^(-1)(n-1,m)
                  - d(n-1)(2a + d(n-2)) L^(-1)(n-2,m).
    """
    if size < 0:
        raise DomainError("size must be non-negative")
    d, a = prog.d, prog.a
    rows = [[Fraction(1)]]
    for n in range(1, size + 1):
        prev = rows[n - 1]
        prev2 = rows[n - 2] if n >= 2 else []
        row = []
        for m in range(n + 1):
            acc = prev[m - 1] if m >= 1 else Fraction(0)
            if m < n:
                acc -= 2 * (a + d * (n - 1)) * prev[m]
            if m < n - 1:
                acc -= d * (n - 1) * (2 * a + d * (n - 2)) * prev2[m]
            row.append(acc)
        rows.append(row)
    return _as_lah(rows, prog, family="lahinv")
