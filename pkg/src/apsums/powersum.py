"""Power sums over arithmetic progressions, by several independent routes.

The quantity is PS(d,a;n,m) = sum_{j=0}^{m} (a + d*j)^n with 0^0 = 1.
Direct summation is the universal oracle; the other routes are the
ordinary-Bernoulli Faulhaber formula, the generalized Faulhaber formula in
the one-parameter Bernoulli polynomials, and coefficient extraction from
the exponential and ordinary generating functions.  Route disagreement is
the package's primary diagnostic signal, so all of them stay public and
the CLI exposes each one by name.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .bernoulli import b_d_poly, bernoulli_poly
from .errors import DomainError
from .exact import Progression, integer_power
from .eulerian import reu_triangle
from .fps import Fps
from .stirling import s2_triangle

__all__ = [
    "ps_direct",
    "ps_via_ordinary",
    "ps_faulhaber",
    "sigma_s2",
    "eps_coefficients",
    "gps_coefficients",
    "METHOD_NAMES",
    "evaluate_method",
]


def ps_direct(prog: Progression, n: int, m: int) -> Fraction:
    """The defining sum; exact integer value, oracle for every other route.

    >>> print(ps_direct(Progression(2, 1), 2, 2))   # 1 + 9 + 25
    35
    """
    if n < 0 or m < 0:
        raise DomainError("indices must be non-negative")
    return sum((integer_power(prog.term(j), n) for j in range(m + 1)), Fraction(0))


def ps_via_ordinary(prog: Progression, n: int, m: int) -> Fraction:
    """Binomial a/d expansion over the ordinary Faulhaber formula:

    PS = sum_k C(n,k) a^(n-k) d^k [delta_{k,0} + (B(k+1,m+1) - B(k+1,1))/(k+1)].
    """
    if n < 0 or m < 0:
        raise DomainError("indices must be non-negative")
    acc = Fraction(0)
    for k in range(n + 1):
        weight = math.comb(n, k) * integer_power(prog.a, n - k) * prog.d**k
        if weight == 0:
            continue
        poly = bernoulli_poly(k + 1)
        bracket = Fraction(1 if k == 0 else 0)
        bracket += (poly.evaluate(m + 1) - poly.evaluate(1)) / (k + 1)
        acc += weight * bracket
    return acc


def ps_faulhaber(prog: Progression, n: int, m: int) -> Fraction:
    """Generalized Faulhaber formula in the one-parameter polynomials:

    PS = [B(d;n+1, a+d(m+1)) - B(d;n+1, d) - B(d;n+1, a) + B(d;n+1, 0)
          + d*delta_{n,0}] / (d*(n+1)).
    """
    if n < 0 or m < 0:
        raise DomainError("indices must be non-negative")
    d, a = prog.d, prog.a
    poly = b_d_poly(d, n + 1)
    value = (
        poly.evaluate(a + d * (m + 1))
        - poly.evaluate(d)
        - poly.evaluate(a)
        + poly.evaluate(0)
        + (d if n == 0 else 0)
    )
    return value / (d * (n + 1))


def sigma_s2(prog: Progression, n: int, j: int) -> Fraction:
    """The stacked-coefficient combination S2(n,j) j! + S2(n,j-1) (j-1)!.

    Defined for 0 <= j <= n+1; j = 0 gives a^n and j = n+1 gives d^n n!.
    """
    if n < 0 or j < 0 or j > n + 1:
        raise DomainError(f"index j must lie in 0..{n + 1}, got {j}")
    tri = s2_triangle(prog, n)
    acc = Fraction(0)
    if j <= n:
        acc += tri.entry(n, j) * math.factorial(j)
    if 1 <= j <= n + 1:
        acc += tri.entry(n, j - 1) * math.factorial(j - 1)
    return acc


def eps_coefficients(prog: Progression, n: int, m_max: int) -> list[Fraction]:
    """PS(d,a;n,0..m_max) read off the e.g.f. e^t sum_j SigmaS2(n,j) t^j/j!."""
    if n < 0 or m_max < 0:
        raise DomainError("indices must be non-negative")
    sigma = [sigma_s2(prog, n, j) / math.factorial(j) for j in range(n + 2)]
    egf = Fps.exp_of(1, m_max) * Fps(sigma, order=m_max)
    return [egf.coefficient_times_factorial(m) for m in range(m_max + 1)]


def gps_coefficients(prog: Progression, n: int, m_max: int, route: str = "stacked") -> list[Fraction]:
    """PS(d,a;n,0..m_max) from the o.g.f., by either closed form.

    route "stacked":  sum_k S2(n,k) k! x^k / (1-x)^(k+2)
    route "eulerian": (sum_k rEu(n,k) x^k) / (1-x)^(n+2)
    """
    if n < 0 or m_max < 0:
        raise DomainError("indices must be non-negative")
    geom = Fps.geometric(1, m_max)  # 1/(1-x)
    if route == "stacked":
        tri = s2_triangle(prog, n)
        ogf = Fps.zero(m_max)
        power = geom * geom
        for k in range(n + 1):
            ogf = ogf + (power.shifted_up(k) * (tri.entry(n, k) * math.factorial(k)))
            power = power * geom
    elif route == "eulerian":
        numerator = Fps(reu_triangle(prog, n).row(n), order=m_max)
        denominator = Fps.one(m_max)
        for _ in range(n + 2):
            denominator = denominator * geom
        ogf = numerator * denominator
    else:
        raise DomainError(f"unknown o.g.f. route {route!r}")
    return list(ogf.coefficients)


METHOD_NAMES = ("direct", "ordinary", "faulhaber", "egf", "ogf-stacked", "ogf-eulerian")


def evaluate_method(method: str, prog: Progression, n: int, m: int) -> Fraction:
    """Evaluate one named route at a single (n, m) query."""
    if method == "direct":
        return ps_direct(prog, n, m)
    if method == "ordinary":
        return ps_via_ordinary(prog, n, m)
    if method == "faulhaber":
        return ps_faulhaber(prog, n, m)
    if method == "egf":
        return eps_coefficients(prog, n, m)[m]
    if method == "ogf-stacked":
        return gps_coefficients(prog, n, m, route="stacked")[m]
    if method == "ogf-eulerian":
        return gps_coefficients(prog, n, m, route="eulerian")[m]
    raise DomainError(f"unknown method {method!r}")
