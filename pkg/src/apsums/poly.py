"""Dense polynomials with exact rational coefficients.

Unlike a truncated series, a polynomial is a total object: coefficients
beyond the degree are genuinely zero, the coefficient vector is kept in
trimmed canonical form, and evaluation is exact.  Row polynomials of the
number triangles, the Bernoulli polynomials and the factorial-basis
polynomials all live here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .exact import Progression

__all__ = ["Polynomial", "fallfac_poly", "risefac_poly"]

_ZERO = Fraction(0)


class Polynomial:
    """Coefficient vector indexed by exponent, trailing zeros trimmed."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Fraction | int] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value: Fraction | int) -> Polynomial:
        return cls([value])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def monomial(cls, exponent: int, coefficient: Fraction | int = 1) -> Polynomial:
        if exponent < 0:
            raise DomainError("exponent must be non-negative")
        return cls([0] * exponent + [coefficient])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise DomainError("exponent must be non-negative")
        return self._coeffs[k] if k < len(self._coeffs) else _ZERO

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self._coeffs):
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return " + ".join(terms)

    def __add__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: Polynomial | Fraction | int) -> Polynomial:
        return self + (-other)

    def __rsub__(self, other: Fraction | int) -> Polynomial:
        return -self + other

    def __mul__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self._coeffs])
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise DomainError("polynomial power must be non-negative")
        out = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = _ZERO
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([k * self._coeffs[k] for k in range(1, len(self._coeffs))])

    def shifted(self, c: Fraction | int) -> Polynomial:
        """The polynomial p(x + c)."""
        shift = Polynomial([Fraction(c), Fraction(1)])
        acc = Polynomial()
        for coeff in reversed(self._coeffs):
            acc = acc * shift + coeff
        return acc


def fallfac_poly(prog: Progression, m: int) -> Polynomial:
    """Generalized falling factorial as a polynomial in x: prod (x - (a+j*d))."""
    if m < 0:
        raise DomainError("length must be non-negative")
    out = Polynomial.constant(1)
    for j in range(m):
        out = out * Polynomial([-prog.term(j), 1])
    return out


def risefac_poly(prog: Progression, n: int) -> Polynomial:
    """Generalized rising factorial as a polynomial in x: prod (x + (a+j*d))."""
    if n < 0:
        raise DomainError("length must be non-negative")
    out = Polynomial.constant(1)
    for j in range(n):
        out = out * Polynomial([prog.term(j), 1])
    return out
