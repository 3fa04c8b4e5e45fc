"""Dense univariate polynomials over exact rationals or inexact scalars.

A single class covers both arithmetic tracks.  Exact polynomials carry
``fractions.Fraction`` (or int) coefficients and support exact division,
gcd and square-free decomposition.  Inexact polynomials carry float,
complex or mpmath values; they only need evaluation and ring arithmetic.
Coefficients are stored densely in ascending order with the leading
coefficient nonzero (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from fractions import Fraction


def _is_exact_scalar(x) -> bool:
    return isinstance(x, (int, Fraction))


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and _is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def _is_zero(x) -> bool:
    if _is_exact_scalar(x):
        return x == 0
    # inexact scalars trim only on literal zero; tolerances are the caller's job
    return x == 0


class Polynomial:
    """Immutable dense polynomial; ``exact`` is True iff all coefficients are rational."""

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs):
        c = _trim(coeffs)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "exact", all(_is_exact_scalar(x) for x in c))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((Fraction(1),))

    @classmethod
    def monomial(cls, degree: int, coeff=Fraction(1)) -> "Polynomial":
        return cls((0,) * degree + (coeff,))

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0) if self.exact else 0.0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return "Polynomial(" + " + ".join(terms) + ")"

    # -- ring arithmetic -----------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial.zero()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Polynomial(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, s) -> "Polynomial":
        return Polynomial(tuple(c * s for c in self.coeffs))

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for Fraction, float, complex and mpmath inputs."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return 0 * x
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    # -- exact division machinery -------------------------------------------

    def synthetic_divide(self, r):
        """Divide by (x - r); returns (quotient, remainder)."""
        if self.is_zero:
            return Polynomial.zero(), 0 * r
        out = []
        acc = 0 * r
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        out.reverse()
        return Polynomial(out), rem

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if not (self.exact and other.exact):
            raise ValueError("divmod requires exact polynomials")
        rem = [Fraction(c) for c in self.coeffs]
        den = other.coeffs
        dd = other.degree
        lead = Fraction(den[-1])
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            q[i - dd] = f
            for j, b in enumerate(den):
                rem[i - dd + j] -= f * b
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("exact division has nonzero remainder")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Polynomial(tuple(Fraction(c, 1) / lead if self.exact else c / lead
                                for c in self.coeffs))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd by the Euclidean algorithm, exact coefficients only."""
        if not (self.exact and other.exact):
            raise ValueError("gcd requires exact polynomials")
        a, b = self, other
        while not b.is_zero:
            a, b = b, divmod(a, b)[1]
        if a.is_zero:
            return a
        return a.monic()

    def squarefree_part(self) -> "Polynomial":
        """m / gcd(m, m'); its degree counts the distinct roots of m."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return (self // g).monic()

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(tuple(fn(c) for c in self.coeffs))
