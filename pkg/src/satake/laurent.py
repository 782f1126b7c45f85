"""Exact sparse Laurent polynomials in one variable q with integer coefficients.

Exponents may be negative.  All arithmetic is exact; there is no floating
point anywhere in this package.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union


class LaurentPoly:
    """A finitely supported map exponent -> nonzero integer coefficient.

    Instances are immutable and hashable.  The canonical text form lists
    terms in increasing exponent, e.g. ``3*q^-1 + 1 + 2*q^2``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "_terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(((0, 1),))

    @classmethod
    def const(cls, n: int) -> "LaurentPoly":
        return cls(((0, n),))

    @classmethod
    def q(cls, k: int = 1, coeff: int = 1) -> "LaurentPoly":
        return cls(((k, coeff),))

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coefficient(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def has_nonnegative_exponents(self) -> bool:
        return all(e >= 0 for e, _ in self._terms)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for _, c in self._terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, n: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e, n * c) for e, c in self._terms))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self._terms))

    def bar(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly(tuple((-e, c) for e, c in self._terms))

    def eval_at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the quotient is not in Z[q, q^-1].

        A failure here always signals a normalization bug upstream, never a
        recoverable condition.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = self.min_exponent() - divisor.min_exponent()
        num = {e - self.min_exponent(): Fraction(c) for e, c in self._terms}
        den = {e - divisor.min_exponent(): Fraction(c) for e, c in divisor._terms}
        deg_n = max(num)
        deg_d = max(den)
        lead = den[deg_d]
        quot: dict[int, Fraction] = {}
        rem = dict(num)
        for e in range(deg_n - deg_d, -1, -1):
            c = rem.get(e + deg_d, Fraction(0))
            if c == 0:
                continue
            f = c / lead
            quot[e] = f
            for de, dc in den.items():
                k = e + de
                rem[k] = rem.get(k, Fraction(0)) - f * dc
                if rem[k] == 0:
                    del rem[k]
        if rem:
            raise ValueError(f"inexact division: {self} by {divisor}")
        out = {}
        for e, f in quot.items():
            if f.denominator != 1:
                raise ValueError(f"inexact division: {self} by {divisor}")
            out[e + shift] = int(f)
        return LaurentPoly(out)

    def divexact_int(self, n: int) -> "LaurentPoly":
        if n == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for e, c in self._terms:
            if c % n != 0:
                raise ValueError(f"inexact division of {self} by {n}")
            out.append((e, c // n))
        return LaurentPoly(out)

    # -- comparison and rendering ------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = f"q^{e}" if e != 1 else "q"
            else:
                body = f"{mag}*q^{e}" if e != 1 else f"{mag}*q"
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): c for e, c in data.items()})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.q()
