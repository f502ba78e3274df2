"""Exact univariate polynomials in the formal variable q.

Coefficients are signed integers kept within the 64-bit range; anything
larger raises :class:`CoefficientOverflowError` instead of growing silently.
Only addition, subtraction, and evaluation are provided -- partition counts
and multiplicities never need products of polynomials.
"""

from __future__ import annotations

from typing import Iterable

from .errors import CoefficientOverflowError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise CoefficientOverflowError(
            f"exact value {value} is outside the signed 64-bit range"
        )
    return value


class QPoly:
    """Immutable polynomial in q, stored as ascending coefficients.

    The representation is canonical: the last stored coefficient is nonzero
    and the zero polynomial stores nothing, so two values are equal exactly
    when their coefficient tuples are.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {type(c).__name__}")
            _checked(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int) -> "QPoly":
        """The polynomial q**degree."""
        if degree < 0:
            raise ValueError(f"monomial degree must be nonnegative, got {degree}")
        return cls([0] * degree + [1])

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients in ascending degree, canonical form."""
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def eval_at_one(self) -> int:
        """Sum of coefficients: recovers the plain count from a q-count."""
        return _checked(sum(self._coeffs))

    def eval_at(self, value: int) -> int:
        """Exact value at an integer point; the result must fit in 64 bits."""
        if not isinstance(value, int):
            raise TypeError(f"evaluation point must be an integer, got {type(value).__name__}")
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return _checked(acc)

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self._coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def _format(self, exponent: str) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for deg in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[deg]
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                power = "q" if deg == 1 else "q" + exponent.format(deg)
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        """Descending powers, zero terms omitted, e.g. ``q^5 + q``."""
        return self._format("^{}")

    def latex(self) -> str:
        """Same layout as ``str`` with braced exponents, e.g. ``q^{5} + q``."""
        return self._format("^{{{}}}")

    def __repr__(self) -> str:
        return f"QPoly({list(self._coeffs)!r})"


ZERO = QPoly()
ONE = QPoly([1])
