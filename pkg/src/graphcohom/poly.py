"""Sparse integer polynomials in one and two variables.

Coefficients are Python ints, exponents are non-negative, and zero
coefficients are never stored, so equality is plain dict equality.
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["IntPoly", "TwoVarPoly", "format_poly", "format_two_var_poly"]


class IntPoly:
    """Integer-coefficient polynomial in one variable, stored {exp: coeff}."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                e, c = int(e), int(c)
                if e < 0:
                    raise ValueError("exponents must be non-negative")
                if c:
                    clean[e] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPoly":
        return cls({exp: coeff})

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self.pairs())

    def __add__(self, other: "IntPoly") -> "IntPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x: int) -> int:
        return sum(c * x ** e for e, c in self._coeffs.items())

    def __repr__(self) -> str:
        return f"IntPoly({dict(self.pairs())!r})"


class TwoVarPoly:
    """Integer polynomial in two variables, stored {(exp1, exp2): coeff}."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if coeffs:
            for (e1, e2), c in coeffs.items():
                e1, e2, c = int(e1), int(e2), int(c)
                if e1 < 0 or e2 < 0:
                    raise ValueError("exponents must be non-negative")
                if c:
                    clean[(e1, e2)] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "TwoVarPoly":
        return cls()

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff: int = 1) -> "TwoVarPoly":
        return cls({(e1, e2): coeff})

    def pairs(self) -> tuple[tuple[int, int, int], ...]:
        """(exp1, exp2, coefficient) triples, sorted by exponents."""
        return tuple((e1, e2, c) for (e1, e2), c in sorted(self._coeffs.items()))

    def coefficient(self, e1: int, e2: int) -> int:
        return self._coeffs.get((e1, e2), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoVarPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self.pairs())

    def __add__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, 0) + c
        return TwoVarPoly(out)

    def __neg__(self) -> "TwoVarPoly":
        return TwoVarPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TwoVarPoly({k: c * other for k, c in self._coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, a2), c1 in self._coeffs.items():
            for (b1, b2), c2 in other._coeffs.items():
                key = (a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return TwoVarPoly(out)

    __rmul__ = __mul__

    def substitute_first(self, value: int) -> IntPoly:
        """Evaluate the first variable at an integer, leaving the second."""
        out: dict[int, int] = {}
        for (e1, e2), c in self._coeffs.items():
            out[e2] = out.get(e2, 0) + c * value ** e1
        return IntPoly(out)

    def __repr__(self) -> str:
        return f"TwoVarPoly({dict(sorted(self._coeffs.items()))!r})"


def _format_term(coeff: int, factors: str) -> tuple[str, str]:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if not factors:
        return sign, str(mag)
    if mag == 1:
        return sign, factors
    return sign, f"{mag}*{factors}"


def format_poly(p: IntPoly, var: str = "q") -> str:
    """Human-readable rendering, highest exponent first."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.pairs(), reverse=True):
        factors = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        sign, body = _format_term(c, factors)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_two_var_poly(p: TwoVarPoly, var1: str = "t", var2: str = "q") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e1, e2, c in sorted(p.pairs(), reverse=True):
        factors = []
        if e1:
            factors.append(var1 if e1 == 1 else f"{var1}^{e1}")
        if e2:
            factors.append(var2 if e2 == 1 else f"{var2}^{e2}")
        sign, body = _format_term(c, "*".join(factors))
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
