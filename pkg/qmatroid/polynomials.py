"""Exact integer polynomials in one and two variables.

UniPoly holds chi_M, P_G and F_G; BiPoly holds the Whitney rank generating function,
the Tutte polynomial and the dichromatic polynomial. Both evaluate at exact
rationals and convert to and from sympy expressions for expansion and display.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

import sympy

Number = Union[int, Fraction]

_X = sympy.Symbol("x")
_U, _V = sympy.symbols("u v")


def _to_int(value) -> int:
    value = sympy.nsimplify(value)
    if not value.is_integer:
        raise ValueError(f"non-integer coefficient {value}")
    return int(value)


def _power(base: Number, exponent: int) -> Fraction:
    return Fraction(base) ** exponent


@dataclass(frozen=True)
class UniPoly:
    """Integer polynomial, coefficients indexed by degree with no trailing zeros."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "UniPoly":
        if not terms:
            return cls()
        top = max(terms)
        return cls(tuple(terms.get(k, 0) for k in range(top + 1)))

    @classmethod
    def from_expr(cls, expr, symbol: sympy.Symbol = _X) -> "UniPoly":
        poly = sympy.Poly(sympy.expand(expr), symbol)
        terms = {monom[0]: _to_int(c) for monom, c in poly.terms()}
        return cls.from_dict(terms)

    @classmethod
    def interpolate(cls, points: Sequence[Tuple[int, Number]]) -> "UniPoly":
        """The polynomial of degree < len(points) through the given (x, y) points."""
        if not points:
            return cls()
        expr = sympy.interpolate([(x, sympy.Rational(y)) for x, y in points], _X)
        return cls.from_expr(expr)

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_expr(self, symbol: sympy.Symbol = _X):
        return sum((c * symbol**k for k, c in enumerate(self.coeffs)), sympy.Integer(0))

    def __call__(self, x: Number) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", int]) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        out = [0] * max(0, len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                variable = "x" if k == 1 else f"x^{k}"
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


Monomial = Tuple[int, int]


@dataclass(frozen=True)
class BiPoly:
    """Sparse integer polynomial in (u, v); exponents may be negative (Laurent terms)."""

    terms: Tuple[Tuple[Monomial, int], ...] = ()

    def __post_init__(self):
        merged: Dict[Monomial, int] = {}
        for monomial, c in self.terms:
            merged[monomial] = merged.get(monomial, 0) + int(c)
        object.__setattr__(self, "terms", tuple(sorted((m, c) for m, c in merged.items() if c)))

    @classmethod
    def from_dict(cls, terms: Mapping[Monomial, int]) -> "BiPoly":
        return cls(tuple(terms.items()))

    @classmethod
    def from_expr(cls, expr) -> "BiPoly":
        poly = sympy.Poly(sympy.expand(expr), _U, _V)
        return cls(tuple(((i, j), _to_int(c)) for (i, j), c in poly.terms()))

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def coefficient(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def as_expr(self):
        return sum((c * _U**i * _V**j for (i, j), c in self.terms), sympy.Integer(0))

    def __call__(self, u: Number, v: Number) -> Fraction:
        return sum((c * _power(u, i) * _power(v, j) for (i, j), c in self.terms), Fraction(0))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        return BiPoly(self.terms + other.terms)

    def __neg__(self) -> "BiPoly":
        return BiPoly(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: Union["BiPoly", int]) -> "BiPoly":
        if isinstance(other, int):
            return BiPoly(tuple((m, c * other) for m, c in self.terms))
        return BiPoly(
            tuple(
                ((i1 + i2, j1 + j2), c1 * c2)
                for (i1, j1), c1 in self.terms
                for (i2, j2), c2 in other.terms
            )
        )

    __rmul__ = __mul__

    def swap(self) -> "BiPoly":
        return BiPoly(tuple(((j, i), c) for (i, j), c in self.terms))

    def specialize(self, u: Number = None, v: Number = None) -> Union[UniPoly, Fraction]:
        """Fix one or both variables; with one fixed the result is a UniPoly in the other.

        The fixed value must make every coefficient an integer.
        """
        if u is not None and v is not None:
            return self(u, v)
        if u is None and v is None:
            raise ValueError("specialize needs u or v")
        collected: Dict[int, Fraction] = {}
        for (i, j), c in self.terms:
            if v is not None:
                key, scale = i, _power(v, j)
            else:
                key, scale = j, _power(u, i)
            collected[key] = collected.get(key, Fraction(0)) + c * scale
        if any(k < 0 for k, c in collected.items() if c):
            raise ValueError("specialization leaves negative powers")
        if any(c.denominator != 1 for c in collected.values()):
            raise ValueError("specialization leaves non-integer coefficients")
        return UniPoly.from_dict({k: int(c) for k, c in collected.items() if k >= 0})

    def shift(self, du: int, dv: int) -> "BiPoly":
        """Substitute u -> u + du, v -> v + dv by exact expansion."""
        if any(i < 0 or j < 0 for (i, j), _ in self.terms):
            raise ValueError("cannot shift a polynomial with negative exponents")
        expr = self.as_expr().subs({_U: _U + du, _V: _V + dv}, simultaneous=True)
        return BiPoly.from_expr(expr)

    def render(self, names: Tuple[str, str] = ("u", "v")) -> str:
        """Terms by descending total degree, then descending first exponent."""
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))
        pieces = []
        for (i, j), c in ordered:
            factors = []
            for name, e in zip(names, (i, j)):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            magnitude = abs(c)
            if not body:
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude}*{body}"
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

