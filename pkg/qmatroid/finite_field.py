"""Exact arithmetic in GF(p^d) for odd primes p.

Elements are stored in the polynomial basis over GF(p) modulo a monic irreducible
polynomial. Multiplication, inversion and powers go through exp/log tables built
from a primitive element when the field is created, so fields are meant to stay
at desk scale (q <= 10^4 by default).
"""

import itertools
import logging
import operator
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

import sympy

from .enumeration import ensure_within_budget
from .errors import (
    DegreeMismatch,
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    FieldTooLarge,
    InvalidQ,
    NotPrime,
    ParseError,
    ReducibleModulus,
    ZeroCoefficient,
)

DEFAULT_MAX_FIELD_SIZE = 10_000

logger = logging.getLogger(__name__)

ElementLike = Union["FieldElement", int, Sequence[int]]


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> Tuple[int, ...]:
    """Product of two coefficient vectors reduced by a monic modulus (low degree first)."""
    d = len(modulus) - 1
    product = [0] * max(1, 2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                product[i + j] = (product[i + j] + x * y) % p
    for k in range(len(product) - 1, d - 1, -1):
        c = product[k]
        if c:
            for i in range(d + 1):
                product[k - d + i] = (product[k - d + i] - c * modulus[i]) % p
    return tuple(product[:d])


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    t = sympy.Symbol("t")
    return bool(sympy.Poly(list(reversed(modulus)), t, modulus=p).is_irreducible)


def find_irreducible(p: int, d: int) -> Tuple[int, ...]:
    """First monic irreducible polynomial of degree d over GF(p), in coefficient-index order.

    Coefficients are returned low degree first, leading 1 included.
    """
    if d == 1:
        return (0, 1)
    for index in range(p**d):
        lower = [(index // p**i) % p for i in range(d)]
        if lower[0] == 0:
            continue
        candidate = tuple(lower) + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise ReducibleModulus(f"no irreducible polynomial of degree {d} over GF({p})")


@dataclass(frozen=True)
class Field:
    """The finite field GF(p^d) for an odd prime p.

    Args:
        p: the characteristic
        d: the extension degree
        modulus: monic irreducible polynomial of degree d, coefficients low degree
            first; optional for d = 1, and picked by find_irreducible when omitted
        max_size: guardrail on q = p^d
    """

    p: int
    d: int = 1
    modulus: Tuple[int, ...] = ()
    max_size: int = dataclass_field(default=DEFAULT_MAX_FIELD_SIZE, compare=False, repr=False)
    _elements: tuple = dataclass_field(default=(), init=False, compare=False, repr=False)
    _exp: tuple = dataclass_field(default=(), init=False, compare=False, repr=False)
    _log: tuple = dataclass_field(default=(), init=False, compare=False, repr=False)
    _squares: Optional[frozenset] = dataclass_field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not sympy.isprime(self.p):
            raise NotPrime(f"characteristic {self.p!r} is not a prime")
        if self.p == 2:
            raise EvenCharacteristic("only fields of odd characteristic are supported")
        if not isinstance(self.d, int) or self.d < 1:
            raise DegreeMismatch(f"extension degree must be a positive integer, got {self.d!r}")
        if self.p**self.d > self.max_size:
            raise FieldTooLarge(
                f"GF({self.p}^{self.d}) has {self.p ** self.d} elements, above the limit {self.max_size}"
            )

        modulus = tuple(int(c) % self.p for c in self.modulus)
        if not modulus:
            modulus = find_irreducible(self.p, self.d)
        if len(modulus) != self.d + 1 or modulus[-1] != 1:
            raise DegreeMismatch(
                f"modulus {self.modulus!r} is not monic of degree {self.d}"
            )
        if self.d > 1 and not _is_irreducible(modulus, self.p):
            raise ReducibleModulus(f"modulus {modulus!r} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", modulus)
        self._build_tables()

    def __reduce__(self):
        return (Field, (self.p, self.d, self.modulus, self.max_size))

    def __str__(self) -> str:
        return f"GF({self.q})"

    @property
    def q(self) -> int:
        return self.p**self.d

    @property
    def spec(self) -> str:
        """The "p^d:coeffs" specification string of this field."""
        if self.d == 1:
            return str(self.p)
        return f"{self.p}^{self.d}:{','.join(str(c) for c in self.modulus)}"

    # -- construction helpers -------------------------------------------------

    def _coeffs_of(self, index: int) -> Tuple[int, ...]:
        return tuple((index // self.p**i) % self.p for i in range(self.d))

    def _index_of(self, coeffs: Sequence[int]) -> int:
        index = 0
        for c in reversed(coeffs):
            index = index * self.p + c
        return index

    def _slow_pow(self, base: Tuple[int, ...], exponent: int) -> Tuple[int, ...]:
        result = (1,) + (0,) * (self.d - 1)
        while exponent:
            if exponent & 1:
                result = _poly_mulmod(result, base, self.modulus, self.p)
            base = _poly_mulmod(base, base, self.modulus, self.p)
            exponent >>= 1
        return result

    def _find_generator(self) -> Tuple[int, ...]:
        order = self.q - 1
        one = (1,) + (0,) * (self.d - 1)
        factors = sympy.primefactors(order)
        for index in range(1, self.q):
            candidate = self._coeffs_of(index)
            if all(self._slow_pow(candidate, order // r) != one for r in factors):
                return candidate
        raise ReducibleModulus(f"no primitive element found for modulus {self.modulus!r}")

    def _build_tables(self) -> None:
        q = self.q
        elements = tuple(FieldElement(self, self._coeffs_of(i), i) for i in range(q))
        generator = self._find_generator()
        exp = [0] * (q - 1)
        log = [-1] * q
        value = (1,) + (0,) * (self.d - 1)
        for k in range(q - 1):
            index = self._index_of(value)
            exp[k] = index
            log[index] = k
            value = _poly_mulmod(value, generator, self.modulus, self.p)
        object.__setattr__(self, "_elements", elements)
        object.__setattr__(self, "_exp", tuple(exp))
        object.__setattr__(self, "_log", tuple(log))
        logger.debug("Built GF(%d) tables with generator %s", q, generator)

    # -- element access -------------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return self._elements[0]

    @property
    def one(self) -> "FieldElement":
        return self._elements[1]

    def from_index(self, index: int) -> "FieldElement":
        return self._elements[index]

    def element(self, value: ElementLike) -> "FieldElement":
        """Coerce an int (prime-subfield value), coefficient sequence or element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} does not belong to {self}")
            return self._elements[value.index]
        if isinstance(value, int):
            return self._elements[value % self.p]
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.d:
            raise DegreeMismatch(f"{len(coeffs)} coordinates given for a degree-{self.d} field")
        coeffs += [0] * (self.d - len(coeffs))
        return self._elements[self._index_of(coeffs)]

    def parse_element(self, token: str) -> "FieldElement":
        """Parse a file token: an integer, or comma-separated coefficients (low degree first)."""
        try:
            if "," in token:
                return self.element([int(part) for part in token.split(",")])
            return self.element(int(token))
        except (ValueError, DegreeMismatch) as e:
            raise ParseError(f"cannot read {token!r} as an element of {self}: {e}") from e

    def elements(self) -> Tuple["FieldElement", ...]:
        return self._elements

    def nonzero(self) -> Tuple["FieldElement", ...]:
        return self._elements[1:]

    # -- arithmetic -----------------------------------------------------------

    def add(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        if self.d == 1:
            return self._elements[(x.index + y.index) % self.p]
        return self._elements[self._index_of([(a + b) % self.p for a, b in zip(x.coeffs, y.coeffs)])]

    def neg(self, x: "FieldElement") -> "FieldElement":
        if self.d == 1:
            return self._elements[(-x.index) % self.p]
        return self._elements[self._index_of([(-a) % self.p for a in x.coeffs])]

    def sub(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        return self.add(x, self.neg(y))

    def mul(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        if x.index == 0 or y.index == 0:
            return self._elements[0]
        k = (self._log[x.index] + self._log[y.index]) % (self.q - 1)
        return self._elements[self._exp[k]]

    def inv(self, x: "FieldElement") -> "FieldElement":
        if x.index == 0:
            raise DivisionByZero(f"zero has no inverse in {self}")
        return self._elements[self._exp[(-self._log[x.index]) % (self.q - 1)]]

    def div(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        return self.mul(x, self.inv(y))

    def pow(self, x: "FieldElement", exponent: int) -> "FieldElement":
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}; use inv() explicitly")
        if exponent == 0:
            return self.one
        if x.index == 0:
            return self.zero
        k = (self._log[x.index] * exponent) % (self.q - 1)
        return self._elements[self._exp[k]]

    def is_square(self, x: "FieldElement") -> bool:
        """Table lookup for nonzero squares (built on first use)."""
        if self._squares is None:
            squares = frozenset(self.mul(y, y).index for y in self.nonzero())
            object.__setattr__(self, "_squares", squares)
        return x.index in self._squares


def _element_at(field: Field, index: int) -> "FieldElement":
    return field.from_index(index)


@dataclass(frozen=True)
class FieldElement:
    """An element of a Field, as polynomial-basis coordinates."""

    field: Field
    coeffs: Tuple[int, ...]
    index: int = dataclass_field(default=-1, compare=False, repr=False)

    def __post_init__(self):
        if self.index >= 0:
            return
        coeffs = [int(c) % self.field.p for c in self.coeffs]
        if len(coeffs) > self.field.d:
            raise DegreeMismatch(f"{len(coeffs)} coordinates given for {self.field}")
        coeffs += [0] * (self.field.d - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "index", self.field._index_of(coeffs))

    def __reduce__(self):
        return (_element_at, (self.field, self.index))

    def __str__(self) -> str:
        if self.field.d == 1:
            return str(self.coeffs[0])
        terms = []
        for power, c in enumerate(self.coeffs):
            if c:
                variable = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
                terms.append(f"{c if c != 1 or not variable else ''}{variable}")
        return "+".join(reversed(terms)) or "0"

    def to_token(self) -> str:
        """Text-file token for this element (see Field.parse_element)."""
        if self.field.d == 1:
            return str(self.coeffs[0])
        return ",".join(str(c) for c in self.coeffs)

    def __bool__(self) -> bool:
        return self.index != 0

    def is_zero(self) -> bool:
        return self.index == 0

    def is_one(self) -> bool:
        return self.index == 1

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.div(other, self)

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, exponent: int):
        return self.field.pow(self, exponent)

    def inverse(self) -> "FieldElement":
        return self.field.inv(self)


def field_create(
    p: int,
    d: int = 1,
    modulus: Optional[Sequence[int]] = None,
    max_size: int = DEFAULT_MAX_FIELD_SIZE,
) -> Field:
    """Validated GF(p^d); the modulus is implicit for prime fields."""
    return Field(p, d, tuple(modulus or ()), max_size)


def prime_field(p: int) -> Field:
    return Field(p)


def split_prime_power(q: int) -> Tuple[int, int]:
    """(p, d) with q = p^d for an odd prime power q, else InvalidQ."""
    if not isinstance(q, int) or q < 3:
        raise InvalidQ(f"q = {q!r} is not an odd prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise InvalidQ(f"q = {q} is not a prime power")
    (p, d), = factors.items()
    if p == 2:
        raise InvalidQ(f"q = {q} is even; an odd characteristic is required")
    return int(p), int(d)


def field_for_order(q: int, max_size: int = DEFAULT_MAX_FIELD_SIZE) -> Field:
    """The field with q elements for an odd prime power q."""
    p, d = split_prime_power(q)
    return Field(p, d, find_irreducible(p, d), max_size)


def parse_field_spec(text: str, max_size: int = DEFAULT_MAX_FIELD_SIZE) -> Field:
    """Parse "p", "p^d" or "p^d:c0,c1,...,cd" (modulus coefficients low degree first)."""
    text = text.strip()
    head, _, coeff_text = text.partition(":")
    base, _, degree = head.partition("^")
    try:
        p = int(base)
        d = int(degree) if degree else 1
        modulus = tuple(int(c) for c in coeff_text.split(",")) if coeff_text else ()
    except ValueError as e:
        raise ParseError(f"malformed field specification {text!r}") from e
    return Field(p, d, modulus, max_size)


_ARITH_OPS: Dict[str, Callable] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
    "pow": operator.pow,
}


def field_arith(x: FieldElement, y: Union[FieldElement, int, None], op: str) -> FieldElement:
    """Apply one of add, sub, mul, div, pow, neg, inv; y is ignored by the unary ones."""
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op not in _ARITH_OPS:
        raise ValueError(f"unknown field operation {op!r}")
    return _ARITH_OPS[op](x, y)


def quadratic_character(x: FieldElement, use_table: bool = False) -> int:
    """The quadratic character: 0 at zero, 1 on nonzero squares, -1 otherwise.

    Evaluated by the Euler criterion x^((q-1)/2) unless use_table is set.
    """
    if x.is_zero():
        return 0
    if use_table:
        return 1 if x.field.is_square(x) else -1
    return 1 if (x ** ((x.field.q - 1) // 2)).is_one() else -1


def trace(x: FieldElement) -> int:
    """Tr(x) = x + x^p + ... + x^(p^(d-1)), as a residue mod p."""
    field = x.field
    total = x
    term = x
    for _ in range(field.d - 1):
        term = term**field.p
        total = total + term
    return total.coeffs[0]


def count_linear_solutions(
    coefficients: Sequence[ElementLike],
    b: FieldElement,
    budget: Optional[int] = None,
) -> int:
    """Number of alpha in (F_q^*)^l with sum(c_i * alpha_i) = b, by enumeration."""
    field = b.field
    coeffs = [field.element(c) for c in coefficients]
    if any(c.is_zero() for c in coeffs):
        raise ZeroCoefficient("every coefficient must be nonzero")
    ensure_within_budget((field.q - 1) ** len(coeffs), budget, "linear equation solutions")
    count = 0
    for alpha in itertools.product(field.nonzero(), repeat=len(coeffs)):
        total = field.zero
        for c, a in zip(coeffs, alpha):
            total = total + c * a
        if total == b:
            count += 1
    return count

