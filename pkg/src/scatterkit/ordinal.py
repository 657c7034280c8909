"""Exact ordinal arithmetic below epsilon_0, in Cantor normal form.

An ordinal is a tuple of (exponent, coefficient) terms with strictly
decreasing exponents and positive integer coefficients; exponents are
ordinals themselves and the empty tuple is 0.  This representation covers
exactly the ordinals below epsilon_0.  Values are immutable and hashable,
all operations are pure.

The text grammar (whitespace ignored, '#' starts a line comment):

    ordinal := term ( "+" term )*
    term    := "w" power? coeff? | nat
    power   := "^" atom
    atom    := nat | "w" | "(" ordinal ")"
    coeff   := "*" nat
    nat     := [0-9]+

"w^E*k" denotes omega^E * k, "+" is ordinal addition, terms evaluate left
to right.  `parse(format_ordinal(o)) == o` for every valid ordinal.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

from .errors import ParseError

__all__ = [
    "Ordinal",
    "Kind",
    "ZERO",
    "ONE",
    "OMEGA",
    "omega_power",
    "parse",
    "format_ordinal",
    "compare",
    "add",
    "mul_power",
    "divide_by_power",
    "kind",
]

DEFAULT_MAX_DEPTH = 64


class Kind(Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


@functools.total_ordering
@dataclass(frozen=True)
class Ordinal:
    """An ordinal below epsilon_0 as a tuple of CNF terms."""

    terms: tuple[tuple[Ordinal, int], ...] = ()

    def __post_init__(self):
        prev = None
        for term in self.terms:
            exp, coeff = term
            if not isinstance(exp, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {exp!r}")
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff < 1:
                raise ValueError(f"coefficient must be a positive integer, got {coeff!r}")
            if prev is not None and not exp < prev:
                raise ValueError("exponents must be strictly decreasing")
            prev = exp

    @staticmethod
    def from_int(n: int) -> Ordinal:
        if n < 0:
            raise ValueError("ordinals are non-negative")
        if n == 0:
            return ZERO
        return Ordinal(((ZERO, n),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def leading_exponent(self) -> Ordinal:
        if not self.terms:
            raise ValueError("0 has no leading term")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        if not self.terms:
            raise ValueError("0 has no leading term")
        return self.terms[0][1]

    @property
    def smallest_exponent(self) -> Ordinal:
        if not self.terms:
            raise ValueError("0 has no terms")
        return self.terms[-1][0]

    def kind(self) -> Kind:
        if not self.terms:
            return Kind.ZERO
        return Kind.SUCCESSOR if self.terms[-1][0].is_zero else Kind.LIMIT

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # CNF term lists compare lexicographically by (exponent, coefficient),
        # a proper prefix being smaller; this is exactly the ordinal order.
        return self.terms < other.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other) -> Ordinal:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    def __radd__(self, other) -> Ordinal:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, self)

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal(((ONE, 1),))


def _coerce(value) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Ordinal.from_int(value)
    return NotImplemented


def omega_power(exponent: Ordinal | int, coefficient: int = 1) -> Ordinal:
    """omega^exponent * coefficient (0 when the coefficient is 0)."""
    exponent = _coerce(exponent)
    if coefficient == 0:
        return ZERO
    return Ordinal(((exponent, coefficient),))


def compare(a: Ordinal | int, b: Ordinal | int) -> int:
    """-1, 0 or 1 as a is below, equal to or above b in the ordinal order."""
    a, b = _coerce(a), _coerce(b)
    if a == b:
        return 0
    return -1 if a < b else 1


def add(a: Ordinal | int, b: Ordinal | int) -> Ordinal:
    """Ordinal sum: trailing terms of a below b's leading power are absorbed."""
    a, b = _coerce(a), _coerce(b)
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead = b.terms[0][0]
    i = 0
    while i < len(a.terms) and lead < a.terms[i][0]:
        i += 1
    if i < len(a.terms) and a.terms[i][0] == lead:
        merged = (lead, a.terms[i][1] + b.terms[0][1])
        return Ordinal(a.terms[:i] + (merged,) + b.terms[1:])
    return Ordinal(a.terms[:i] + b.terms)


def mul_power(beta: Ordinal | int, q: Ordinal | int) -> Ordinal:
    """omega^beta * q, computed termwise on q's CNF."""
    beta, q = _coerce(beta), _coerce(q)
    terms = []
    for exp, coeff in q.terms:
        terms.append((beta if exp.is_zero else add(beta, exp), coeff))
    return Ordinal(tuple(terms))


def _left_difference(beta: Ordinal, e: Ordinal) -> Ordinal:
    """The unique d with beta + d = e, defined whenever beta <= e."""
    if e < beta:
        raise ValueError("left difference requires beta <= e")
    bt, et = beta.terms, e.terms
    j = 0
    while j < len(bt) and j < len(et) and bt[j] == et[j]:
        j += 1
    if j == len(bt):
        return Ordinal(et[j:])
    be, bc = bt[j]
    ee, ec = et[j]
    if ee == be:
        # e > beta forces ec > bc here
        return Ordinal(((ee, ec - bc),) + et[j + 1 :])
    # ee > be: adding from exponent ee absorbs beta's tail
    return Ordinal(et[j:])


def divide_by_power(gamma: Ordinal | int, beta: Ordinal | int) -> tuple[Ordinal, Ordinal]:
    """The unique (q, r) with gamma = omega^beta * q + r and r < omega^beta."""
    gamma, beta = _coerce(gamma), _coerce(beta)
    if beta.is_zero:
        return gamma, ZERO
    high = []
    i = 0
    for exp, coeff in gamma.terms:
        if exp < beta:
            break
        high.append((_left_difference(beta, exp), coeff))
        i += 1
    return Ordinal(tuple(high)), Ordinal(gamma.terms[i:])


def kind(o: Ordinal | int) -> Kind:
    return _coerce(o).kind()


def format_ordinal(o: Ordinal) -> str:
    """Canonical rendering; omits *1 and ^1, prints the finite term bare."""
    if not o.terms:
        return "0"
    parts = []
    for exp, coeff in o.terms:
        if exp.is_zero:
            parts.append(str(coeff))
            continue
        if exp == ONE:
            s = "w"
        elif exp.is_finite:
            s = f"w^{int(exp)}"
        else:
            s = f"w^({format_ordinal(exp)})"
        if coeff != 1:
            s += f"*{coeff}"
        parts.append(s)
    return " + ".join(parts)


class _Parser:
    def __init__(self, text: str, max_depth: int):
        self.text = text
        self.pos = 0
        self.max_depth = max_depth

    def error(self, message: str) -> ParseError:
        return ParseError(message, position=self.pos)

    def skip(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n:
            c = text[self.pos]
            if c.isspace():
                self.pos += 1
            elif c == "#":
                while self.pos < n and text[self.pos] != "\n":
                    self.pos += 1
            else:
                return

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.error(f"expected {char!r}")
        self.pos += 1

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start : self.pos])

    def ordinal(self, depth: int) -> Ordinal:
        if depth > self.max_depth:
            raise self.error(f"nesting depth exceeds limit of {self.max_depth}")
        value = self.term(depth)
        while self.peek() == "+":
            self.pos += 1
            value = add(value, self.term(depth))
        return value

    def term(self, depth: int) -> Ordinal:
        c = self.peek()
        if c == "w":
            self.pos += 1
            exponent = ONE
            if self.peek() == "^":
                self.pos += 1
                exponent = self.atom(depth + 1)
            coefficient = 1
            if self.peek() == "*":
                self.pos += 1
                coefficient = self.nat()
            return omega_power(exponent, coefficient)
        if c.isdigit():
            return Ordinal.from_int(self.nat())
        raise self.error("expected 'w' or a number")

    def atom(self, depth: int) -> Ordinal:
        if depth > self.max_depth:
            raise self.error(f"nesting depth exceeds limit of {self.max_depth}")
        c = self.peek()
        if c == "(":
            self.pos += 1
            value = self.ordinal(depth)
            self.expect(")")
            return value
        if c == "w":
            self.pos += 1
            return OMEGA
        if c.isdigit():
            return Ordinal.from_int(self.nat())
        raise self.error("expected a number, 'w' or '('")


def parse(text: str, max_depth: int = DEFAULT_MAX_DEPTH) -> Ordinal:
    """Evaluate an ordinal expression to its Cantor normal form."""
    p = _Parser(text, max_depth)
    value = p.ordinal(0)
    p.skip()
    if p.pos != len(text):
        raise p.error("trailing input")
    return value
