"""Arithmetic in the coefficient ring F2[t, r] of the R-motivic point.

``t`` stands for tau and ``r`` for rho.  Elements are finite sets of exponent
pairs ``(a, b)`` meaning ``t^a r^b``; addition is symmetric difference.

All grades in this package are homological bidegrees ``(s, w)``:
``t`` sits in ``(0, -1)`` and ``r`` in ``(-1, -1)``.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Optional


class BiDegree(NamedTuple):
    s: int
    w: int

    def __add__(self, other):  # type: ignore[override]
        return BiDegree(self.s + other.s, self.w + other.w)

    def __sub__(self, other):
        return BiDegree(self.s - other.s, self.w - other.w)

    def __neg__(self):
        return BiDegree(-self.s, -self.w)


ZERO_DEGREE = BiDegree(0, 0)


class ParseError(ValueError):
    """Raised on malformed element text; ``pos`` is the offending offset."""

    def __init__(self, message: str, pos: int = 0, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


def monomial_grade(a: int, b: int) -> BiDegree:
    return BiDegree(-b, -a - b)


def coefficient_of_grade(g: BiDegree) -> Optional[tuple[int, int]]:
    """The unique exponent pair ``(a, b)`` with ``t^a r^b`` in grade g, if any."""
    b = -g.s
    a = -g.w - b
    if a < 0 or b < 0:
        return None
    return (a, b)


def toggle(acc: set, key) -> None:
    if key in acc:
        acc.remove(key)
    else:
        acc.add(key)


class MRPoly:
    """An element of F2[t, r]."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple[int, int]] = ()):
        acc: set = set()
        for term in terms:
            toggle(acc, term)
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset) -> "MRPoly":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0) -> "MRPoly":
        return cls._raw(frozenset([(a, b)]))

    @classmethod
    def zero(cls) -> "MRPoly":
        return cls._raw(frozenset())

    @classmethod
    def one(cls) -> "MRPoly":
        return cls.monomial(0, 0)

    def __add__(self, other: "MRPoly") -> "MRPoly":
        return MRPoly._raw(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "MRPoly") -> "MRPoly":
        acc: set = set()
        for a1, b1 in self.terms:
            for a2, b2 in other.terms:
                toggle(acc, (a1 + a2, b1 + b2))
        return MRPoly._raw(frozenset(acc))

    def __pow__(self, n: int) -> "MRPoly":
        out = MRPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other in (0, 1):
            other = MRPoly.zero() if other == 0 else MRPoly.one()
        return isinstance(other, MRPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms, key=_term_key))

    def __len__(self) -> int:
        return len(self.terms)

    def grade(self):
        return mr_grade(self)

    def is_homogeneous(self) -> bool:
        return mr_grade(self) != INHOMOGENEOUS

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MRPoly({render(self)!r})"


INHOMOGENEOUS = "inhomogeneous"

T = MRPoly.monomial(1, 0)
R = MRPoly.monomial(0, 1)


def mr_add(p: MRPoly, q: MRPoly) -> MRPoly:
    return p + q


def mr_mul(p: MRPoly, q: MRPoly) -> MRPoly:
    return p * q


def mr_grade(p: MRPoly):
    """Common grade of all terms, ``(0, 0)`` for zero, else ``INHOMOGENEOUS``."""
    grades = {monomial_grade(a, b) for a, b in p.terms}
    if not grades:
        return ZERO_DEGREE
    if len(grades) > 1:
        return INHOMOGENEOUS
    return grades.pop()


def _term_key(term: tuple[int, int]):
    a, b = term
    return (a + b, b, a)


def render_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("t" if a == 1 else f"t^{a}")
    if b:
        parts.append("r" if b == 1 else f"r^{b}")
    return " ".join(parts) if parts else "1"


def render(p: MRPoly) -> str:
    if not p.terms:
        return "0"
    return " + ".join(render_monomial(a, b) for a, b in sorted(p.terms, key=_term_key))


_COEFF_TOKEN = re.compile(r"\s*(?:(?P<var>[tr])(?:\^(?P<exp>\d+))?|(?P<num>[01])|(?P<plus>\+))")


def parse(text: str) -> MRPoly:
    """Parse ``t^a r^b`` monomials joined by ``+``; ``0`` and ``1`` allowed."""
    pos = 0
    acc: set = set()
    a = b = 0
    seen = False
    expect_term = True
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _COEFF_TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", pos + len(text[pos:]) - len(text[pos:].lstrip()), text)
        if m.group("plus"):
            if expect_term:
                raise ParseError("missing term before '+'", m.start("plus"), text)
            if seen is True:
                toggle(acc, (a, b))
            a = b = 0
            seen = False
            expect_term = True
        elif m.group("num"):
            if seen:
                raise ParseError("constant must stand alone", m.start("num"), text)
            if m.group("num") == "1":
                seen = True
            else:
                seen = "zero"
            expect_term = False
        else:
            if seen == "zero":
                raise ParseError("constant must stand alone", m.start("var"), text)
            k = int(m.group("exp") or 1)
            if m.group("var") == "t":
                a += k
            else:
                b += k
            seen = True
            expect_term = False
        pos = m.end()
    if expect_term:
        raise ParseError("empty expression" if not text.strip() else "dangling '+'", len(text), text)
    if seen is True:
        toggle(acc, (a, b))
    return MRPoly._raw(frozenset(acc))
