"""The dual R-motivic Steenrod algebra as a Hopf algebroid over F2[t, r].

As a ring this is the commutative algebra

    F2[t, r][T0, T1, ..., X1, X2, ...] / (Tn^2 = t X(n+1) + r T0 X(n+1) + r T(n+1))

where ``Tn`` is tau_n and ``Xn`` is xi_n.  Elements are kept as F2-linear
combinations of ``t^a r^b * mono`` with ``mono`` a normal-form monomial
(every ``Tn`` exponent at most one).  Coefficients always act through the left
unit; the right unit sends ``t`` to ``t + r T0``.

Tensors over the coefficient ring are stored canonically with every scalar
moved onto the left factor, so that triples ``(coefficient, left, right)`` of a
coefficient monomial and two monic monomials are unique coordinates.
"""

from __future__ import annotations

import os
import re
from functools import lru_cache
from itertools import product as cartesian
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional

from .coefficients import (
    BiDegree,
    INHOMOGENEOUS,
    MRPoly,
    ParseError,
    ZERO_DEGREE,
    monomial_grade,
    render_monomial,
    toggle,
)


def _default_bound() -> int:
    return int(os.environ.get("RMOTIVIC_DEGREE_BOUND", "16"))


DEGREE_BOUND = _default_bound()


class DegreeBoundError(ValueError):
    pass


def check_bound(s: int, bound: Optional[int] = None) -> None:
    limit = DEGREE_BOUND if bound is None else bound
    if s > limit:
        raise DegreeBoundError(f"first grade coordinate {s} exceeds degree bound {limit}")


# --------------------------------------------------------------------------
# monomials


def tau_grade(n: int) -> BiDegree:
    return BiDegree(2 ** (n + 1) - 1, 2**n - 1)


def xi_grade(n: int) -> BiDegree:
    return BiDegree(2 ** (n + 1) - 2, 2**n - 1)


def _strip(r: Iterable[int]) -> tuple[int, ...]:
    r = list(r)
    while r and r[-1] == 0:
        r.pop()
    return tuple(r)


class DualMonomial(NamedTuple):
    """``prod T_i (i in e) * prod X_j^r[j-1]``; ``e`` sorted, ``r`` without trailing zeros."""

    e: tuple[int, ...] = ()
    r: tuple[int, ...] = ()

    @classmethod
    def make(cls, e: Iterable[int] = (), r: Iterable[int] = ()) -> "DualMonomial":
        e = tuple(sorted(e))
        if len(set(e)) != len(e):
            raise ValueError("repeated tau index; use normalize for squares")
        return cls(e, _strip(r))

    @property
    def grade(self) -> BiDegree:
        s = w = 0
        for n in self.e:
            g = tau_grade(n)
            s += g.s
            w += g.w
        for j, k in enumerate(self.r, start=1):
            g = xi_grade(j)
            s += k * g.s
            w += k * g.w
        return BiDegree(s, w)

    def xi_exponent(self, j: int) -> int:
        return self.r[j - 1] if 0 < j <= len(self.r) else 0

    def times_xi(self, j: int, k: int = 1) -> "DualMonomial":
        r = list(self.r) + [0] * max(0, j - len(self.r))
        r[j - 1] += k
        return DualMonomial(self.e, tuple(r))

    def __str__(self) -> str:
        return render_dual_monomial(self)


ONE_MONO = DualMonomial()


def _xi_sum(r1: tuple[int, ...], r2: tuple[int, ...]) -> tuple[int, ...]:
    if len(r1) < len(r2):
        r1, r2 = r2, r1
    out = list(r1)
    for i, k in enumerate(r2):
        out[i] += k
    return tuple(out)


def _shift(terms: Iterable[tuple], a: int, b: int) -> Iterator[tuple]:
    if a == 0 and b == 0:
        yield from terms
        return
    for t in terms:
        yield (t[0] + a, t[1] + b) + t[2:]


@lru_cache(maxsize=None)
def _mul_tau(n: int, mono: DualMonomial) -> frozenset:
    """``T_n * mono`` in normal form, as a set of ``(a, b, mono)`` triples."""
    if n not in mono.e:
        return frozenset([(0, 0, DualMonomial(tuple(sorted(mono.e + (n,))), mono.r))])
    rest = DualMonomial(tuple(i for i in mono.e if i != n), mono.r)
    with_xi = rest.times_xi(n + 1)
    acc: set = set()
    toggle(acc, (1, 0, with_xi))
    for t in _shift(_mul_tau(0, with_xi), 0, 1):
        toggle(acc, t)
    for t in _shift(_mul_tau(n + 1, rest), 0, 1):
        toggle(acc, t)
    return frozenset(acc)


@lru_cache(maxsize=None)
def mono_mul(m1: DualMonomial, m2: DualMonomial) -> frozenset:
    """Product of two normal monomials, reduced lowest tau index first."""
    if len(m1.e) < len(m2.e):
        m1, m2 = m2, m1
    current = {(0, 0, DualMonomial(m1.e, _xi_sum(m1.r, m2.r)))}
    for n in m2.e:
        nxt: set = set()
        for a, b, m in current:
            for t in _shift(_mul_tau(n, m), a, b):
                toggle(nxt, t)
        current = nxt
    return frozenset(current)


# --------------------------------------------------------------------------
# elements


class DualElement:
    """An element of the dual Steenrod algebra: a set of ``(a, b, mono)`` triples."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple] = ()):
        acc: set = set()
        for t in terms:
            toggle(acc, t)
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset) -> "DualElement":
        x = object.__new__(cls)
        x.terms = terms
        x._hash = None
        return x

    @classmethod
    def monomial(cls, mono: DualMonomial, coeff: Optional[MRPoly] = None) -> "DualElement":
        if coeff is None:
            return cls._raw(frozenset([(0, 0, mono)]))
        return cls._raw(frozenset((a, b, mono) for a, b in coeff.terms))

    @classmethod
    def zero(cls) -> "DualElement":
        return cls._raw(frozenset())

    @classmethod
    def one(cls) -> "DualElement":
        return cls.monomial(ONE_MONO)

    def __add__(self, other: "DualElement") -> "DualElement":
        return DualElement._raw(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other) -> "DualElement":
        if isinstance(other, MRPoly):
            return scale(other, self)
        return ds_mul(self, other)

    def __rmul__(self, other) -> "DualElement":
        if isinstance(other, MRPoly):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, n: int) -> "DualElement":
        out = DualElement.one()
        for _ in range(n):
            out = ds_mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, DualElement) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficients(self) -> dict[DualMonomial, MRPoly]:
        """Left coefficients in the monomial basis."""
        out: dict[DualMonomial, set] = {}
        for a, b, m in self.terms:
            out.setdefault(m, set()).add((a, b))
        return {m: MRPoly(c) for m, c in out.items()}

    def coefficient(self, mono: DualMonomial) -> MRPoly:
        return MRPoly((a, b) for a, b, m in self.terms if m == mono)

    def grade(self):
        grades = {monomial_grade(a, b) + m.grade for a, b, m in self.terms}
        if not grades:
            return ZERO_DEGREE
        if len(grades) > 1:
            return INHOMOGENEOUS
        return grades.pop()

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"DualElement({render(self)!r})"


def scale(p: MRPoly, x: DualElement) -> DualElement:
    acc: set = set()
    for a, b in p.terms:
        for t in _shift(x.terms, a, b):
            toggle(acc, t)
    return DualElement._raw(frozenset(acc))


def tau_gen(n: int) -> DualElement:
    return DualElement.monomial(DualMonomial((n,), ()))


def xi_gen(n: int) -> DualElement:
    if n == 0:
        return DualElement.one()
    return DualElement.monomial(ONE_MONO.times_xi(n))


def coeff_element(p: MRPoly) -> DualElement:
    return DualElement.monomial(ONE_MONO, p)


def ds_mul(x: DualElement, y: DualElement) -> DualElement:
    acc: set = set()
    for a1, b1, m1 in x.terms:
        for a2, b2, m2 in y.terms:
            for t in _shift(mono_mul(m1, m2), a1 + a2, b1 + b2):
                toggle(acc, t)
    return DualElement._raw(frozenset(acc))


def normalize(
    coeff: Optional[MRPoly] = None,
    taus: Iterable[int] | Mapping[int, int] = (),
    xis: Mapping[int, int] | Iterable[int] = (),
) -> DualElement:
    """Reduce a formal product ``coeff * prod T_n^k * prod X_j^k`` to normal form.

    ``taus``/``xis`` are either exponent maps or lists of indices (repeats
    allowed).  Squares are rewritten lowest index first until none remain.
    """
    tau_exps = _as_exponents(taus)
    xi_exps = _as_exponents(xis)
    r = [0] * (max(xi_exps, default=0))
    for j, k in xi_exps.items():
        if j < 1:
            raise ValueError("xi indices start at 1")
        r[j - 1] += k
    current = {(0, 0, DualMonomial((), _strip(r)))}
    for n in sorted(tau_exps):
        for _ in range(tau_exps[n]):
            nxt: set = set()
            for a, b, m in current:
                for t in _shift(_mul_tau(n, m), a, b):
                    toggle(nxt, t)
            current = nxt
    out = DualElement._raw(frozenset(current))
    return scale(coeff, out) if coeff is not None else out


def _as_exponents(spec) -> dict[int, int]:
    if isinstance(spec, Mapping):
        return {int(k): int(v) for k, v in spec.items() if v}
    out: dict[int, int] = {}
    for i in spec:
        out[i] = out.get(i, 0) + 1
    return out


RawTerm = tuple[int, int, tuple[int, ...], tuple[int, ...]]


def rewrite(
    raw: Iterable[RawTerm],
    choose: Callable[[list[int]], int] = min,
) -> DualElement:
    """Rewrite raw terms ``(a, b, tau_exps, xi_exps)`` by the defining relation.

    ``choose`` picks which squared tau index to rewrite next, so arbitrary
    rewrite orders can be compared; ``min`` is the canonical strategy.
    Each step lowers the total tau exponent, so this terminates.
    """
    work = list(raw)
    done: set = set()
    while work:
        a, b, te, xe = work.pop()
        squares = [n for n, k in enumerate(te) if k >= 2]
        if not squares:
            mono = DualMonomial(tuple(n for n, k in enumerate(te) if k), _strip(xe))
            toggle(done, (a, b, mono))
            continue
        n = choose(squares)
        te2 = list(te) + [0] * max(0, n + 2 - len(te))
        te2[n] -= 2
        xe2 = list(xe) + [0] * max(0, n + 1 - len(xe))
        xe2[n] += 1  # xi_{n+1} sits at offset n
        base = (tuple(te2), tuple(xe2))
        work.append((a + 1, b, base[0], base[1]))
        t0 = list(base[0])
        t0[0] += 1
        work.append((a, b + 1, tuple(t0), base[1]))
        tn = list(te2)
        tn[n + 1] += 1
        work.append((a, b + 1, tuple(tn), tuple(xe)))
    return DualElement._raw(frozenset(done))


# --------------------------------------------------------------------------
# units, counit


@lru_cache(maxsize=None)
def _eta_r_tau_power(k: int) -> DualElement:
    if k == 0:
        return DualElement.one()
    base = DualElement([(1, 0, ONE_MONO), (0, 1, DualMonomial((0,), ()))])
    return ds_mul(_eta_r_tau_power(k - 1), base)


def eta_L(m: MRPoly) -> DualElement:
    return coeff_element(m)


def eta_R(m: MRPoly) -> DualElement:
    acc: set = set()
    for a, b in m.terms:
        for t in _shift(_eta_r_tau_power(a).terms, 0, b):
            toggle(acc, t)
    return DualElement._raw(frozenset(acc))


@lru_cache(maxsize=None)
def mono_times_eta_r_tau(mono: DualMonomial, k: int) -> frozenset:
    """``mono * eta_R(t^k)`` as triples."""
    if k == 0:
        return frozenset([(0, 0, mono)])
    return ds_mul(DualElement.monomial(mono), _eta_r_tau_power(k)).terms


def counit(x: DualElement) -> MRPoly:
    return MRPoly((a, b) for a, b, m in x.terms if m == ONE_MONO)


# --------------------------------------------------------------------------
# tensors


class BalancedTensor:
    """Element of A (x)_M A as ``(a, b, left, right)`` with scalars on the left."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple] = ()):
        acc: set = set()
        for t in terms:
            toggle(acc, t)
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset) -> "BalancedTensor":
        x = object.__new__(cls)
        x.terms = terms
        x._hash = None
        return x

    def __add__(self, other: "BalancedTensor") -> "BalancedTensor":
        return BalancedTensor._raw(self.terms ^ other.terms)

    def __mul__(self, other: "BalancedTensor") -> "BalancedTensor":
        return tensor_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, BalancedTensor) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def grade(self):
        grades = {monomial_grade(a, b) + l.grade + r.grade for a, b, l, r in self.terms}
        if not grades:
            return ZERO_DEGREE
        if len(grades) > 1:
            return INHOMOGENEOUS
        return grades.pop()

    def pairs(self) -> dict[DualMonomial, DualElement]:
        """Group as ``sum_r left_r (x) r`` over monic right monomials ``r``."""
        out: dict[DualMonomial, set] = {}
        for a, b, l, r in self.terms:
            out.setdefault(r, set()).add((a, b, l))
        return {r: DualElement(ts) for r, ts in out.items()}

    def __str__(self) -> str:
        return render_tensor(self)

    def __repr__(self) -> str:
        return f"BalancedTensor({render_tensor(self)!r})"


def _move_left(a: int, b: int, left: DualMonomial, c: int, d: int) -> Iterator[tuple]:
    """Terms of ``t^a r^b left * eta_R(t^c r^d)`` as ``(a', b', mono)``."""
    for e, f, m in mono_times_eta_r_tau(left, c):
        yield (a + e, b + d + f, m)


def tensor_balance(raw: Iterable[tuple[DualElement, DualElement]]) -> BalancedTensor:
    """Canonicalize ``sum x_i (x) y_i``: scalars of ``y_i`` move left through eta_R."""
    acc: set = set()
    for x, y in raw:
        for c, d, r in y.terms:
            for a, b, l in x.terms:
                for a2, b2, m in _move_left(a, b, l, c, d):
                    toggle(acc, (a2, b2, m, r))
    return BalancedTensor._raw(frozenset(acc))


def tensor_mul(x: BalancedTensor, y: BalancedTensor) -> BalancedTensor:
    acc: set = set()
    for a1, b1, l1, r1 in x.terms:
        for a2, b2, l2, r2 in y.terms:
            rights = mono_mul(r1, r2)
            lefts = mono_mul(l1, l2)
            for c, d, r in rights:
                for a, b, l in lefts:
                    for t in _move_left(a1 + a2 + a, b1 + b2 + b, l, c, d):
                        toggle(acc, t + (r,))
    return BalancedTensor._raw(frozenset(acc))


def _tensor_of(left: DualElement, right: DualElement) -> BalancedTensor:
    return tensor_balance([(left, right)])


TENSOR_ONE = BalancedTensor._raw(frozenset([(0, 0, ONE_MONO, ONE_MONO)]))


# --------------------------------------------------------------------------
# coproduct


@lru_cache(maxsize=None)
def _coproduct_xi(n: int) -> BalancedTensor:
    out = BalancedTensor()
    for i in range(n + 1):
        out = out + _tensor_of(xi_gen(n - i) ** (2**i), xi_gen(i))
    return out


@lru_cache(maxsize=None)
def _coproduct_tau(n: int) -> BalancedTensor:
    out = _tensor_of(tau_gen(n), DualElement.one())
    for i in range(n + 1):
        out = out + _tensor_of(xi_gen(n - i) ** (2**i), tau_gen(i))
    return out


def coproduct_tau_swapped(n: int) -> BalancedTensor:
    """The variant ``T_n (x) 1 + sum X_{n-i}^{2^i} (x) T_{n-i}``, kept to show it is not graded."""
    out = _tensor_of(tau_gen(n), DualElement.one())
    for i in range(n + 1):
        out = out + _tensor_of(xi_gen(n - i) ** (2**i), tau_gen(n - i))
    return out


def coproduct_reading_check(ns: Iterable[int] = (1, 2)) -> dict[str, bool]:
    """Which reading of the tau coproduct is homogeneous on the given indices."""
    return {
        "swapped T_(n-i)": all(coproduct_tau_swapped(n).grade() != INHOMOGENEOUS for n in ns),
        "standard T_i": all(_coproduct_tau(n).grade() != INHOMOGENEOUS for n in ns),
    }


@lru_cache(maxsize=None)
def mono_coproduct(mono: DualMonomial) -> BalancedTensor:
    if mono == ONE_MONO:
        return TENSOR_ONE
    if mono.e:
        n = mono.e[-1]
        rest = DualMonomial(mono.e[:-1], mono.r)
        return tensor_mul(mono_coproduct(rest), _coproduct_tau(n))
    j = len(mono.r)
    rest = DualMonomial((), _strip(mono.r[:-1] + (mono.r[-1] - 1,)))
    return tensor_mul(mono_coproduct(rest), _coproduct_xi(j))


def coproduct(x: DualElement) -> BalancedTensor:
    acc: set = set()
    for a, b, m in x.terms:
        for t in _shift(mono_coproduct(m).terms, a, b):
            toggle(acc, t)
    return BalancedTensor._raw(frozenset(acc))


# --------------------------------------------------------------------------
# conjugation


@lru_cache(maxsize=None)
def _conj_xi(n: int) -> DualElement:
    if n == 0:
        return DualElement.one()
    out = DualElement()
    for i in range(n):
        out = out + ds_mul(xi_gen(n - i) ** (2**i), _conj_xi(i))
    return out


@lru_cache(maxsize=None)
def _conj_tau(n: int) -> DualElement:
    out = tau_gen(n)
    for i in range(n):
        out = out + ds_mul(xi_gen(n - i) ** (2**i), _conj_tau(i))
    return out


@lru_cache(maxsize=None)
def mono_conjugate(mono: DualMonomial) -> DualElement:
    if mono == ONE_MONO:
        return DualElement.one()
    if mono.e:
        n = mono.e[-1]
        return ds_mul(mono_conjugate(DualMonomial(mono.e[:-1], mono.r)), _conj_tau(n))
    j = len(mono.r)
    rest = DualMonomial((), _strip(mono.r[:-1] + (mono.r[-1] - 1,)))
    return ds_mul(mono_conjugate(rest), _conj_xi(j))


def conjugate(x: DualElement) -> DualElement:
    """Conjugation; scalars transform by the right unit."""
    acc: set = set()
    for a, b, m in x.terms:
        img = ds_mul(eta_R(MRPoly.monomial(a, b)), mono_conjugate(m))
        for t in img.terms:
            toggle(acc, t)
    return DualElement._raw(frozenset(acc))


# --------------------------------------------------------------------------
# enumeration


def _generators(max_s: int) -> list[tuple[str, int, BiDegree]]:
    gens = []
    n = 0
    while tau_grade(n).s <= max_s:
        gens.append(("T", n, tau_grade(n)))
        n += 1
    n = 1
    while xi_grade(n).s <= max_s:
        gens.append(("X", n, xi_grade(n)))
        n += 1
    return gens


@lru_cache(maxsize=None)
def monomials_up_to(max_s: int) -> tuple[DualMonomial, ...]:
    """All normal monomials with first grade coordinate at most ``max_s``."""
    gens = _generators(max_s)
    found: list[DualMonomial] = []

    def walk(i: int, s: int, e: tuple, r: list) -> None:
        if i == len(gens):
            found.append(DualMonomial(e, _strip(r)))
            return
        kind, n, g = gens[i]
        if kind == "T":
            walk(i + 1, s, e, r)
            if s + g.s <= max_s:
                walk(i + 1, s + g.s, e + (n,), r)
        else:
            k = 0
            while s + k * g.s <= max_s:
                r2 = r + [0] * max(0, n - len(r))
                r2[n - 1] = k
                walk(i + 1, s + k * g.s, e, r2)
                k += 1

    walk(0, 0, (), [])
    return tuple(sorted(set(found), key=lambda m: (m.grade, m.e, m.r)))


def monomial_basis(g: BiDegree, bound: Optional[int] = None) -> list[DualMonomial]:
    """Normal monomials of exactly grade ``g`` in a fixed order."""
    g = BiDegree(*g)
    check_bound(g.s, bound)
    if g.s < 0:
        return []
    return [m for m in monomials_up_to(g.s) if m.grade == g]


# --------------------------------------------------------------------------
# text


def render_dual_monomial(m: DualMonomial) -> str:
    parts = [f"T{n}" for n in m.e]
    for j, k in enumerate(m.r, start=1):
        if k == 1:
            parts.append(f"X{j}")
        elif k > 1:
            parts.append(f"X{j}^{k}")
    return " ".join(parts) if parts else "1"


def _mono_key(m: DualMonomial):
    return (m.e, m.r)


def _render_term(a: int, b: int, m: DualMonomial) -> str:
    c = render_monomial(a, b)
    if m == ONE_MONO:
        return c
    body = render_dual_monomial(m)
    return body if c == "1" else f"{c} {body}"


def render(x: DualElement) -> str:
    if not x.terms:
        return "0"
    ordered = sorted(x.terms, key=lambda t: (t[1], t[0], _mono_key(t[2])))
    return " + ".join(_render_term(*t) for t in ordered)


def render_tensor(x: BalancedTensor) -> str:
    if not x.terms:
        return "0"
    ordered = sorted(
        x.terms,
        key=lambda t: (t[1], t[0], -t[2].grade.s, -t[2].grade.w, _mono_key(t[2]), _mono_key(t[3])),
    )
    return " + ".join(f"{_render_term(a, b, l)} | {render_dual_monomial(r)}" for a, b, l, r in ordered)


_TOKEN = re.compile(
    r"\s*(?:(?P<gen>[TX])(?P<idx>\d+)(?:\^(?P<gexp>\d+))?"
    r"|(?P<var>[tr])(?:\^(?P<vexp>\d+))?|(?P<num>[01])(?![\d])|(?P<plus>\+))"
)


def parse(text: str) -> DualElement:
    """Parse e.g. ``"t X1 + r T0 X1 + r T1"``; juxtaposition multiplies."""
    total = DualElement()
    term: Optional[DualElement] = None
    pos = 0
    while True:
        stripped = text[pos:].lstrip()
        if not stripped:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", len(text) - len(stripped), text)
        if m.group("plus"):
            if term is None:
                raise ParseError("missing term before '+'", m.start("plus"), text)
            total = total + term
            term = None
        else:
            if m.group("gen"):
                idx = int(m.group("idx"))
                k = int(m.group("gexp") or 1)
                if m.group("gen") == "T":
                    factor = normalize(taus={idx: k})
                else:
                    if idx < 1:
                        raise ParseError("xi indices start at 1", m.start("idx"), text)
                    factor = normalize(xis={idx: k})
            elif m.group("var"):
                k = int(m.group("vexp") or 1)
                factor = coeff_element(MRPoly.monomial(k, 0) if m.group("var") == "t" else MRPoly.monomial(0, k))
            else:
                factor = DualElement.one() if m.group("num") == "1" else DualElement.zero()
            term = factor if term is None else ds_mul(term, factor)
        pos = m.end()
    if term is None:
        raise ParseError("empty expression" if not text.strip() else "dangling '+'", len(text), text)
    return total + term


def parse_tensor(text: str) -> BalancedTensor:
    """Parse ``"a | b + c | d"`` where each side is a single product term."""
    pieces = []
    for chunk in _split_top(text):
        if "|" not in chunk:
            raise ParseError("tensor term needs '|'", text.find(chunk), text)
        left, right = chunk.split("|", 1)
        pieces.append((parse(left), parse(right)))
    return tensor_balance(pieces)


def _split_top(text: str) -> list[str]:
    return [c for c in (s.strip() for s in text.split("+")) if c] if text.strip() != "0" else []
