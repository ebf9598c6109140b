"""Finite free modules over F2[t, r] with a Steenrod action or a dual coaction.

Module basis grades are stored homologically: a class written ``x_{i,j}``
(cohomological bidegree ``(i, j)``) has stored grade ``(-i, -j)``.  JSON files
carry cohomological degrees and are converted on load and dump.

A coaction is kept as ``psi(n) = sum_k a_k (x) n_k`` with every scalar pushed
into the left factor ``a_k``; over a free module those ``a_k`` are unique.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Union

from .coefficients import (
    BiDegree,
    INHOMOGENEOUS,
    MRPoly,
    R,
    T,
    ZERO_DEGREE,
    coefficient_of_grade,
    monomial_grade,
    render_monomial,
    toggle,
)
from . import coefficients, dual, milnor
from .dual import DualElement, DualMonomial, ONE_MONO
from .milnor import GENERATOR_MONOMIALS, GENERATORS, SteenrodElt


class ModuleError(ValueError):
    """Malformed or inconsistent module data; names the basis element at fault."""


class UnsupportedDegreeError(ModuleError):
    pass


def hat(name: str) -> str:
    """Name of the dual basis element: ``x10`` becomes ``xh10``."""
    return name[:1] + "h" + name[1:]


class ModuleElement:
    """A finite sum of ``t^a r^b * basis`` terms, stored as ``(a, b, name)``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple] = ()):
        acc: set = set()
        for t in terms:
            toggle(acc, t)
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset) -> "ModuleElement":
        x = object.__new__(cls)
        x.terms = terms
        x._hash = None
        return x

    @classmethod
    def basis(cls, name: str, coeff: Optional[MRPoly] = None) -> "ModuleElement":
        if coeff is None:
            return cls._raw(frozenset([(0, 0, name)]))
        return cls._raw(frozenset((a, b, name) for a, b in coeff.terms))

    @classmethod
    def zero(cls) -> "ModuleElement":
        return cls._raw(frozenset())

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement._raw(self.terms ^ other.terms)

    __sub__ = __add__

    def __rmul__(self, other):
        if isinstance(other, MRPoly):
            return scale(other, self)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleElement) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficients(self) -> dict[str, MRPoly]:
        out: dict[str, set] = {}
        for a, b, n in self.terms:
            out.setdefault(n, set()).add((a, b))
        return {n: MRPoly(c) for n, c in out.items()}

    def coefficient(self, name: str) -> MRPoly:
        return MRPoly((a, b) for a, b, n in self.terms if n == name)

    def rename(self, mapping: Mapping[str, str]) -> "ModuleElement":
        return ModuleElement._raw(frozenset((a, b, mapping[n]) for a, b, n in self.terms))

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"ModuleElement({render_element(self)!r})"


def scale(p: MRPoly, x: ModuleElement) -> ModuleElement:
    acc: set = set()
    for a, b in p.terms:
        for c, d, n in x.terms:
            toggle(acc, (a + c, b + d, n))
    return ModuleElement._raw(frozenset(acc))


def render_element(x: ModuleElement, order: Optional[Mapping[str, int]] = None) -> str:
    if not x.terms:
        return "0"
    pos = order or {}
    ordered = sorted(x.terms, key=lambda t: (pos.get(t[2], 0), t[2], t[1], t[0]))
    out = []
    for a, b, n in ordered:
        c = render_monomial(a, b)
        out.append(n if c == "1" else f"{c} {n}")
    return " + ".join(out)


def _basis_dict(basis) -> dict[str, BiDegree]:
    out: dict[str, BiDegree] = {}
    for name, g in basis:
        if name in out:
            raise ModuleError(f"duplicate basis element {name!r}")
        out[name] = BiDegree(*g)
    return out


class FreeModule:
    """A free module with the actions of Sq1, Sq2, Sq4, Sq8 on its basis.

    ``basis`` is a list of ``(name, homological grade)``.  Other operations act
    through their tabulated Sq-word expressions, with scalars commuted past
    operations by the right twist.
    """

    def __init__(self, basis, action: Optional[Mapping[str, Mapping[str, ModuleElement]]] = None):
        self.basis: list[tuple[str, BiDegree]] = [(n, BiDegree(*g)) for n, g in basis]
        self._grades = _basis_dict(self.basis)
        self.action: dict[str, dict[str, ModuleElement]] = {g: {} for g in GENERATORS}
        for gen, table in (action or {}).items():
            if gen not in GENERATOR_MONOMIALS:
                raise ModuleError(f"unknown generator {gen!r}")
            for name, value in table.items():
                if name not in self._grades:
                    raise ModuleError(f"action of {gen} given on unknown basis element {name!r}")
                if value:
                    self.action[gen][name] = value
        self._order = {n: i for i, (n, _) in enumerate(self.basis)}
        self._cache: dict = {}

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.basis]

    def grade_of(self, name: str) -> BiDegree:
        return self._grades[name]

    def element_grade(self, x: ModuleElement):
        grades = {self._grades[n] + monomial_grade(a, b) for a, b, n in x.terms}
        if not grades:
            return ZERO_DEGREE
        if len(grades) > 1:
            return INHOMOGENEOUS
        return grades.pop()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeModule)
            and self.basis == other.basis
            and self.action == other.action
        )

    def __hash__(self):
        return id(self)

    def validate(self) -> None:
        for gen, table in self.action.items():
            d = milnor.generator(gen).grade()
            for name, value in table.items():
                for n in value.coefficients():
                    if n not in self._grades:
                        raise ModuleError(f"{gen} {name} mentions unknown basis element {n!r}")
                g = self.element_grade(value)
                if g != self._grades[name] - d:
                    raise ModuleError(f"{gen} {name} = {value} is not in the expected grade")
        for name in self.names:
            sq1sq1 = self.act_generator("Sq1", self.act_generator("Sq1", ModuleElement.basis(name)))
            if sq1sq1:
                raise ModuleError(f"Sq1 Sq1 {name} = {sq1sq1} is nonzero")

    # -- acting

    def act(self, phi: SteenrodElt, x: ModuleElement) -> ModuleElement:
        acc: set = set()
        for c, d, mono in phi.terms:
            for a, b, name in x.terms:
                for t in self._act_basis_scaled(mono, a, b, name).terms:
                    toggle(acc, (t[0] + c, t[1] + d, t[2]))
        return ModuleElement._raw(frozenset(acc))

    def act_generator(self, gen: str, x: ModuleElement) -> ModuleElement:
        return self.act(milnor.generator(gen), x)

    def _act_basis_scaled(self, mono: DualMonomial, a: int, b: int, name: str) -> ModuleElement:
        """``rho(mono) (t^a r^b name)``."""
        key = ("scaled", mono, a, b, name)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if a == 0 and b == 0:
            out = self.act_basis(mono, name)
        else:
            # r is central, so only the t power needs twisting
            twisted = milnor.right_twist(SteenrodElt.basis(mono), MRPoly.monomial(a, 0))
            acc: set = set()
            for c, d, m2 in twisted.terms:
                for t in self.act_basis(m2, name).terms:
                    toggle(acc, (t[0] + c, t[1] + d + b, t[2]))
            out = ModuleElement._raw(frozenset(acc))
        self._cache[key] = out
        return out

    def act_basis(self, mono: DualMonomial, name: str) -> ModuleElement:
        """``rho(mono)`` applied to a basis element."""
        key = ("basis", mono, name)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if mono == ONE_MONO:
            out = ModuleElement.basis(name)
        elif not self._reachable(self._grades[name] - mono.grade):
            out = ModuleElement.zero()
        else:
            gen = _generator_name(mono)
            if gen is not None:
                out = self.action[gen].get(name, ModuleElement.zero())
            else:
                expr = milnor.g_expression_for(mono)
                if expr is None:
                    raise UnsupportedDegreeError(
                        f"{milnor.milnor_name(mono)} acting on {name!r} has no tabulated Sq-word expression"
                    )
                out = ModuleElement.zero()
                for c, word in expr.terms:
                    x = ModuleElement.basis(name)
                    for letter in reversed(word):
                        x = self.act_generator(letter, x)
                    out = out + scale(c, x)
        self._cache[key] = out
        return out

    def _reachable(self, g: BiDegree) -> bool:
        """Whether some scalar multiple of a basis element sits in grade g."""
        return any(coefficient_of_grade(g - h) is not None for h in self._grades.values())

    def render_action(self) -> list[str]:
        lines = []
        for gen in GENERATORS:
            for name in self.names:
                v = self.action[gen].get(name)
                if v:
                    lines.append(f"{gen} {name} = {render_element(v, self._order)}")
        return lines


def _generator_name(mono: DualMonomial) -> Optional[str]:
    for g, m in GENERATOR_MONOMIALS.items():
        if m == mono:
            return g
    return None


@dataclass
class Coaction:
    """``psi(n) = sum_k a[n][k] (x) k`` with scalars gathered on the left factor."""

    basis: list[tuple[str, BiDegree]]
    psi: dict[str, dict[str, DualElement]] = field(default_factory=dict)

    def __post_init__(self):
        self.basis = [(n, BiDegree(*g)) for n, g in self.basis]
        self._grades = _basis_dict(self.basis)
        clean: dict[str, dict[str, DualElement]] = {}
        for n in self.names:
            row = {k: a for k, a in self.psi.get(n, {}).items() if a}
            for k in row:
                if k not in self._grades:
                    raise ModuleError(f"coaction of {n!r} mentions unknown basis element {k!r}")
            clean[n] = row
        for n in self.psi:
            if n not in self._grades:
                raise ModuleError(f"coaction given on unknown basis element {n!r}")
        self.psi = clean

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.basis]

    def grade_of(self, name: str) -> BiDegree:
        return self._grades[name]

    def coefficient(self, n: str, k: str) -> DualElement:
        return self.psi[n].get(k, DualElement.zero())

    def __eq__(self, other) -> bool:
        return isinstance(other, Coaction) and self.basis == other.basis and self.psi == other.psi

    def validate(self) -> None:
        for n in self.names:
            for k, a in self.psi[n].items():
                g = a.grade()
                if g == INHOMOGENEOUS or g + self._grades[k] != self._grades[n]:
                    raise ModuleError(f"psi({n}) term on {k} has the wrong grade")
            if not counit_holds(self, n):
                raise ModuleError(f"counit law fails on {n!r}")
            if not coassociative_on(self, n):
                raise ModuleError(f"coassociativity fails on {n!r}")

    def render(self, n: str) -> str:
        order = {m: i for i, (m, _) in enumerate(self.basis)}
        row = self.psi[n]
        if not row:
            return "0"
        parts = []
        for k in sorted(row, key=order.__getitem__):
            a = row[k]
            body = dual.render(a)
            parts.append(f"{body} | {k}" if len(a.terms) == 1 else f"({body}) | {k}")
        return " + ".join(parts)


def counit_holds(psi: Coaction, n: str) -> bool:
    for k, a in psi.psi[n].items():
        if dual.counit(a) != (MRPoly.one() if k == n else MRPoly.zero()):
            return False
    return n in psi.psi[n]


def coassociative_on(psi: Coaction, n: str) -> bool:
    lhs: set = set()
    rhs: set = set()
    for k, a in psi.psi[n].items():
        for t in dual.coproduct(a).terms:
            toggle(lhs, t + (k,))
        for k2, a2 in psi.psi[k].items():
            for t in dual.tensor_balance([(a, a2)]).terms:
                toggle(rhs, t + (k2,))
    return lhs == rhs


# --------------------------------------------------------------------------
# conversions


def _cohom(g: BiDegree) -> BiDegree:
    return -g


def _candidate_monomials(grades: Mapping[str, BiDegree], n: str) -> list[DualMonomial]:
    """Monomials b whose dual operation can move ``n`` onto some ``m * k``."""
    src = _cohom(grades[n])
    targets = [_cohom(g) for g in grades.values()]
    spread = max(t.s - t.w for t in targets) - (src.s - src.w)
    out = []
    for b in dual.monomials_up_to(max(2 * spread, 0)):
        g = b.grade
        if g.s - g.w > spread:
            continue
        hit = src + g
        if any(coefficient_of_grade(t - hit) is not None for t in targets):
            out.append(b)
    return out


def comodule_from_action(module: FreeModule) -> Coaction:
    """``psi(n) = sum_i c(b_i) (x) (B^i n)`` over the monomial basis ``b_i``."""
    grades = module._grades
    psi: dict[str, dict[str, DualElement]] = {}
    for n in module.names:
        row: dict[str, set] = {}
        for b in _candidate_monomials(grades, n):
            try:
                image = module.act_basis(b, n)
            except UnsupportedDegreeError as exc:
                raise UnsupportedDegreeError(f"basis element {n!r}: {exc}") from None
            if not image:
                continue
            cb = dual.mono_conjugate(b)
            for a, bb, k in image.terms:
                term = dual.ds_mul(cb, dual.eta_R(MRPoly.monomial(a, bb)))
                acc = row.setdefault(k, set())
                for t in term.terms:
                    toggle(acc, t)
        psi[n] = {k: DualElement(ts) for k, ts in row.items() if ts}
    return Coaction(list(module.basis), psi)


def action_from_comodule(psi: Coaction, phi: SteenrodElt, x: Union[ModuleElement, str]) -> ModuleElement:
    """``phi . n = (phi c (x) id) psi(n)``."""
    if isinstance(x, str):
        x = ModuleElement.basis(x)
    acc: set = set()
    for a, b, n in x.terms:
        for k, coeff in psi.psi[n].items():
            value = milnor.pair(dual.conjugate(dual.scale(MRPoly.monomial(a, b), coeff)), phi)
            for t in value.terms:
                toggle(acc, (t[0], t[1], k))
    return ModuleElement._raw(frozenset(acc))


def module_from_comodule(psi: Coaction) -> FreeModule:
    action = {
        g: {n: action_from_comodule(psi, milnor.generator(g), n) for n in psi.names} for g in GENERATORS
    }
    return FreeModule(list(psi.basis), action)


def dual_action(psi: Coaction, phi: SteenrodElt, lam: ModuleElement) -> ModuleElement:
    """``(phi . lam)(n) = sum_i phi(a_i eta_R(lam(n_i)))`` on the dual basis.

    ``lam`` is written in the hatted dual basis.
    """
    unhat = {hat(n): n for n in psi.names}
    values = {unhat[h]: c for h, c in lam.coefficients().items()}
    acc: set = set()
    for n in psi.names:
        total = MRPoly.zero()
        for k, a in psi.psi[n].items():
            v = values.get(k)
            if v:
                total = total + milnor.pair(dual.ds_mul(a, dual.eta_R(v)), phi)
        for t in total.terms:
            toggle(acc, (t[0], t[1], hat(n)))
    return ModuleElement._raw(frozenset(acc))


def dualize(psi: Coaction) -> FreeModule:
    """Dual module on the hatted basis, with negated grades."""
    basis = [(hat(n), -g) for n, g in psi.basis]
    action: dict[str, dict[str, ModuleElement]] = {}
    for gen in GENERATORS:
        phi = milnor.generator(gen)
        table = {}
        for k in psi.names:
            acc: set = set()
            for n in psi.names:
                a = psi.psi[n].get(k)
                if a is None:
                    continue
                for t in milnor.pair(a, phi).terms:
                    toggle(acc, (t[0], t[1], hat(n)))
            if acc:
                table[hat(k)] = ModuleElement(acc)
        action[gen] = table
    return FreeModule(basis, action)


def suspend(module: FreeModule, d) -> FreeModule:
    """``Sigma^d``: raise every cohomological basis degree by ``d``."""
    d = BiDegree(*d)
    return FreeModule([(n, g - d) for n, g in module.basis], module.action)


def rename(module: FreeModule, mapping: Mapping[str, str]) -> FreeModule:
    basis = [(mapping[n], g) for n, g in module.basis]
    action = {
        gen: {mapping[n]: v.rename(mapping) for n, v in table.items()} for gen, table in module.action.items()
    }
    return FreeModule(basis, action)


# --------------------------------------------------------------------------
# isomorphism search


def _gf2_invertible(rows: list[int], size: int) -> bool:
    rows = list(rows)
    for bit in range(size):
        pivot = next((i for i in range(bit, size) if rows[i] >> bit & 1), None)
        if pivot is None:
            return False
        rows[bit], rows[pivot] = rows[pivot], rows[bit]
        for i in range(size):
            if i != bit and rows[i] >> bit & 1:
                rows[i] ^= rows[bit]
    return True


def _nullspace(columns: list[int], nvars: int) -> list[int]:
    """Basis of ``{v : sum v_i columns[i] = 0}`` over F2, vectors as bitmasks."""
    pivots: dict[int, tuple[int, int]] = {}  # leading bit -> (reduced column, combination)
    kernel = []
    for i, col in enumerate(columns):
        combo = 1 << i
        while col:
            lead = col.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (col, combo)
                break
            pcol, pcombo = pivots[lead]
            col ^= pcol
            combo ^= pcombo
        else:
            kernel.append(combo)
    return kernel


MAX_KERNEL_DIM = 20


def iso_test(m: FreeModule, n: FreeModule) -> Optional[dict[str, ModuleElement]]:
    """Search for a grade-preserving isomorphism commuting with Sq1, Sq2, Sq4, Sq8.

    Each matrix entry from a basis element of ``m`` to one of ``n`` is either
    zero or the unique scalar monomial of the right grade, so a candidate map
    is a bit vector.  Commuting with the generators is linear in that vector;
    we solve for the kernel and look in it for a map whose same-grade blocks
    are invertible over F2.  Returns the images of ``m``'s basis, or None.
    """
    if sorted(g for _, g in m.basis) != sorted(g for _, g in n.basis):
        return None
    slots: list[tuple[str, str, tuple[int, int]]] = []
    for src, gs in m.basis:
        for dst, gd in n.basis:
            ab = coefficient_of_grade(gs - gd)
            if ab is not None:
                slots.append((src, dst, ab))

    # residual of each slot's elementary map, indexed into a column bitmask
    index: dict[tuple, int] = {}

    def encode(terms) -> int:
        v = 0
        for t in terms:
            v ^= 1 << index.setdefault(t, len(index))
        return v

    columns = []
    for src, dst, (a, b) in slots:
        f = {name: ModuleElement.zero() for name in m.names}
        f[src] = ModuleElement([(a, b, dst)])
        residual = []
        for gname in GENERATORS:
            gen = milnor.generator(gname)
            for name in m.names:
                diff = _apply_map(f, m.action[gname].get(name, ModuleElement.zero())) + n.act(gen, f[name])
                residual.extend((gname, name) + t for t in diff.terms)
        columns.append(encode(residual))
    kernel = _nullspace(columns, len(slots))
    if len(kernel) > MAX_KERNEL_DIM:
        raise ModuleError(f"isomorphism search space too large (kernel dimension {len(kernel)})")

    m_blocks: dict[BiDegree, list[str]] = {}
    for name, g in m.basis:
        m_blocks.setdefault(g, []).append(name)
    n_pos = {}
    for g in m_blocks:
        for j, name in enumerate(x for x, gd in n.basis if gd == g):
            n_pos[name] = j

    for bits in itertools.product((0, 1), repeat=len(kernel)):
        v = 0
        for bit, k in zip(bits, kernel):
            if bit:
                v ^= k
        rows = {name: 0 for name in m.names}
        for i, (src, dst, ab) in enumerate(slots):
            if v >> i & 1 and ab == (0, 0):
                rows[src] |= 1 << n_pos[dst]
        if all(_gf2_invertible([rows[x] for x in names], len(names)) for names in m_blocks.values()):
            images: dict[str, set] = {name: set() for name in m.names}
            for i, (src, dst, (a, b)) in enumerate(slots):
                if v >> i & 1:
                    images[src].add((a, b, dst))
            return {k: ModuleElement(t) for k, t in images.items()}
    return None


def _apply_map(f: Mapping[str, ModuleElement], x: ModuleElement) -> ModuleElement:
    acc: set = set()
    for a, b, name in x.terms:
        for c, d, k in f[name].terms:
            toggle(acc, (a + c, b + d, k))
    return ModuleElement._raw(frozenset(acc))


def is_module_map(m: FreeModule, n: FreeModule, f: Mapping[str, ModuleElement]) -> bool:
    for gname in GENERATORS:
        gen = milnor.generator(gname)
        for name in m.names:
            if _apply_map(f, m.action[gname].get(name, ModuleElement.zero())) != n.act(gen, f[name]):
                return False
    return True


# --------------------------------------------------------------------------
# JSON files


def _load_json(source) -> dict:
    if isinstance(source, Mapping):
        return dict(source)
    return json.loads(Path(source).read_text())


def _parse_basis(data) -> list[tuple[str, BiDegree]]:
    if "basis" not in data or not isinstance(data["basis"], list):
        raise ModuleError("missing 'basis' list")
    out = []
    for entry in data["basis"]:
        try:
            name = entry["name"]
            i, j = entry["degree"]
        except (KeyError, TypeError, ValueError):
            raise ModuleError(f"malformed basis entry {entry!r}") from None
        out.append((str(name), BiDegree(-int(i), -int(j))))
    return out


def load_module(source) -> FreeModule:
    data = _load_json(source)
    basis = _parse_basis(data)
    names = {n for n, _ in basis}
    action: dict[str, dict[str, ModuleElement]] = {}
    for gen, table in (data.get("action") or {}).items():
        if gen not in GENERATOR_MONOMIALS:
            raise ModuleError(f"unknown generator {gen!r}")
        action[gen] = {}
        for name, terms in table.items():
            if name not in names:
                raise ModuleError(f"action of {gen} on unknown basis element {name!r}")
            acc: set = set()
            for entry in terms:
                try:
                    coeff_text, target = entry
                except (TypeError, ValueError):
                    raise ModuleError(f"{gen} {name}: malformed term {entry!r}") from None
                if target not in names:
                    raise ModuleError(f"{gen} {name}: unknown basis element {target!r}")
                try:
                    coeff = coefficients.parse(coeff_text)
                except coefficients.ParseError as exc:
                    raise ModuleError(f"{gen} {name}: {exc}") from None
                for a, b in coeff.terms:
                    toggle(acc, (a, b, target))
            action[gen][name] = ModuleElement(acc)
    module = FreeModule(basis, action)
    module.validate()
    return module


def _dump_basis(basis) -> list[dict]:
    return [{"name": n, "degree": [-g.s, -g.w]} for n, g in basis]


def module_to_json(module: FreeModule) -> dict:
    action: dict[str, dict] = {}
    for gen in GENERATORS:
        table = {}
        for name in module.names:
            v = module.action[gen].get(name)
            if v:
                table[name] = [
                    [coefficients.render(c), k]
                    for k, c in sorted(v.coefficients().items(), key=lambda kv: module._order[kv[0]])
                ]
        if table:
            action[gen] = table
    return {"basis": _dump_basis(module.basis), "action": action}


def coaction_to_json(psi: Coaction) -> dict:
    order = {n: i for i, n in enumerate(psi.names)}
    return {
        "basis": _dump_basis(psi.basis),
        "coaction": {
            n: [[dual.render(a), k] for k, a in sorted(psi.psi[n].items(), key=lambda kv: order[kv[0]])]
            for n in psi.names
        },
    }


def load_coaction(source) -> Coaction:
    data = _load_json(source)
    basis = _parse_basis(data)
    names = {n for n, _ in basis}
    psi: dict[str, dict[str, DualElement]] = {}
    for name, terms in (data.get("coaction") or {}).items():
        if name not in names:
            raise ModuleError(f"coaction on unknown basis element {name!r}")
        row: dict[str, DualElement] = {}
        for entry in terms:
            try:
                text, target = entry
            except (TypeError, ValueError):
                raise ModuleError(f"coaction of {name}: malformed term {entry!r}") from None
            if target not in names:
                raise ModuleError(f"coaction of {name}: unknown basis element {target!r}")
            try:
                a = dual.parse(text)
            except coefficients.ParseError as exc:
                raise ModuleError(f"coaction of {name}: {exc}") from None
            row[target] = row.get(target, DualElement.zero()) + a
        psi[name] = row
    out = Coaction(basis, psi)
    out.validate()
    return out


def dump_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


# --------------------------------------------------------------------------
# the non-linearity example for a would-be antiautomorphism


@dataclass
class AntihomReport:
    value_on_t_x00: MRPoly
    value_on_x00: MRPoly

    @property
    def linear(self) -> bool:
        # linearity would force value(t x00) = t * value(x00)
        return self.value_on_t_x00 == T * self.value_on_x00

    @property
    def ok(self) -> bool:
        return self.value_on_t_x00 == MRPoly.zero() and self.value_on_x00 == R and not self.linear


def antihom_counterexample(module: Optional[FreeModule] = None) -> AntihomReport:
    """Evaluate ``(Sq2 . xh10)(n) = xh10(chi(Sq2) n)`` on ``t x00`` and ``x00`` in S/h."""
    if module is None:
        from .fixtures import smodh

        module = smodh()
    chi_sq2 = milnor.CHI_SQ2
    on_t = module.act(chi_sq2, ModuleElement.basis("x00", T)).coefficient("x10")
    on_one = module.act(chi_sq2, ModuleElement.basis("x00")).coefficient("x10")
    return AntihomReport(on_t, on_one)
