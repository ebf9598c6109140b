"""The 128 module structures on A(1) over the R-motivic Steenrod algebra.

Each structure is indexed by a vector of seven bits.  The coaction of each
module is written down directly (``display_coaction``); the action is then
read off from it and compared against the closed formulas for Sq4 and Sq8
and the fixed Sq1/Sq2 shape.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import dual, fmodule
from .coefficients import BiDegree, parse as parse_coeff
from .fmodule import Coaction, FreeModule, ModuleElement, ModuleError

FIELDS = ("a03", "b03", "b14", "b06", "b25", "b26", "g36")

# (name, cohomological degree)
A1_BASIS = (
    ("x00", (0, 0)),
    ("x10", (1, 0)),
    ("x21", (2, 1)),
    ("x31", (3, 1)),
    ("y31", (3, 1)),
    ("y41", (4, 1)),
    ("y52", (5, 2)),
    ("y62", (6, 2)),
)

# Sq1 and Sq2 on the underlying free A(1)-module, the same for every vector
SQ1_EDGES = {"x00": "x10", "x21": "x31", "y31": "y41", "y52": "y62"}
SQ2_EDGES = {"x00": "x21", "x10": "y31", "x31": "y52", "y41": "y62", "x21": "t y41"}

# which primal class each hatted class becomes after regrading the dual
DUAL_RELABEL = {
    "yh62": "x00",
    "yh52": "x10",
    "yh41": "x21",
    "yh31": "x31",
    "xh31": "y31",
    "xh21": "y41",
    "xh10": "y52",
    "xh00": "y62",
}

DUAL_SHIFT = BiDegree(6, 2)


class CatalogError(ModuleError):
    pass


@dataclass(frozen=True)
class StructureVector:
    a03: int = 0
    b03: int = 0
    b14: int = 0
    b06: int = 0
    b25: int = 0
    b26: int = 0
    g36: int = 0

    def __post_init__(self):
        for f in FIELDS:
            if getattr(self, f) not in (0, 1):
                raise ValueError(f"{f} must be 0 or 1")

    @property
    def j24(self) -> int:
        return (self.b03 * self.g36 + self.a03 * (self.b25 + self.b26)) % 2

    def bits(self) -> tuple[int, ...]:
        return tuple(getattr(self, f) for f in FIELDS)

    @classmethod
    def from_bits(cls, bits) -> "StructureVector":
        bits = tuple(int(b) for b in bits)
        if len(bits) != 7:
            raise ValueError("a structure vector has seven entries")
        return cls(*bits)

    @classmethod
    def from_string(cls, text: str) -> "StructureVector":
        digits = [c for c in text if c in "01"]
        if len(digits) != 7 or any(c not in "01, ()" for c in text):
            raise ValueError(f"expected seven bits, got {text!r}")
        return cls.from_bits(digits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits()))

    @property
    def index(self) -> int:
        return int(str(self), 2)


def all_vectors() -> Iterator[StructureVector]:
    for bits in itertools.product((0, 1), repeat=7):
        yield StructureVector(*bits)


def delta(v: StructureVector) -> StructureVector:
    return StructureVector(
        v.g36,
        (v.b25 + v.b26) % 2,
        v.b25,
        (v.j24 + v.b06) % 2,
        v.b14,
        (v.b03 + v.b14) % 2,
        v.a03,
    )


def is_self_dual(v: StructureVector) -> bool:
    return delta(v) == v


def self_dual_conditions(v: StructureVector) -> bool:
    return v.a03 == v.g36 and v.b03 == (v.b25 + v.b26) % 2 and v.b14 == v.b25


# --------------------------------------------------------------------------
# the coaction, written out term by term


def _terms(v: StructureVector, pieces) -> dual.DualElement:
    """Sum of the dual-algebra monomials whose bit-coefficient is odd."""
    out = dual.DualElement.zero()
    for coeff, text in pieces:
        if coeff % 2:
            out = out + dual.parse(text)
    return out


def display_coaction(v: StructureVector) -> Coaction:
    a03, b03, b14, b06, b25, b26, g36, j24 = (*v.bits(), v.j24)
    rows = {
        "y62": {"y62": [(1, "1")]},
        "y52": {"y52": [(1, "1")], "y62": [(1, "T0")]},
        "y41": {"y41": [(1, "1")], "y62": [(1, "X1")]},
        "y31": {
            "y31": [(1, "1")],
            "y41": [(1, "T0")],
            "y62": [(1, "T1"), (1, "T0 X1"), (g36, "r X1^2")],
        },
        "x31": {
            "x31": [(1, "1")],
            "y52": [(1, "X1")],
            "y62": [(1, "T1"), (b25 + b26, "r X1^2")],
        },
        "x21": {
            "x21": [(1, "1")],
            "x31": [(1, "T0")],
            "y41": [(1, "t X1"), (1, "r T1"), (1, "r T0 X1"), (j24, "r^2 X1^2")],
            "y52": [(1, "T1"), (1, "T0 X1"), (b25, "r X1^2")],
            "y62": [
                (1, "T0 T1"),
                (1 + b26, "t X1^2"),
                (1 + b25, "r T0 X1^2"),
                (1, "r T1 X1"),
                (j24, "r^2 X2"),
            ],
        },
        "x10": {
            "x10": [(1, "1")],
            "y31": [(1, "X1")],
            "y41": [(1, "T1"), (b14, "r X1^2")],
            "y52": [(1, "X1^2")],
            "y62": [(1, "T1 X1"), (g36, "r X1^3"), (b14 + g36, "r X2")],
        },
        "x00": {
            "x00": [(1, "1")],
            "x10": [(1, "T0")],
            "x21": [(1, "X1")],
            "x31": [(1, "T1"), (a03, "r X1^2")],
            "y31": [(1, "T1"), (1, "T0 X1"), (b03, "r X1^2")],
            "y41": [
                (1, "T0 T1"),
                (b03 + b14, "t X1^2"),
                (b03, "r T0 X1^2"),
                (j24, "r^2 X2"),
                (j24, "r^2 X1^3"),
            ],
            "y52": [(1, "T1 X1"), (1, "T0 X1^2"), (b25, "r X1^3"), (a03 + b25, "r X2")],
            "y62": [
                (b26, "t X1^3"),
                (b26 + g36, "r T0 X1^3"),
                (b25 + b26 + g36, "r T1 X1^2"),
                (1 + b03 + b14 + b26, "t X2"),
                (1 + b03 + b26 + g36, "r T0 X2"),
                (1 + a03 + b03 + b25 + b26 + g36, "r T2"),
                (j24, "r^2 X1 X2"),
                (1, "T0 T1 X1"),
                (j24 + b06, "r^2 X1^4"),
            ],
        },
    }
    psi = {n: {k: _terms(v, pieces) for k, pieces in row.items()} for n, row in rows.items()}
    return Coaction(a1_basis(), psi)


def a1_basis() -> list[tuple[str, BiDegree]]:
    return [(n, BiDegree(-i, -j)) for n, (i, j) in A1_BASIS]


# --------------------------------------------------------------------------
# closed formulas used as cross-checks


def _combo(v: StructureVector, pieces) -> ModuleElement:
    acc = ModuleElement.zero()
    for coeff, c, name in pieces:
        if coeff % 2:
            acc = acc + ModuleElement.basis(name, parse_coeff(c))
    return acc


def expected_high_action(v: StructureVector) -> dict[str, dict[str, ModuleElement]]:
    """Sq4 and Sq8 on the primal basis; entries not listed are zero."""
    a03, b03, b14, b06, b25, b26, g36, j24 = (*v.bits(), v.j24)
    return {
        "Sq4": {
            "x00": _combo(v, [(b03, "r", "y31"), (1 + b03 + b14, "t", "y41"), (a03, "r", "x31")]),
            "x10": _combo(v, [(1, "1", "y52"), (b14, "r", "y41")]),
            "x21": _combo(v, [(b26, "t", "y62"), (b25, "r", "y52"), (j24, "r^2", "y41")]),
            "x31": _combo(v, [(b25 + b26, "r", "y62")]),
            "y31": _combo(v, [(g36, "r", "y62")]),
        },
        "Sq8": {"x00": _combo(v, [(b06, "r^2", "y62")])},
    }


def expected_dual_high_action(v: StructureVector) -> dict[str, dict[str, ModuleElement]]:
    """Sq4 and Sq8 on the hatted dual basis; entries not listed are zero."""
    a03, b03, b14, b06, b25, b26, g36, j24 = (*v.bits(), v.j24)
    return {
        "Sq4": {
            "yh62": _combo(v, [(b25 + b26, "r", "xh31"), (1 + b26, "t", "xh21"), (g36, "r", "yh31")]),
            "yh52": _combo(v, [(1, "1", "xh10"), (b25, "r", "xh21")]),
            "yh41": _combo(v, [(b03 + b14, "t", "xh00"), (b14, "r", "xh10"), (j24, "r^2", "xh21")]),
            "yh31": _combo(v, [(b03, "r", "xh00")]),
            "xh31": _combo(v, [(a03, "r", "xh00")]),
        },
        "Sq8": {"yh62": _combo(v, [(j24 + b06, "r^2", "xh00")])},
    }


def a1_shape() -> dict[str, dict[str, ModuleElement]]:
    def edges(table):
        out = {}
        for src, text in table.items():
            parts = text.split()
            coeff, target = ("1", parts[0]) if len(parts) == 1 else (parts[0], parts[1])
            out[src] = ModuleElement.basis(target, parse_coeff(coeff))
        return out

    return {"Sq1": edges(SQ1_EDGES), "Sq2": edges(SQ2_EDGES)}


def _compare(module: FreeModule, expected, gens, what: str) -> None:
    for gen in gens:
        table = expected.get(gen, {})
        for name in module.names:
            got = module.action[gen].get(name, ModuleElement.zero())
            want = table.get(name, ModuleElement.zero())
            if got != want:
                raise CatalogError(f"{what}: {gen} {name} = {got}, expected {want}")


@dataclass
class A1Module:
    vector: StructureVector
    module: FreeModule
    coaction: Coaction


@lru_cache(maxsize=None)
def build_a1(v: StructureVector) -> A1Module:
    psi = display_coaction(v)
    try:
        psi.validate()
    except ModuleError as exc:
        raise CatalogError(f"vector {v}: {exc}") from None
    module = fmodule.module_from_comodule(psi)
    _compare(module, a1_shape(), ("Sq1", "Sq2"), f"vector {v}")
    _compare(module, expected_high_action(v), ("Sq4", "Sq8"), f"vector {v}")
    return A1Module(v, module, psi)


def action_module(v: StructureVector) -> FreeModule:
    """The module given only by its generator action, without going through a coaction."""
    action = a1_shape()
    action.update(expected_high_action(v))
    return FreeModule(a1_basis(), action)


@lru_cache(maxsize=None)
def dual_a1(v: StructureVector) -> FreeModule:
    """The dual module on the hatted basis, regraded by (6, 2); checked against the closed formulas."""
    hatted = fmodule.dualize(build_a1(v).coaction)
    _compare(hatted, expected_dual_high_action(v), ("Sq4", "Sq8"), f"dual of {v}")
    _compare(fmodule.rename(hatted, DUAL_RELABEL), a1_shape(), ("Sq1", "Sq2"), f"dual of {v}")
    return fmodule.suspend(hatted, DUAL_SHIFT)


def relabelled_dual(v: StructureVector) -> FreeModule:
    """``dual_a1`` with hatted names replaced by their primal counterparts."""
    return fmodule.rename(dual_a1(v), DUAL_RELABEL)


# --------------------------------------------------------------------------
# census


def classify_realization(v: StructureVector) -> str:
    first = (v.b25 + v.b26 + v.g36) % 2
    second = (v.a03 + v.b03) % 2
    if first != second:
        raise CatalogError(f"vector {v}: realization criteria disagree ({first} vs {second})")
    return "Y(2,1)" if first else "Y(h,1)"


def classical_condition(v: StructureVector) -> bool:
    return v.b26 == (v.b03 + v.b14) % 2


@dataclass
class CensusRow:
    vector: StructureVector
    self_dual: bool
    dual: StructureVector
    realization: Optional[str]

    def line(self) -> str:
        label = self.realization or "-"
        flag = "yes" if self.self_dual else "no"
        return f"{self.vector}  {flag:<3}  {self.dual}  {label}"


CENSUS_HEADER = "vector   sd   delta    realization"


def census_rows(self_dual_only: bool = False) -> list[CensusRow]:
    rows = []
    for v in all_vectors():
        sd = is_self_dual(v)
        if self_dual_only and not sd:
            continue
        rows.append(CensusRow(v, sd, delta(v), classify_realization(v) if sd else None))
    return rows


@dataclass
class CensusReport:
    self_dual: list[StructureVector]
    conditions_match: bool
    j24_vanishes: bool
    delta_involution: bool
    classical_ok: bool
    split: dict[str, int]
    positives: int = 0
    negatives: int = 0
    failures: list[str] = None

    @property
    def ok(self) -> bool:
        return (
            len(self.self_dual) == 16
            and self.conditions_match
            and self.j24_vanishes
            and self.delta_involution
            and self.classical_ok
            and self.split == {"Y(2,1)": 8, "Y(h,1)": 8}
            and not self.failures
        )


def census(iso_checks: bool = False, full: bool = False, samples: int = 8, seed: int = 0) -> CensusReport:
    """Count self-dual vectors and check them against the closed conditions.

    With ``iso_checks`` the regraded dual of every module is matched by
    isomorphism to the module at ``delta(v)`` and, for ``samples`` random other
    vectors (or all of them when ``full``), shown not isomorphic.
    """
    vectors = list(all_vectors())
    sd = [v for v in vectors if is_self_dual(v)]
    conditions_match = all(is_self_dual(v) == self_dual_conditions(v) for v in vectors)
    split = {"Y(2,1)": 0, "Y(h,1)": 0}
    for v in sd:
        split[classify_realization(v)] += 1
    classical_ok = all(
        classical_condition(v) == (v.b03 == (v.b25 + v.b26) % 2) for v in vectors if v.b14 == v.b25
    )
    report = CensusReport(
        self_dual=sd,
        conditions_match=conditions_match,
        j24_vanishes=all(v.j24 == 0 for v in sd),
        delta_involution=all(delta(delta(v)) == v for v in vectors),
        classical_ok=classical_ok,
        split=split,
        failures=[],
    )
    if iso_checks:
        rng = random.Random(seed)
        for v in vectors:
            pos, neg, fails = uniqueness_check(v, None if full else samples, rng)
            report.positives += pos
            report.negatives += neg
            report.failures.extend(fails)
    return report


def uniqueness_check(v: StructureVector, samples: Optional[int], rng: Optional[random.Random] = None):
    """Positive match against ``delta(v)`` plus negative checks; returns counts and failure messages."""
    failures = []
    d = relabelled_dual(v)
    target = delta(v)
    if fmodule.iso_test(d, action_module(target)) is None:
        failures.append(f"vector {v}: dual not isomorphic to the module at {target}")
    others = [w for w in all_vectors() if w != target]
    if samples is not None:
        others = (rng or random.Random(0)).sample(others, samples)
    for w in others:
        if fmodule.iso_test(d, action_module(w)) is not None:
            failures.append(f"vector {v}: dual also isomorphic to the module at {w}")
    return 1, len(others), failures
