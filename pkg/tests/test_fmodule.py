import json

import pytest

from rmotivic import dual as D
from rmotivic import fixtures, fmodule as F, milnor as M
from rmotivic.coefficients import BiDegree, MRPoly, R, T, parse as cparse

NAMES = fixtures.NAMES
GENS = [M.generator(g) for g in M.GENERATORS]
TABLE_OPS = [M.SteenrodElt.basis(row.mono) for row in M.table1()]


def e(text):
    """Module element from text like 't x41 + r^2 x21'."""
    out = F.ModuleElement.zero()
    for term in text.split("+"):
        *coeff, name = term.split()
        out = out + F.ModuleElement.basis(name, cparse(" ".join(coeff) or "1"))
    return out


@pytest.fixture(params=NAMES)
def module(request):
    return fixtures.load(request.param)


def coaction_rows(psi):
    return {n: {k: D.render(a) for k, a in row.items()} for n, row in psi.psi.items()}


def test_smod2_coaction():
    psi = F.comodule_from_action(fixtures.smod2())
    assert psi.psi["x00"] == {"x00": D.parse("1"), "x10": D.parse("T0 + r X1")}
    assert psi.psi["x10"] == {"x10": D.parse("1")}


def test_smodh_coaction():
    psi = F.comodule_from_action(fixtures.smodh())
    assert psi.psi["x00"] == {"x00": D.parse("1"), "x10": D.parse("T0")}


def test_joker_coaction():
    psi = F.comodule_from_action(fixtures.joker())
    want = {
        "x41": {"x41": "1"},
        "x31": {"x31": "1", "x41": "T0"},
        "x21": {"x21": "1", "x41": "t X1 + r T0 X1 + r T1 + r^2 X1^2"},
        "x10": {"x10": "1", "x31": "X1", "x41": "T1"},
        "x00": {
            "x00": "1",
            "x10": "T0",
            "x21": "X1",
            "x31": "T0 X1 + T1",
            "x41": "T0 T1 + r^2 X2 + r^2 X1^3",
        },
    }
    assert psi.psi == {n: {k: D.parse(v) for k, v in row.items()} for n, row in want.items()}


def test_smod2_dual():
    dm = F.dualize(F.comodule_from_action(fixtures.smod2()))
    assert dm.action["Sq1"] == {"xh10": e("xh00")}
    assert dm.action["Sq2"] == {"xh10": e("r xh00")}
    assert dm.grade_of("xh10") == BiDegree(1, 0)


def test_smodh_dual():
    dm = F.dualize(F.comodule_from_action(fixtures.smodh()))
    assert dm.action["Sq1"] == {"xh10": e("xh00")}
    assert dm.action["Sq2"] == {}


def test_joker_dual_edges():
    dm = F.dualize(F.comodule_from_action(fixtures.joker()))
    assert dm.action["Sq1"] == {"xh41": e("xh31"), "xh10": e("xh00")}
    assert dm.action["Sq2"] == {"xh41": e("t xh21"), "xh31": e("xh10"), "xh21": e("xh00")}
    assert dm.action["Sq4"] == {"xh41": e("r^2 xh21")}
    assert dm.action["Sq8"] == {}


def test_dual_via_general_formula(module):
    """The evaluation formula on arbitrary functionals agrees with the basis dual."""
    psi = F.comodule_from_action(module)
    dm = F.dualize(psi)
    for name in dm.names:
        for lam in (F.ModuleElement.basis(name), F.ModuleElement.basis(name, T), F.ModuleElement.basis(name, R)):
            for g in GENS:
                assert F.dual_action(psi, g, lam) == dm.act(g, lam)


def test_roundtrip(module):
    psi = F.comodule_from_action(module)
    assert F.module_from_comodule(psi) == module


def test_coaction_laws(module):
    psi = F.comodule_from_action(module)
    psi.validate()
    for n in psi.names:
        assert F.counit_holds(psi, n)
        assert F.coassociative_on(psi, n)


def test_two_ways_of_acting_agree(module):
    psi = F.comodule_from_action(module)
    for op in TABLE_OPS:
        for scalar in (MRPoly.one(), T, R, T * T):
            for name in module.names:
                x = F.ModuleElement.basis(name, scalar)
                assert module.act(op, x) == F.action_from_comodule(psi, op, x)


def test_module_axiom(module):
    for g in GENS:
        for h in GENS:
            gh = M.product(g, h)
            for name in module.names:
                for scalar in (MRPoly.one(), T):
                    x = F.ModuleElement.basis(name, scalar)
                    assert module.act(gh, x) == module.act(g, module.act(h, x))


def test_unit_acts_trivially(module):
    psi = F.comodule_from_action(module)
    for name in module.names:
        assert F.action_from_comodule(psi, M.SteenrodElt.one(), name) == F.ModuleElement.basis(name)


def test_double_dual(module):
    psi = F.comodule_from_action(module)
    first = F.dualize(psi)
    second = F.dualize(F.comodule_from_action(first))
    back = F.rename(F.suspend(second, (0, 0)), {F.hat(F.hat(n)): n for n in module.names})
    assert F.iso_test(back, module) is not None
    assert back == module


def test_suspend():
    m = fixtures.smod2()
    assert F.suspend(m, (0, 0)) == m
    assert F.suspend(F.suspend(m, (3, 1)), (-3, -1)) == m
    dual = F.dualize(F.comodule_from_action(m))
    shifted = F.suspend(dual, (1, 0))
    assert sorted(g for _, g in shifted.basis) == sorted(g for _, g in m.basis)


def test_iso_identity(module):
    f = F.iso_test(module, module)
    assert f is not None
    assert F.is_module_map(module, module, f)


def test_smodh_dual_is_a_shift_of_itself():
    m = fixtures.smodh()
    shifted = F.suspend(F.dualize(F.comodule_from_action(m)), (1, 0))
    f = F.iso_test(shifted, m)
    assert f == {"xh00": e("x10"), "xh10": e("x00")}


def test_smod2_dual_is_not_a_shift_of_smodh():
    shifted = F.suspend(F.dualize(F.comodule_from_action(fixtures.smod2())), (1, 0))
    assert F.iso_test(shifted, fixtures.smod2()) is not None
    assert F.iso_test(shifted, fixtures.smodh()) is None


def test_iso_allows_scalar_entries_across_grades():
    """A map x21 -> x21 + r x10 is invertible though it mixes grades."""
    basis = [("x00", (0, 0)), ("x10", (-1, 0)), ("x21", (-2, -1))]
    m = F.FreeModule(basis, {"Sq1": {"x00": e("x10")}, "Sq2": {"x00": e("x21")}})
    n = F.FreeModule(basis, {"Sq1": {"x00": e("x10")}, "Sq2": {"x00": e("x21 + r x10")}})
    f = F.iso_test(m, n)
    assert f is not None and F.is_module_map(m, n, f)
    assert F.iso_test(m, F.FreeModule(basis, {"Sq1": {"x00": e("x10")}})) is None


def test_iso_grade_mismatch():
    assert F.iso_test(fixtures.smod2(), fixtures.joker()) is None


def test_empty_module():
    m = F.FreeModule([], {})
    psi = F.comodule_from_action(m)
    assert F.dualize(psi) == m


def test_rank_one_zero_action():
    m = F.FreeModule([("x00", (0, 0))], {})
    assert F.dualize(F.comodule_from_action(m)) == F.FreeModule([("xh00", (0, 0))], {})


def test_antihom_counterexample():
    report = F.antihom_counterexample()
    assert report.value_on_t_x00 == MRPoly.zero()
    assert report.value_on_x00 == R
    assert not report.linear
    assert report.ok


def test_unsupported_degree():
    m = F.FreeModule([("x00", (0, 0)), ("x94", (-9, -4))], {})
    with pytest.raises(F.UnsupportedDegreeError, match="x00"):
        F.comodule_from_action(m)


def test_validate_rejects_bad_grades():
    with pytest.raises(F.ModuleError, match="x00"):
        F.FreeModule([("x00", (0, 0)), ("x10", (-1, 0))], {"Sq2": {"x00": e("x10")}}).validate()


def test_validate_rejects_sq1_squared():
    basis = [("a", (0, 0)), ("b", (-1, 0)), ("c", (-2, 0))]
    m = F.FreeModule(basis, {"Sq1": {"a": e("b"), "b": e("c")}})
    with pytest.raises(F.ModuleError, match="Sq1 Sq1 a"):
        m.validate()


@pytest.mark.parametrize("name", NAMES)
def test_fixture_files_roundtrip(name):
    data = json.loads(fixtures.path(name).read_text())
    m = F.load_module(data)
    assert F.module_to_json(m) == data
    assert F.load_module(F.module_to_json(m)) == m


def test_coaction_json_roundtrip(module):
    psi = F.comodule_from_action(module)
    assert F.load_coaction(json.loads(F.dump_json(F.coaction_to_json(psi)))) == psi


@pytest.mark.parametrize(
    "data, message",
    [
        ({}, "basis"),
        ({"basis": [{"name": "x00"}]}, "malformed"),
        ({"basis": [{"name": "x00", "degree": [0, 0]}], "action": {"Sq3": {}}}, "Sq3"),
        ({"basis": [{"name": "x00", "degree": [0, 0]}], "action": {"Sq1": {"x00": [["1", "x99"]]}}}, "x99"),
        ({"basis": [{"name": "x00", "degree": [0, 0]}], "action": {"Sq1": {"x00": [["q", "x00"]]}}}, "x00"),
    ],
)
def test_load_errors(data, message):
    with pytest.raises(F.ModuleError, match=message):
        F.load_module(data)
