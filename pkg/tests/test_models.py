import pytest

import dalkit as dk
from dalkit.syntax import LogicVariant as V
from conftest import random_model, random_formula


def weekend():
    M = dk.DeonticModel(["e1", "e2", "e3"], permitted={"e1"}, forbidden={"e3"})
    v = dk.Valuation({"a": {"e1", "e2"}, "b": {"e2", "e3"}})
    return M, v


def test_model_validation():
    with pytest.raises(ValueError):
        dk.DeonticModel(["e1", "e1"], set(), set())
    with pytest.raises(ValueError):
        dk.DeonticModel(["e1"], {"e2"}, set())
    with pytest.raises(ValueError):
        dk.DeonticModel(["e1"], {"e1"}, {"e1"})  # P and F must be disjoint


def test_extend_hand_computed():
    M, v = weekend()
    cases = {
        "a * b": {"e2"},
        "a + b": {"e1", "e2", "e3"},
        "~a": {"e3"},
        "~(a + b)": set(),
        "0": set(),
        "1": {"e1", "e2", "e3"},
        "a * ~b": {"e1"},
    }
    for text, want in cases.items():
        assert dk.extend(M, v, dk.parse_action(text)) == want, text


def test_extend_rejects_aimpl():
    M, v = weekend()
    with pytest.raises(ValueError):
        dk.extend(M, v, dk.AImpl(dk.Basic("a"), dk.Basic("b")))


def test_sat_hand_computed():
    M, v = weekend()
    cases = {
        "perm(a * ~b)": True,
        "perm(a)": False,
        "forb(~a)": True,
        "forb(b)": False,
        "a + ~a == 1": True,
        "a * b == 0": False,
        "perm(0) & forb(0)": True,     # the empty extension is inside both
        "obl(a + b)": True,            # nothing lies outside a+b
        "!perm(a) | perm(a)": True,
    }
    for text, want in cases.items():
        assert dk.sat(M, v, dk.parse_formula(text)) is want, text


def test_sat_with_props():
    M, v = weekend()
    phi = dk.parse_formula("rain -> forb(b)", V.DAL_PROP)
    assert dk.sat(M, v, phi, prop_val={"rain": False})
    assert not dk.sat(M, v, phi, prop_val={"rain": True})
    with pytest.raises(ValueError):
        dk.sat(M, v, phi)


def test_sat_missing_action_raises():
    M, v = weekend()
    with pytest.raises(ValueError):
        dk.sat(M, v, dk.parse_formula("perm(zzz)"))


def test_oracle_validates_axioms():
    for text in ["perm(a+b) <-> perm(a) & perm(b)",
                 "forb(a+b) <-> forb(a) & forb(b)",
                 "(perm(a) & forb(a)) <-> (a == 0)",
                 "a + ~a == 1",
                 "a * (a * b) == (a * a) * b",
                 "(a == b) & perm(a) -> perm(b)"]:
        assert dk.taut_oracle(dk.parse_formula(text)) is True, text


def test_oracle_refutes_non_theorems():
    for text in ["perm(a)", "forb(a) | perm(a)", "forb(a) <-> !perm(a)",
                 "a == b", "perm(a * b) -> perm(a)"]:
        assert dk.taut_oracle(dk.parse_formula(text)) is False, text


def test_oracle_witness_falsifies():
    ok, (M, v, props) = dk.taut_oracle(dk.parse_formula("forb(a) | perm(a)"),
                                       return_witness=True)
    assert ok is False
    assert dk.sat(M, v, dk.parse_formula("forb(a) | perm(a)"), prop_val=props) is False


def test_oracle_prop_formulas():
    assert dk.taut_oracle(dk.parse_formula("p | !p", V.DAL_PROP)) is True
    ok, (M, v, props) = dk.taut_oracle(dk.parse_formula("p -> q", V.DAL_PROP),
                                       return_witness=True)
    assert ok is False and props == {"p": True, "q": False}


def test_oracle_budget():
    phi = dk.parse_formula("perm(a * b * c)")
    with pytest.raises(dk.BudgetExceeded):
        dk.taut_oracle(phi)  # three actions exceed the supported bound


def test_oracle_agrees_with_sat_on_random_models(rng):
    """The vectorized oracle and the reference sat() must agree: any formula
    false in some random small model must be refuted by the oracle."""
    for _ in range(60):
        phi = random_formula(rng, rng.randint(1, 3))
        M, v = random_model(rng)
        if not dk.sat(M, v, phi):
            assert dk.taut_oracle(phi) is False
