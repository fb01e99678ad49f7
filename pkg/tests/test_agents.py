import pytest

from src.agents import (
    UtilityTable, argmax_selection, decision_from_quantifier, decision_from_selection,
    max_quantifier, nash_oracle, optimal_profiles, outcome_value, profile_labels,
    quantifier_from_selection, selection_from_quantifier, table_quantifier, table_selection,
)
from src.core import Context
from src.finite import FinFun, FinSet, enumerate_functions, enumerate_tuples
from src.utils import stable_coin
from src.utils.errors import EmptyChoiceSet, NonNumericOutcome, ShapeError

Y = FinSet("Y", ("l", "m", "r"))
U = FinSet("U", ("0", "1", "2"))


def _k(*labels):
    return FinFun((Y,), (U,), tuple((v,) for v in labels))


# ---------- argmax 与 max ----------

def test_argmax_keeps_all_maximizers():
    sel = argmax_selection((Y,), (U,))
    assert sel(_k("1", "2", "2")) == frozenset({("m",), ("r",)})
    assert sel(_k("0", "0", "0")) == frozenset({("l",), ("m",), ("r",)})
    assert sel.name == "argmax[1]"


def test_argmax_on_second_coordinate():
    V = FinSet("V", ("-1", "1"))
    sel = argmax_selection((Y,), (V, V), coordinate=1)
    k = FinFun((Y,), (V, V), (("1", "-1"), ("-1", "1"), ("1", "1")))
    assert sel(k) == frozenset({("m",), ("r",)})


def test_max_quantifier_returns_best_outcomes():
    qf = max_quantifier((Y,), (U,))
    assert qf(_k("1", "2", "0")) == frozenset({("2",)})
    assert qf.name == "max[1]"


def test_argmax_rejects_non_numeric_outcomes():
    with pytest.raises(NonNumericOutcome):
        argmax_selection((Y,), (FinSet("W", ("win", "lose")),))


def test_argmax_rejects_bad_coordinate():
    with pytest.raises(ShapeError):
        argmax_selection((Y,), (U,), coordinate=1)


def test_argmax_rejects_empty_choices():
    with pytest.raises(EmptyChoiceSet):
        argmax_selection((FinSet("E", ()),), (U,))


def test_outcome_value_is_exact():
    assert outcome_value("3/2") == outcome_value("1.5")
    assert outcome_value("-1") < outcome_value("0")


# ---------- 表 ----------

def test_table_selection_missing_entries_are_empty():
    k1, k2 = _k("0", "1", "2"), _k("2", "1", "0")
    sel = table_selection((Y,), (U,), {k1: [("r",)]}, name="prefers")
    assert sel(k1) == frozenset({("r",)})
    assert sel(k2) == frozenset()


def test_table_selection_checks_members():
    with pytest.raises(ShapeError):
        table_selection((Y,), (U,), {_k("0", "0", "0"): [("x",)]})


def test_table_quantifier_checks_continuation_shape():
    wrong = FinFun((U,), (U,), (("0",), ("1",), ("2",)))
    with pytest.raises(ShapeError):
        table_quantifier((Y,), (U,), {wrong: [("0",)]})


# ---------- 互相转换 ----------

def test_selection_to_quantifier_is_image():
    sel = argmax_selection((Y,), (U,))
    qf = quantifier_from_selection(sel)
    for k in enumerate_functions((Y,), (U,)):
        assert qf(k) == frozenset(k(y) for y in sel(k))


def test_quantifier_to_selection_is_full_preimage():
    qf = max_quantifier((Y,), (U,))
    sel = selection_from_quantifier(qf)
    for k in enumerate_functions((Y,), (U,)):
        assert sel(k) == argmax_selection((Y,), (U,))(k)


def test_round_trip_enlarges_to_preimage():
    """ε ↦ φ ↦ ε' 只会扩大：ε' k 是 φ k 的完整原像"""
    k = _k("1", "1", "0")
    sel = table_selection((Y,), (U,), {k: [("l",)]})
    back = selection_from_quantifier(quantifier_from_selection(sel))
    assert back(k) == frozenset({("l",), ("m",)})


@pytest.mark.parametrize("n_choices", [1, 2, 3])
@pytest.mark.parametrize("n_outcomes", [1, 2, 3])
def test_preimage_closed_pair_gives_same_decision(n_choices, n_outcomes):
    """选择函数取完整原像、量词取像时，两种决策的理性判定处处一致"""
    Ys = (FinSet("Ys", tuple(f"y{i}" for i in range(n_choices))),)
    Rs = (FinSet("Rs", tuple(str(i) for i in range(n_outcomes))),)
    X = (FinSet("X", ("p", "q")),)
    choices, outcomes = enumerate_tuples(Ys), enumerate_tuples(Rs)
    continuations = enumerate_functions(Ys, Rs)

    good = {k: {r for r in outcomes if stable_coin("agree", k.images, r)} for k in continuations}
    sel = table_selection(Ys, Rs, {k: [y for y in choices if k(y) in good[k]] for k in continuations})
    image = quantifier_from_selection(sel)
    wide = table_quantifier(Ys, Rs, good)
    for k in continuations:
        assert selection_from_quantifier(image)(k) == sel(k)
        assert selection_from_quantifier(wide)(k) == sel(k)

    by_selection = decision_from_selection(X, Ys, Rs, sel)
    by_image = decision_from_quantifier(X, Ys, Rs, image)
    by_wide = decision_from_quantifier(X, Ys, Rs, wide)
    for sigma in by_selection.profiles():
        for x in enumerate_tuples(X):
            for k in continuations:
                expected = by_selection.rational(sigma, x, k)
                assert by_image.rational(sigma, x, k) == expected
                assert by_wide.rational(sigma, x, k) == expected


# ---------- 参与者 ----------

def test_decision_from_selection_matches_selection():
    game = decision_from_selection((), (Y,), (U,), argmax_selection((Y,), (U,)), name="P")
    k = _k("2", "0", "2")
    rational = [s for s in game.profiles() if game.is_equilibrium_in(s, Context((), k))]
    assert rational == [("l",), ("r",)]


def test_decision_from_quantifier_with_observation():
    X = FinSet("X", ("a", "b"))
    game = decision_from_quantifier((X,), (Y,), (U,), max_quantifier((Y,), (U,)), name="P")
    k = _k("0", "2", "1")
    assert game.is_equilibrium_in(("{a->m, b->l}",), Context(("a",), k))
    assert not game.is_equilibrium_in(("{a->m, b->l}",), Context(("b",), k))


def test_decision_operator_shape_checked():
    with pytest.raises(ShapeError):
        decision_from_selection((), (U,), (U,), argmax_selection((Y,), (U,)))


# ---------- 预言机 ----------

def _pd():
    X = FinSet("X", ("C", "D"))
    P = FinSet("U", ("0", "1", "3", "5"))
    payoff = FinFun.from_mapping((X, X), (P, P), {
        ("C", "C"): ("3", "3"), ("C", "D"): ("0", "5"),
        ("D", "C"): ("5", "0"), ("D", "D"): ("1", "1"),
    })
    return UtilityTable(((X,), (X,)), payoff)


def test_nash_oracle_prisoners_dilemma():
    found = nash_oracle(_pd())
    assert found == [(("D",), ("D",))]
    assert profile_labels(found[0]) == ("D", "D")


def test_nash_oracle_keeps_ties():
    X = FinSet("X", ("A", "B"))
    P = FinSet("U", ("0",))
    payoff = FinFun.from_callable((X, X), (P, P), lambda x: ("0", "0"))
    assert len(nash_oracle(UtilityTable(((X,), (X,)), payoff))) == 4


def test_utility_table_shape():
    u = _pd()
    with pytest.raises(ShapeError):
        UtilityTable(u.moves[:1], u.payoff)


def test_optimal_profiles_entry_game():
    X = FinSet("X", ("Out", "In"))
    Yd = FinSet("Y", ("Fight", "Yield"))
    V = FinSet("U", ("0", "1", "2"))
    q = FinFun.from_mapping((X, Yd), (V, V), {
        ("Out", "Fight"): ("0", "2"), ("Out", "Yield"): ("0", "2"),
        ("In", "Fight"): ("0", "0"), ("In", "Yield"): ("1", "1"),
    })
    phi = max_quantifier((X,), (V, V), coordinate=0)
    psi = max_quantifier((Yd,), (V, V), coordinate=1)
    found = optimal_profiles((X,), (Yd,), phi, psi, q)
    assert [(x, s.describe()) for x, s in found] == [
        (("In",), "{Out->Fight, In->Yield}"),
        (("In",), "{Out->Yield, In->Yield}"),
    ]
