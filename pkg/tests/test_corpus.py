import numpy as np
import pytest

from Config import SEQUENTIAL_BATTERY, SIMULTANEOUS_BATTERY
from src.agents import (
    UtilityTable, argmax_selection, max_quantifier, nash_oracle, optimal_profiles,
    profile_labels, table_selection,
)
from src.core import equilibria, extensionally_equal
from src.corpus import (
    SequentialGame, SimultaneousGame, classic_instances, corpus_files, load_corpus_file,
    selection_equilibria, sequential_diagram, sequential_profile_labels, simultaneous_diagram,
)
from src.dsl import elaborate_game
from src.finite import FinFun, FinSet, enumerate_functions, enumerate_tuples
from src.utils.errors import ShapeError

EXPECTED = {
    "prisoners_dilemma": [("D", "D")],
    "matching_pennies": [],
    "coordination": [("A", "A"), ("B", "B")],
    "two_stage_sequential": [
        ("Out", "{Out->Fight, In->Fight}"),
        ("Out", "{Out->Yield, In->Fight}"),
        ("In", "{Out->Fight, In->Yield}"),
        ("In", "{Out->Yield, In->Yield}"),
    ],
}


def _moves(prefix: str, size: int) -> FinSet:
    return FinSet(prefix.upper(), tuple(f"{prefix}{i}" for i in range(size)))


def _random_fun(rng: np.random.Generator, dom, cod) -> FinFun:
    cod_tuples = enumerate_tuples(cod)
    picks = rng.integers(0, len(cod_tuples), size=len(enumerate_tuples(dom)))
    return FinFun(tuple(dom), tuple(cod), tuple(cod_tuples[int(i)] for i in picks))


# ---------- 语料文件 ----------

def test_corpus_files_listed():
    assert [p.stem for p in corpus_files()] == [
        "coordination", "matching_pennies", "prisoners_dilemma", "two_stage_sequential",
    ]


def test_load_corpus_file_accepts_suffix():
    assert load_corpus_file("coordination").game_names == ["coordination"]
    assert load_corpus_file("coordination.pregame").game_names == ["coordination"]


def test_load_corpus_file_missing():
    with pytest.raises(FileNotFoundError):
        load_corpus_file("no_such_game")


# ---------- 经典博弈 ----------

@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_classic_equilibria(name):
    inst = classic_instances()[name]
    assert equilibria(inst.diagram()) == EXPECTED[name]


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_file_matches_programmatic_diagram(name):
    inst = classic_instances()[name]
    program = load_corpus_file(inst.file_name)
    game = elaborate_game(program, inst.game_name)
    assert equilibria(game) == EXPECTED[name]
    assert extensionally_equal(game, inst.diagram())


@pytest.mark.parametrize("name", ["prisoners_dilemma", "matching_pennies", "coordination"])
def test_classic_agrees_with_oracles(name):
    inst = classic_instances()[name]
    assert selection_equilibria(inst.game) == EXPECTED[name]
    assert [profile_labels(p) for p in nash_oracle(inst.utility)] == EXPECTED[name]


def test_entry_game_optimal_profiles_exclude_threat():
    game = classic_instances()["two_stage_sequential"].game
    optimal = sequential_profile_labels(optimal_profiles(game.X, game.Y, game.phi, game.psi, game.q))
    assert optimal == EXPECTED["two_stage_sequential"][2:]


def test_simultaneous_game_checks_operators():
    X, Y = _moves("x", 2), _moves("y", 3)
    U = FinSet("U", ("0", "1"))
    q = FinFun.from_callable((X, Y), (U, U), lambda v: ("0", "1"))
    with pytest.raises(ShapeError):
        SimultaneousGame((X,), (Y,), argmax_selection((X,), (U, U)), argmax_selection((X,), (U, U), 1), q)


def test_sequential_game_checks_outcome_domain():
    X, Y = _moves("x", 2), _moves("y", 2)
    U = FinSet("U", ("0", "1"))
    q = FinFun.from_callable((Y, X), (U,), lambda v: ("0",))
    with pytest.raises(ShapeError):
        SequentialGame((X,), (Y,), max_quantifier((X,), (U,)), max_quantifier((Y,), (U,)), q)


# ---------- 随机验收 ----------

def test_simultaneous_argmax_battery():
    """随机 2×2 与 2×3 博弈：图均衡 = 选择均衡 = 纯策略纳什均衡"""
    rng = np.random.default_rng(2024)
    U = FinSet("U", ("0", "1", "2", "3"))
    for _ in range(SIMULTANEOUS_BATTERY):
        X, Y = _moves("x", 2), _moves("y", int(rng.integers(2, 4)))
        q = _random_fun(rng, (X, Y), (U, U))
        game = SimultaneousGame((X,), (Y,), argmax_selection((X,), (U, U), 0),
                                argmax_selection((Y,), (U, U), 1), q)
        expected = [profile_labels(p) for p in nash_oracle(UtilityTable(((X,), (Y,)), q))]
        assert selection_equilibria(game) == expected
        assert equilibria(simultaneous_diagram(game)) == expected


def test_table_selection_battery():
    """随机选择表（含空集）：图均衡 = 直接定义的选择均衡"""
    rng = np.random.default_rng(99)
    for _ in range(100):
        X = _moves("x", int(rng.integers(1, 4)))
        Y = _moves("y", int(rng.integers(1, 4)))
        R = _moves("r", int(rng.integers(1, 4)))
        q = _random_fun(rng, (X, Y), (R,))
        tables = []
        for moves in (X, Y):
            choices = enumerate_tuples((moves,))
            table = {k: [y for y in choices if rng.random() < 0.5]
                     for k in enumerate_functions((moves,), (R,))}
            tables.append(table_selection((moves,), (R,), table))
        game = SimultaneousGame((X,), (Y,), tables[0], tables[1], q)
        assert equilibria(simultaneous_diagram(game)) == selection_equilibria(game)


def test_sequential_max_battery():
    """随机两阶段博弈：最优策略组合都是图均衡，且至少有一个"""
    rng = np.random.default_rng(7)
    U = FinSet("U", ("0", "1", "2", "3"))
    for _ in range(SEQUENTIAL_BATTERY):
        X = _moves("x", int(rng.integers(2, 4)))
        Y = _moves("y", int(rng.integers(2, 4)))
        q = _random_fun(rng, (X, Y), (U, U))
        game = SequentialGame((X,), (Y,), max_quantifier((X,), (U, U), 0),
                              max_quantifier((Y,), (U, U), 1), q)
        optimal = sequential_profile_labels(optimal_profiles(game.X, game.Y, game.phi, game.psi, game.q))
        found = equilibria(sequential_diagram(game))
        assert optimal
        assert set(optimal) <= set(found)
