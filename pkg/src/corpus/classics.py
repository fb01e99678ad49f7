from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from src.agents import UtilityTable, argmax_selection, max_quantifier
from src.core import Pregame
from src.corpus.schemas import (
    SequentialGame, SimultaneousGame, sequential_diagram, simultaneous_diagram,
)
from src.finite import FinFun, FinSet

# 收益为自选的精确有理数，期望均衡先由单方面偏离预言机验证后固化在测试中


@dataclass(frozen=True, eq=False)
class ClassicInstance:
    """语料实例：博弈数据 + 对应的 .pregame 文件与其中的博弈名"""
    name: str
    game: object                     # SimultaneousGame 或 SequentialGame
    file_name: str
    game_name: str
    utility: Optional[UtilityTable] = None

    def diagram(self) -> Pregame:
        if isinstance(self.game, SequentialGame):
            return sequential_diagram(self.game)
        return simultaneous_diagram(self.game)


def _payoff_table(X: FinSet, Y: FinSet, U: FinSet,
                  payoffs: Mapping[Tuple[str, str], Tuple[str, str]]) -> FinFun:
    return FinFun.from_mapping((X, Y), (U, U), {(a, b): v for (a, b), v in payoffs.items()})


def _argmax_game(name: str, X: FinSet, U: FinSet,
                 payoffs: Mapping[Tuple[str, str], Tuple[str, str]],
                 file_name: str, game_name: str) -> ClassicInstance:
    q = _payoff_table(X, X, U, payoffs)
    R = (U, U)
    game = SimultaneousGame(
        X=(X,), Y=(X,),
        epsilon=argmax_selection((X,), R, 0),
        delta=argmax_selection((X,), R, 1),
        q=q,
    )
    return ClassicInstance(name, game, file_name, game_name,
                           utility=UtilityTable(moves=((X,), (X,)), payoff=q))


def prisoners_dilemma() -> ClassicInstance:
    X = FinSet("X", ("C", "D"))
    U = FinSet("U", ("0", "1", "3", "5"))
    return _argmax_game("prisoners_dilemma", X, U, {
        ("C", "C"): ("3", "3"),
        ("C", "D"): ("0", "5"),
        ("D", "C"): ("5", "0"),
        ("D", "D"): ("1", "1"),
    }, "prisoners_dilemma.pregame", "pd")


def matching_pennies() -> ClassicInstance:
    X = FinSet("X", ("H", "T"))
    U = FinSet("U", ("-1", "1"))
    return _argmax_game("matching_pennies", X, U, {
        ("H", "H"): ("1", "-1"),
        ("H", "T"): ("-1", "1"),
        ("T", "H"): ("-1", "1"),
        ("T", "T"): ("1", "-1"),
    }, "matching_pennies.pregame", "pennies")


def coordination() -> ClassicInstance:
    X = FinSet("X", ("A", "B"))
    U = FinSet("U", ("0", "1", "2"))
    return _argmax_game("coordination", X, U, {
        ("A", "A"): ("2", "2"),
        ("A", "B"): ("0", "0"),
        ("B", "A"): ("0", "0"),
        ("B", "B"): ("1", "1"),
    }, "coordination.pregame", "coordination")


def entry_deterrence() -> ClassicInstance:
    """
    序贯进入博弈：先手选择进入或不进入，后手观察后选择对抗或让步
    (Out, 让 In 对抗) 是图的均衡但不是最优（不可信威胁）
    """
    X = FinSet("X", ("Out", "In"))
    Y = FinSet("Y", ("Fight", "Yield"))
    U = FinSet("U", ("0", "1", "2"))
    q = _payoff_table(X, Y, U, {
        ("Out", "Fight"): ("1", "2"),
        ("Out", "Yield"): ("1", "2"),
        ("In", "Fight"): ("0", "0"),
        ("In", "Yield"): ("2", "1"),
    })
    R = (U, U)
    game = SequentialGame(
        X=(X,), Y=(Y,),
        phi=max_quantifier((X,), R, 0),
        psi=max_quantifier((Y,), R, 1),
        q=q,
    )
    return ClassicInstance("two_stage_sequential", game, "two_stage_sequential.pregame", "entry")


def classic_instances() -> Dict[str, ClassicInstance]:
    instances = [prisoners_dilemma(), matching_pennies(), coordination(), entry_deterrence()]
    return {inst.name: inst for inst in instances}
