from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.agents import (
    Quantifier, SelectionFunction, decision_from_quantifier, decision_from_selection,
)
from src.core import (
    Interface, Pregame, cocomputation, compose, computation, copy_game, identity,
    strategy_label, teleological_unit, tensor,
)
from src.finite import FinFun, PortList, copy_fun, enumerate_tuples, format_tuple, render_ports
from src.utils.errors import ShapeError


def _check_outcome_function(q: FinFun, X: PortList, Y: PortList) -> None:
    if q.dom != X + Y:
        raise ShapeError(f"outcome function domain {render_ports(q.dom)} is not {render_ports(X + Y)}")


def _check_operator(operator, moves: PortList, R: PortList, what: str) -> None:
    if tuple(operator.choice_set) != moves or tuple(operator.outcome_set) != R:
        raise ShapeError(f"{what} {operator.name} is typed {render_ports(operator.choice_set)} -> "
                         f"{render_ports(operator.outcome_set)}, expected {render_ports(moves)} -> {render_ports(R)}")


@dataclass(frozen=True, eq=False)
class SimultaneousGame:
    """两人语境相关博弈：选择集合 X、Y，选择函数 ε、δ，结果函数 q : X×Y → R"""
    X: PortList
    Y: PortList
    epsilon: SelectionFunction
    delta: SelectionFunction
    q: FinFun
    names: Tuple[str, str] = ("P1", "P2")

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "Y", tuple(self.Y))
        _check_outcome_function(self.q, self.X, self.Y)
        _check_operator(self.epsilon, self.X, self.q.cod, "selection function")
        _check_operator(self.delta, self.Y, self.q.cod, "selection function")

    @property
    def R(self) -> PortList:
        return self.q.cod


@dataclass(frozen=True, eq=False)
class SequentialGame:
    """两人序贯博弈：先手走 X，后手看到 X 后走 Y，量词 φ、ψ"""
    X: PortList
    Y: PortList
    phi: Quantifier
    psi: Quantifier
    q: FinFun
    names: Tuple[str, str] = ("P1", "P2")

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "Y", tuple(self.Y))
        _check_outcome_function(self.q, self.X, self.Y)
        _check_operator(self.phi, self.X, self.q.cod, "quantifier")
        _check_operator(self.psi, self.Y, self.q.cod, "quantifier")

    @property
    def R(self) -> PortList:
        return self.q.cod


def outcome_rules(q: FinFun) -> Pregame:
    """q ⊗ Δ_R*"""
    return tensor(computation(q, name="q"), cocomputation(copy_fun(q.cod), name=f"copy[{render_ports(q.cod)}]"))


def simultaneous_diagram(game: SimultaneousGame) -> Pregame:
    """τ_R ∘ (q ⊗ Δ_R*) ∘ (P1 ⊗ P2)"""
    first, second = game.names
    p1 = decision_from_selection((), game.X, game.R, game.epsilon, name=first)
    p2 = decision_from_selection((), game.Y, game.R, game.delta, name=second)
    return compose(teleological_unit(game.R), compose(outcome_rules(game.q), tensor(p1, p2)))


def selection_equilibria(game: SimultaneousGame) -> List[Tuple[str, str]]:
    """直接定义：σ1 ∈ ε λx.q(x, σ2) 且 σ2 ∈ δ λy.q(σ1, y)"""
    found = []
    for sigma1 in enumerate_tuples(game.X):
        for sigma2 in enumerate_tuples(game.Y):
            k1 = FinFun.from_callable(game.X, game.R, lambda x: game.q(x + sigma2), check=False)
            k2 = FinFun.from_callable(game.Y, game.R, lambda y: game.q(sigma1 + y), check=False)
            if sigma1 in game.epsilon(k1) and sigma2 in game.delta(k2):
                found.append((format_tuple(sigma1), format_tuple(sigma2)))
    return found


def sequential_diagram(game: SequentialGame) -> Pregame:
    """τ_R ∘ (q ⊗ Δ_R*) ∘ (((id_X ⊗ P2) ∘ Δ_X) ⊗ id_R*) ∘ P1，Σ = X × Y^X"""
    first, second = game.names
    p1 = decision_from_quantifier((), game.X, game.R, game.phi, name=first)
    p2 = decision_from_quantifier(game.X, game.Y, game.R, game.psi, name=second)
    observe = compose(tensor(identity(Interface(game.X, ())), p2), copy_game(game.X))
    middle = tensor(observe, identity(Interface((), game.R)))
    return compose(teleological_unit(game.R), compose(outcome_rules(game.q), compose(middle, p1)))


def sequential_profile_labels(profiles: Sequence[Tuple[tuple, FinFun]]) -> List[Tuple[str, str]]:
    """最优策略组合 → 图均衡中的标签形式"""
    return [(format_tuple(sigma1), strategy_label(sigma2)) for sigma1, sigma2 in profiles]
