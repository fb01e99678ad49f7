from typing import Callable, Optional, Sequence

from loguru import logger

from src.core.pregame import Interface, Pregame, always_rational
from src.finite import (
    FinFun, FinSet, TupleValue, check_permutation, copy_fun, delete_fun,
    enumerate_functions, format_tuple, render_ports, tuple_count,
)
from src.utils.errors import EmptyChoiceSet

# 决策的理性规格：(σ 作为函数表 X→Y, 历史 x, 延续 k) → bool
RationalSpec = Callable[[FinFun, TupleValue, FinFun], bool]


def identity(interface: Interface) -> Pregame:
    """显式给出的恒等前博弈：Σ = 1，play/coplay 原样传递"""
    return Pregame(
        domain=interface,
        codomain=interface,
        strategy_components=(),
        play=lambda sigma, x: x,
        coplay=lambda sigma, x, r: r,
        rational=always_rational,
        description=f"id[{render_ports(interface.cov)}, {render_ports(interface.contra)}]",
    )


def strategy_label(strategy: FinFun) -> str:
    """策略标签：无观察时即所选元组，否则为整张表"""
    if not strategy.dom:
        return format_tuple(strategy.images[0])
    return strategy.describe()


def decision(X: Sequence[FinSet], Y: Sequence[FinSet], R: Sequence[FinSet],
             rational_spec: RationalSpec, name: str = "P",
             cap: Optional[int] = None) -> Pregame:
    """
    决策 X → Y ⊗ R*：Σ = Y^X，play σ = σ
    :param rational_spec: 个体理性关系
    :param name: 参与者名字，同时是策略分量集合的名字
    """
    X, Y, R = tuple(X), tuple(Y), tuple(R)
    if tuple_count(Y) == 0:
        raise EmptyChoiceSet(f"decision {name} has an empty choice set {render_ports(Y)}")
    strategies = enumerate_functions(X, Y, cap)
    labels = [strategy_label(s) for s in strategies]
    by_label = dict(zip(labels, strategies))
    component = FinSet(name, labels)
    logger.debug(f"决策 {name}：{render_ports(X)} → {render_ports(Y)}，{len(labels)}个策略")

    def play(sigma, x):
        return by_label[sigma[0]](x)

    def rational(sigma, x, k):
        return bool(rational_spec(by_label[sigma[0]], x, k))

    return Pregame(
        domain=Interface(X, ()),
        codomain=Interface(Y, R),
        strategy_components=(component,),
        play=play,
        coplay=lambda sigma, x, r: (),
        rational=rational,
        description=name,
    )


def computation(f: FinFun, name: Optional[str] = None) -> Pregame:
    """协变计算 f : X → Y"""
    return Pregame(
        domain=Interface(f.dom, ()),
        codomain=Interface(f.cod, ()),
        strategy_components=(),
        play=lambda sigma, x: f(x),
        coplay=lambda sigma, x, r: (),
        rational=always_rational,
        description=name or f"fun[{render_ports(f.dom)} -> {render_ports(f.cod)}]",
    )


def cocomputation(f: FinFun, name: Optional[str] = None) -> Pregame:
    """逆变计算 f* : Y* → X*，coplay(•, •, x) = f(x)"""
    base = name or f"fun[{render_ports(f.dom)} -> {render_ports(f.cod)}]"
    return Pregame(
        domain=Interface((), f.cod),
        codomain=Interface((), f.dom),
        strategy_components=(),
        play=lambda sigma, x: (),
        coplay=lambda sigma, x, r: f(r),
        rational=always_rational,
        description=f"{base}^*",
    )


dual = cocomputation


def teleological_unit(X: Sequence[FinSet]) -> Pregame:
    """τ_X : X ⊗ X* → 1，把前向的值作为结果送回"""
    X = tuple(X)
    return Pregame(
        domain=Interface(X, X),
        codomain=Interface((), ()),
        strategy_components=(),
        play=lambda sigma, x: (),
        coplay=lambda sigma, x, r: x,
        rational=always_rational,
        description=f"tau[{render_ports(X)}]",
    )


def structural(interface: Interface, cov_perm: Sequence[int], contra_perm: Sequence[int]) -> Pregame:
    """
    结构态射（对称性）：codomain.cov[j] = cov[cov_perm[j]]，codomain.contra[j] = contra[contra_perm[j]]
    结合子与单位子由端口列表表示直接成为恒等
    """
    cov_perm = check_permutation(cov_perm, len(interface.cov))
    contra_perm = check_permutation(contra_perm, len(interface.contra))
    codomain = Interface(
        tuple(interface.cov[p] for p in cov_perm),
        tuple(interface.contra[p] for p in contra_perm),
    )

    def play(sigma, x):
        return tuple(x[p] for p in cov_perm)

    def coplay(sigma, x, r):
        s = [None] * len(contra_perm)
        for j, p in enumerate(contra_perm):
            s[p] = r[j]
        return tuple(s)

    return Pregame(
        domain=interface,
        codomain=codomain,
        strategy_components=(),
        play=play,
        coplay=coplay,
        rational=always_rational,
        description=f"perm[{list(cov_perm)}, {list(contra_perm)}]",
    )


def copy_game(X: Sequence[FinSet]) -> Pregame:
    return computation(copy_fun(X), name=f"copy[{render_ports(X)}]")


def delete_game(X: Sequence[FinSet]) -> Pregame:
    return computation(delete_fun(X), name=f"delete[{render_ports(X)}]")


def swap_game(S: Sequence[FinSet], T: Sequence[FinSet]) -> Pregame:
    """σ_{S,T} : S ⊗ T → T ⊗ S"""
    S, T = tuple(S), tuple(T)
    perm = list(range(len(S), len(S) + len(T))) + list(range(len(S)))
    game = structural(Interface(S + T, ()), perm, ())
    return Pregame(game.domain, game.codomain, (), game.play, game.coplay, game.rational,
                   description=f"swap[{render_ports(S)}, {render_ports(T)}]")
