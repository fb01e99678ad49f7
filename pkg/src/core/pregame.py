from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from Config import DEFAULT_ENUMERATION_CAP, resolve_cap
from src.finite import (
    FinFun, FinSet, PortList, TupleValue, enumerate_tuples, render_ports, tuple_count,
)
from src.utils.errors import DomainTooLarge, InterfaceMismatch

# 策略组合（扁平化）：每个策略分量一个标签
Profile = Tuple[str, ...]
PlayFn = Callable[[Profile, TupleValue], TupleValue]
CoplayFn = Callable[[Profile, TupleValue, TupleValue], TupleValue]
RationalFn = Callable[[Profile, TupleValue, FinFun], bool]


@dataclass(frozen=True)
class Interface:
    """对象 X ⊗ S*：协变端口列表 cov 与逆变端口列表 contra"""
    cov: PortList = ()
    contra: PortList = ()

    def __post_init__(self):
        object.__setattr__(self, "cov", tuple(self.cov))
        object.__setattr__(self, "contra", tuple(self.contra))

    def tensor(self, other: "Interface") -> "Interface":
        return Interface(self.cov + other.cov, self.contra + other.contra)

    def render(self) -> str:
        return f"{render_ports(self.cov)} ⊗ {render_ports(self.contra)}*"

    def __str__(self) -> str:
        return self.render()


UNIT = Interface((), ())


@dataclass(frozen=True)
class Context:
    """语境 (x, k)：历史值 + 延续函数 Y → R"""
    history: TupleValue
    continuation: FinFun


def always_rational(sigma: Profile, x: TupleValue, k: FinFun) -> bool:
    return True


@dataclass(frozen=True, eq=False)
class Pregame:
    """
    前博弈 X ⊗ S* → Y ⊗ R*
    :param strategy_components: 扁平化的策略分量，Σ 为它们的积
    :param play: (σ, x) → y
    :param coplay: (σ, x, r) → s
    :param rational: (σ, x, k) → bool，按需求值，从不物化
    :param description: 构造它的项（用于报告反例）
    """
    domain: Interface
    codomain: Interface
    strategy_components: Tuple[FinSet, ...]
    play: PlayFn
    coplay: CoplayFn
    rational: RationalFn
    description: str = "?"

    def __post_init__(self):
        object.__setattr__(self, "strategy_components", tuple(self.strategy_components))

    def render_type(self) -> str:
        return f"{self.domain.render()} → {self.codomain.render()}"

    def profile_count(self) -> int:
        return tuple_count(self.strategy_components)

    def profiles(self, cap: Optional[int] = None) -> Tuple[Profile, ...]:
        """按枚举顺序列出 Σ"""
        cap = resolve_cap(DEFAULT_ENUMERATION_CAP) if cap is None else cap
        count = self.profile_count()
        if count > cap:
            raise DomainTooLarge(f"strategy profiles of {self.description}", count, cap)
        return enumerate_tuples(self.strategy_components)

    def is_equilibrium_in(self, sigma: Sequence[str], context: Context) -> bool:
        k = context.continuation
        if k.dom != self.codomain.cov or k.cod != self.codomain.contra:
            raise InterfaceMismatch(
                f"continuation {render_ports(k.dom)} -> {render_ports(k.cod)} does not fit "
                f"codomain {self.codomain.render()}",
                f"{render_ports(k.dom)} -> {render_ports(k.cod)}",
                self.codomain.render(),
            )
        return bool(self.rational(tuple(sigma), tuple(context.history), k))

    def __repr__(self) -> str:
        return f"<Pregame {self.description} : {self.render_type()}>"
