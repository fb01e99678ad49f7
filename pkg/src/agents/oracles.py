import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from Config import DEFAULT_ENUMERATION_CAP, resolve_cap
from src.agents.operators import Quantifier, numeric_values
from src.finite import (
    FinFun, FinSet, PortList, TupleValue, enumerate_functions, enumerate_tuples,
    format_tuple, render_ports, tuple_count,
)
from src.utils.errors import DomainTooLarge, EmptyChoiceSet, ShapeError

# 联合纯策略：每个参与者一个元组
JointProfile = Tuple[TupleValue, ...]


@dataclass(frozen=True)
class UtilityTable:
    """
    标准型博弈：每个参与者的行动端口列表 + 收益表
    payoff 的定义域是各参与者行动端口的拼接，值域每个参与者一个数值坐标
    """
    moves: Tuple[PortList, ...]
    payoff: FinFun

    def __post_init__(self):
        moves = tuple(tuple(m) for m in self.moves)
        object.__setattr__(self, "moves", moves)
        joint = tuple(p for m in moves for p in m)
        if self.payoff.dom != joint:
            raise ShapeError(f"payoff domain {render_ports(self.payoff.dom)} "
                             f"does not match joint moves {render_ports(joint)}")
        if len(self.payoff.cod) != len(moves):
            raise ShapeError(f"payoff has {len(self.payoff.cod)} coordinates for {len(moves)} players")
        for port in self.payoff.cod:
            numeric_values(port)

    def value(self, profile: JointProfile, player: int):
        joint = tuple(label for move in profile for label in move)
        label = self.payoff(joint)[player]
        return numeric_values(self.payoff.cod[player])[label]


def nash_oracle(u: UtilityTable) -> List[JointProfile]:
    """纯策略纳什均衡：没有参与者能通过单方面偏离严格获益"""
    per_player = [enumerate_tuples(m) for m in u.moves]
    for i, moves in enumerate(per_player):
        if not moves:
            raise EmptyChoiceSet(f"player {i + 1} has no moves")
    found = []
    for profile in itertools.product(*per_player):
        stable = True
        for i, alternatives in enumerate(per_player):
            current = u.value(profile, i)
            for move in alternatives:
                deviated = profile[:i] + (move,) + profile[i + 1:]
                if u.value(deviated, i) > current:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            found.append(profile)
    logger.debug(f"纳什预言机：{len(found)}个纯策略均衡")
    return found


def profile_labels(profile: JointProfile) -> Tuple[str, ...]:
    """联合策略 → 图均衡中的标签形式"""
    return tuple(format_tuple(move) for move in profile)


def optimal_profiles(X: Sequence[FinSet], Y: Sequence[FinSet],
                     phi: Quantifier, psi: Quantifier, q: FinFun,
                     cap: Optional[int] = None) -> List[Tuple[TupleValue, FinFun]]:
    """
    两人序贯博弈的最优策略组合 (σ1, σ2)，σ2 : X → Y
      q(σ1, σ2 σ1) ∈ φ λx.q(x, σ2 x)
      q(x, σ2 x) ∈ ψ λy.q(x, y)  对所有 x
    """
    X, Y = tuple(X), tuple(Y)
    if tuple_count(X) == 0 or tuple_count(Y) == 0:
        raise EmptyChoiceSet(f"sequential game needs nonempty move sets, got {render_ports(X)} and {render_ports(Y)}")
    R = q.cod
    if q.dom != X + Y:
        raise ShapeError(f"outcome function domain {render_ports(q.dom)} is not {render_ports(X + Y)}")
    for quantifier, moves in ((phi, X), (psi, Y)):
        if tuple(quantifier.choice_set) != moves or tuple(quantifier.outcome_set) != R:
            raise ShapeError(f"quantifier {quantifier.name} does not fit {render_ports(moves)} -> {render_ports(R)}")
    cap = resolve_cap(DEFAULT_ENUMERATION_CAP) if cap is None else cap
    firsts = enumerate_tuples(X)
    count = len(firsts) * tuple_count(Y) ** len(firsts)
    if count > cap:
        raise DomainTooLarge(f"sequential profiles {render_ports(X)} x ({render_ports(Y)})^{render_ports(X)}", count, cap)

    # 第二个参与者在每个历史 x 下面对的延续与可接受结果，与 σ 无关
    local = {}
    for x in firsts:
        k_x = FinFun.from_callable(Y, R, lambda y: q(x + y), check=False)
        local[x] = psi(k_x)

    found = []
    for sigma2 in enumerate_functions(X, Y, cap):
        if not all(q(x + sigma2(x)) in local[x] for x in firsts):
            continue
        k_outer = FinFun.from_callable(X, R, lambda x: q(x + sigma2(x)), check=False)
        accepted = phi(k_outer)
        for sigma1 in firsts:
            if q(sigma1 + sigma2(sigma1)) in accepted:
                found.append((sigma1, sigma2))
    found.sort(key=lambda p: (firsts.index(p[0]),))
    logger.debug(f"最优策略组合：{len(found)}个（候选{count}个）")
    return found
