from typing import List, Optional, Sequence

from loguru import logger

from Config import EQUILIBRIA_CAP, EXTENSIONAL_CAP, resolve_cap
from src.core.pregame import Pregame, Profile
from src.finite import (
    FinFun, enumerate_functions, enumerate_tuples, format_tuple, render_ports, tuple_count,
)
from src.utils.errors import DomainTooLarge, NotClosed


def _port_word(n: int) -> str:
    return "port" if n == 1 else "ports"


def check_closed(game: Pregame) -> None:
    """闭合：domain.cov = [] 且 codomain.contra = []"""
    problems = []
    if game.domain.cov:
        problems.append(f"domain has covariant {_port_word(len(game.domain.cov))} "
                        f"{', '.join(p.name for p in game.domain.cov)}")
    if game.codomain.contra:
        problems.append(f"codomain has contravariant {_port_word(len(game.codomain.contra))} "
                        f"{', '.join(p.name for p in game.codomain.contra)}")
    if problems:
        raise NotClosed("game is not closed: " + " and ".join(problems),
                        game.domain.cov, game.codomain.contra)


def equilibria(game: Pregame, cap: Optional[int] = None) -> List[Profile]:
    """闭合前博弈的全部均衡（枚举顺序）：σ E (•, k_unique)"""
    check_closed(game)
    cap = resolve_cap(EQUILIBRIA_CAP) if cap is None else cap
    profiles = game.profiles(cap)
    outputs = enumerate_tuples(game.codomain.cov)
    k_unique = FinFun(game.codomain.cov, (), tuple(() for _ in outputs), False)
    found = [sigma for sigma in profiles if game.rational(sigma, (), k_unique)]
    logger.debug(f"均衡枚举 {game.description}：{len(profiles)}个策略组合，{len(found)}个均衡")
    return found


def extensional_cost(game: Pregame) -> int:
    """|Σ|·|X|·(|R^Y| + |R|)：外延比较需要检查的观测数"""
    n_y = tuple_count(game.codomain.cov)
    n_r = tuple_count(game.codomain.contra)
    return (game.profile_count() * tuple_count(game.domain.cov)
            * (n_r ** n_y + n_r))


def explain_difference(g: Pregame, h: Pregame,
                       strategy_permutation: Optional[Sequence[int]] = None,
                       cap: Optional[int] = None) -> Optional[str]:
    """
    外延比较，返回第一个差异的描述；完全一致时返回 None
    :param strategy_permutation: h 的第 j 个策略分量对应 g 的第 perm[j] 个
    """
    if g.domain != h.domain or g.codomain != h.codomain:
        return f"interfaces differ: {g.render_type()} vs {h.render_type()}"
    n = len(g.strategy_components)
    perm = tuple(range(n)) if strategy_permutation is None else tuple(strategy_permutation)
    if len(h.strategy_components) != n or sorted(perm) != list(range(n)):
        return (f"strategy components differ: {list(g.strategy_components)} "
                f"vs {list(h.strategy_components)}")
    if any(h.strategy_components[j] != g.strategy_components[perm[j]] for j in range(n)):
        return (f"strategy components differ: {list(g.strategy_components)} "
                f"vs {list(h.strategy_components)} under permutation {list(perm)}")

    cap = resolve_cap(EXTENSIONAL_CAP) if cap is None else cap
    cost = max(extensional_cost(g), 1)
    if cost > cap:
        raise DomainTooLarge(f"extensional comparison of {g.description}", cost, cap)

    histories = enumerate_tuples(g.domain.cov)
    outcomes = enumerate_tuples(g.codomain.contra)
    continuations = enumerate_functions(g.codomain.cov, g.codomain.contra, cap)
    for sigma in g.profiles(cap):
        sigma_h = tuple(sigma[p] for p in perm)
        for x in histories:
            left, right = g.play(sigma, x), h.play(sigma_h, x)
            if left != right:
                return (f"play differs at σ={list(sigma)}, x={format_tuple(x)}: "
                        f"{format_tuple(left)} vs {format_tuple(right)}")
            for r in outcomes:
                left, right = g.coplay(sigma, x, r), h.coplay(sigma_h, x, r)
                if left != right:
                    return (f"coplay differs at σ={list(sigma)}, x={format_tuple(x)}, "
                            f"r={format_tuple(r)}: {format_tuple(left)} vs {format_tuple(right)}")
            for k in continuations:
                left, right = bool(g.rational(sigma, x, k)), bool(h.rational(sigma_h, x, k))
                if left != right:
                    return (f"rationality differs at σ={list(sigma)}, x={format_tuple(x)}, "
                            f"k={k.describe()}: {left} vs {right}")
    return None


def extensionally_equal(g: Pregame, h: Pregame,
                        strategy_permutation: Optional[Sequence[int]] = None,
                        cap: Optional[int] = None) -> bool:
    return explain_difference(g, h, strategy_permutation, cap) is None
