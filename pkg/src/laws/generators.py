from typing import Optional, Sequence

import numpy as np
from loguru import logger

from Config import MAX_DEPTH, MAX_PORTS, MAX_PROFILES, MAX_SET_SIZE
from src.core import (
    Interface, Pregame, cocomputation, compose, computation, decision, identity,
    teleological_unit, tensor,
)
from src.finite import FinFun, FinSet, PortList, enumerate_tuples, tuple_count
from src.utils import stable_coin

# 端口集合池：A={a0}，B={b0,b1}，C={c0,c1,c2}
_POOL_NAMES = "ABCDEFGH"


def set_pool(max_set_size: int = MAX_SET_SIZE) -> PortList:
    return tuple(
        FinSet(_POOL_NAMES[n - 1], tuple(f"{_POOL_NAMES[n - 1].lower()}{i}" for i in range(n)))
        for n in range(1, max_set_size + 1)
    )


class PregameSampler:
    """
    由种子确定的随机前博弈生成器：对给定的定义域接口采样
    原子包括计算、余计算、决策、τ、恒等以及一般的随机原子
    决策与随机原子的理性关系是 md5 稳定哈希谓词
    """

    def __init__(self, rng: np.random.Generator, max_set_size: int = MAX_SET_SIZE,
                 max_ports: int = MAX_PORTS, max_profiles: int = MAX_PROFILES):
        self.rng = rng
        self.pool = set_pool(max_set_size)
        self.max_ports = max_ports
        self.max_profiles = max_profiles
        self.counter = 0

    def _fresh(self, prefix: str) -> str:
        self.counter += 1
        return f"{prefix}{self.counter}"

    def _salt(self) -> str:
        return str(int(self.rng.integers(0, 2 ** 31)))

    def _pick(self, options: Sequence):
        return options[int(self.rng.integers(0, len(options)))]

    # ========== 端口与函数 ==========
    def port_list(self, max_len: Optional[int] = None, min_len: int = 0) -> PortList:
        max_len = self.max_ports if max_len is None else max_len
        length = int(self.rng.integers(min_len, max_len + 1))
        return tuple(self._pick(self.pool) for _ in range(length))

    def interface(self) -> Interface:
        return Interface(self.port_list(), self.port_list(1))

    def fun(self, dom: PortList, cod: PortList) -> FinFun:
        cod_tuples = enumerate_tuples(cod)
        picks = self.rng.integers(0, len(cod_tuples), size=tuple_count(dom))
        return FinFun(dom, cod, tuple(cod_tuples[int(i)] for i in picks), False)

    # ========== 原子 ==========
    def computation(self, domain: Interface) -> Pregame:
        f = self.fun(domain.cov, self.port_list())
        return computation(f, name=self._fresh("f"))

    def cocomputation(self, domain: Interface) -> Pregame:
        f = self.fun(self.port_list(), domain.contra)
        return cocomputation(f, name=self._fresh("f"))

    def decision(self, domain: Interface) -> Pregame:
        X = domain.cov
        Y = self.port_list(min_len=1)
        if tuple_count(Y) ** tuple_count(X) > self.max_profiles:
            Y = (self.pool[0],)
        R = self.port_list(1)
        salt = self._salt()

        def rational_spec(sigma, x, k):
            return stable_coin(salt, sigma.images, x, k.images)

        return decision(X, Y, R, rational_spec, name=self._fresh("P"))

    def generic(self, domain: Interface) -> Pregame:
        """一般的随机原子：随机策略分量、随机 play/coplay 表、哈希理性"""
        name = self._fresh("g")
        components = []
        for i in range(int(self.rng.integers(0, 3))):
            size = int(self.rng.integers(1, 3))
            if tuple_count(components) * size > self.max_profiles:
                break
            components.append(FinSet(f"{name}.{i}", tuple(f"s{j}" for j in range(size))))
        components = tuple(components)
        Y, R = self.port_list(), self.port_list(1)
        S = domain.contra

        play_table, coplay_table = {}, {}
        ys, ss = enumerate_tuples(Y), enumerate_tuples(S)
        for sigma in enumerate_tuples(components):
            for x in enumerate_tuples(domain.cov):
                play_table[sigma, x] = ys[int(self.rng.integers(0, len(ys)))]
                for r in enumerate_tuples(R):
                    coplay_table[sigma, x, r] = ss[int(self.rng.integers(0, len(ss)))]
        salt = self._salt()

        return Pregame(
            domain=domain,
            codomain=Interface(Y, R),
            strategy_components=components,
            play=lambda sigma, x: play_table[sigma, x],
            coplay=lambda sigma, x, r: coplay_table[sigma, x, r],
            rational=lambda sigma, x, k: stable_coin(salt, sigma, x, k.images),
            description=name,
        )

    def atom(self, domain: Interface) -> Pregame:
        kinds = ["identity", "generic"]
        if not domain.contra:
            kinds += ["computation", "decision"]
        if not domain.cov:
            kinds.append("cocomputation")
        if domain.cov == domain.contra:
            kinds.append("tau")
        kind = self._pick(kinds)
        if kind == "identity":
            return identity(domain)
        if kind == "tau":
            return teleological_unit(domain.cov)
        return getattr(self, kind)(domain)

    # ========== 组合 ==========
    def term(self, domain: Interface, depth: int = MAX_DEPTH) -> Pregame:
        if depth <= 0 or self.rng.random() < 0.4:
            return self.atom(domain)
        if self.rng.random() < 0.5:
            g = self.term(domain, depth - 1)
            h = self.term(g.codomain, depth - 1)
            return compose(h, g)
        i = int(self.rng.integers(0, len(domain.cov) + 1))
        j = int(self.rng.integers(0, len(domain.contra) + 1))
        g = self.term(Interface(domain.cov[:i], domain.contra[:j]), depth - 1)
        h = self.term(Interface(domain.cov[i:], domain.contra[j:]), depth - 1)
        return tensor(g, h)

    def pregame(self, depth: int = MAX_DEPTH) -> Pregame:
        game = self.term(self.interface(), depth)
        logger.debug(f"随机前博弈 {game.description} : {game.render_type()}")
        return game
