import itertools
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np
from loguru import logger

from Config import DEFAULT_ITERATIONS, DEFAULT_SEED, LAW_COST_CAP, RESAMPLE_BUDGET
from src.core import (
    Interface, Pregame, cocomputation, compose, computation, explain_difference,
    extensional_cost, identity, structural, swap_game, teleological_unit, tensor,
)
from src.finite import FinSet, enumerate_functions
from src.laws.generators import PregameSampler

# 一次定律实例：(左边, 右边, 右边策略分量到左边的重排)
LawCase = Tuple[Pregame, Pregame, Optional[Tuple[int, ...]]]


@dataclass(frozen=True)
class Counterexample:
    law: str
    case: int
    left: str
    right: str
    detail: str

    def render(self) -> str:
        return (f"{self.law} #{self.case}\n"
                f"  left:  {self.left}\n"
                f"  right: {self.right}\n"
                f"  {self.detail}")


@dataclass
class LawOutcome:
    law: str
    checked: int = 0
    passed: int = 0
    resampled: int = 0
    skipped: int = 0
    failures: List[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class LawReport:
    seed: int
    iterations: int
    outcomes: List[LawOutcome] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    @property
    def failures(self) -> List[Counterexample]:
        return [c for o in self.outcomes for c in o.failures]


def _swap_perm(a: int, b: int) -> List[int]:
    """长度 a+b 的列表交换前后两段"""
    return list(range(a, a + b)) + list(range(a))


def _check(outcome: LawOutcome, case: int, left: Pregame, right: Pregame,
           perm: Optional[Tuple[int, ...]] = None, cap: Optional[int] = None) -> None:
    outcome.checked += 1
    detail = explain_difference(left, right, perm, cap)
    if detail is None:
        outcome.passed += 1
        return
    logger.warning(f"定律 {outcome.law} 第{case}个实例失败：{detail}")
    outcome.failures.append(Counterexample(outcome.law, case, left.description, right.description, detail))


# ========== 随机定律实例 ==========
def left_identity(s: PregameSampler) -> LawCase:
    g = s.pregame()
    return compose(identity(g.codomain), g), g, None


def right_identity(s: PregameSampler) -> LawCase:
    g = s.pregame()
    return compose(g, identity(g.domain)), g, None


def associativity(s: PregameSampler) -> LawCase:
    f = s.term(s.interface(), 1)
    g = s.term(f.codomain, 1)
    h = s.term(g.codomain, 1)
    return compose(h, compose(g, f)), compose(compose(h, g), f), None


def interchange(s: PregameSampler) -> LawCase:
    """(g2∘g1) ⊗ (h2∘h1) 与 (g2⊗h2) ∘ (g1⊗h1)，两边策略分量顺序不同"""
    g1 = s.term(s.interface(), 1)
    g2 = s.term(g1.codomain, 1)
    h1 = s.term(s.interface(), 1)
    h2 = s.term(h1.codomain, 1)
    left = tensor(compose(g2, g1), compose(h2, h1))
    right = compose(tensor(g2, h2), tensor(g1, h1))
    a, b, c, d = (len(x.strategy_components) for x in (g1, g2, h1, h2))
    perm = (tuple(range(0, a)) + tuple(range(a + b, a + b + c))
            + tuple(range(a, a + b)) + tuple(range(a + b + c, a + b + c + d)))
    return left, right, perm


def _symmetry(interface: Interface, cov_split: int, contra_split: int) -> Pregame:
    cov, contra = interface.cov, interface.contra
    return structural(interface,
                      _swap_perm(cov_split, len(cov) - cov_split),
                      _swap_perm(contra_split, len(contra) - contra_split))


def swap_involution(s: PregameSampler) -> LawCase:
    first, second = s.interface(), s.interface()
    both = first.tensor(second)
    there = _symmetry(both, len(first.cov), len(first.contra))
    back = _symmetry(there.codomain, len(second.cov), len(second.contra))
    return compose(back, there), identity(both), None


def swap_naturality(s: PregameSampler) -> LawCase:
    """σ ∘ (g ⊗ h) 与 (h ⊗ g) ∘ σ"""
    g = s.term(s.interface(), 1)
    h = s.term(s.interface(), 1)
    gh = tensor(g, h)
    left = compose(_symmetry(gh.codomain, len(g.codomain.cov), len(g.codomain.contra)), gh)
    right = compose(tensor(h, g), _symmetry(gh.domain, len(g.domain.cov), len(g.domain.contra)))
    ng, nh = len(g.strategy_components), len(h.strategy_components)
    perm = tuple(range(ng, ng + nh)) + tuple(range(ng))
    return left, right, perm


RANDOM_LAWS: List[Tuple[str, Callable[[PregameSampler], LawCase]]] = [
    ("left identity", left_identity),
    ("right identity", right_identity),
    ("associativity", associativity),
    ("interchange", interchange),
    ("swap involution", swap_involution),
    ("swap naturality", swap_naturality),
]


def run_random_law(name: str, build: Callable[[PregameSampler], LawCase], rng: np.random.Generator,
                   iterations: int, cost_cap: int = LAW_COST_CAP,
                   resample_budget: int = RESAMPLE_BUDGET) -> LawOutcome:
    """外延比较规模超过 cost_cap 的实例按确定顺序重采样，预算耗尽则记为跳过"""
    outcome = LawOutcome(name)
    sampler = PregameSampler(rng)
    for case in range(iterations):
        for _ in range(resample_budget):
            left, right, perm = build(sampler)
            if extensional_cost(left) <= cost_cap and extensional_cost(right) <= cost_cap:
                _check(outcome, case, left, right, perm, cap=cost_cap)
                break
            outcome.resampled += 1
        else:
            outcome.skipped += 1
    return outcome


# ========== 穷举定律 ==========
def _small_sets() -> Tuple[FinSet, ...]:
    return FinSet("P", ("p0",)), FinSet("Q", ("q0", "q1"))


def swap_naturality_computations() -> LawOutcome:
    """所有大小不超过2的集合之间的全部函数：swap ∘ (f ⊗ g) = (g ⊗ f) ∘ swap"""
    outcome = LawOutcome("swap naturality (computations)")
    case = 0
    for A, B, C, D in itertools.product(_small_sets(), repeat=4):
        for f in enumerate_functions((A,), (B,)):
            for g in enumerate_functions((C,), (D,)):
                left = compose(swap_game((B,), (D,)), tensor(computation(f, "f"), computation(g, "g")))
                right = compose(tensor(computation(g, "g"), computation(f, "f")), swap_game((A,), (C,)))
                _check(outcome, case, left, right)
                case += 1
    return outcome


def teleological_case(f) -> LawCase:
    """τ_Y ∘ (f ⊗ id_{Y*}) 与 τ_X ∘ (id_X ⊗ f*)，都是 X ⊗ Y* → 1"""
    X, Y = f.dom, f.cod
    left = compose(teleological_unit(Y), tensor(computation(f, "f"), identity(Interface((), Y))))
    right = compose(teleological_unit(X), tensor(identity(Interface(X, ())), cocomputation(f, "f")))
    return left, right, None


def teleological_naturality() -> LawOutcome:
    """3→3 的全部 27 个函数，以及全部 2→3 和 3→2 的函数"""
    outcome = LawOutcome("teleological naturality")
    two = FinSet("B", ("b0", "b1"))
    three = FinSet("C", ("c0", "c1", "c2"))
    three_other = FinSet("D", ("d0", "d1", "d2"))
    case = 0
    for dom, cod in ((three, three_other), (two, three), (three, two)):
        for f in enumerate_functions((dom,), (cod,)):
            left, right, _ = teleological_case(f)
            _check(outcome, case, left, right)
            case += 1
    return outcome


def run_laws(seed: int = DEFAULT_SEED, iterations: int = DEFAULT_ITERATIONS,
             cost_cap: int = LAW_COST_CAP) -> LawReport:
    """每条随机定律使用由 (seed, 序号) 派生的独立随机流，报告与运行顺序无关"""
    if iterations < 1:
        raise ValueError(f"iterations must be at least 1, got {iterations}")
    logger.info(f"开始定律检查：seed={seed}，每条随机定律{iterations}个实例")
    report = LawReport(seed, iterations)
    for index, (name, build) in enumerate(RANDOM_LAWS):
        rng = np.random.default_rng([seed, index])
        report.outcomes.append(run_random_law(name, build, rng, iterations, cost_cap))
    report.outcomes.append(swap_naturality_computations())
    report.outcomes.append(teleological_naturality())
    logger.info(f"定律检查结束：{'全部通过' if report.ok else f'{len(report.failures)}个反例'}")
    return report
