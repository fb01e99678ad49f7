from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, Mapping, Sequence

from loguru import logger

from src.finite import (
    FinFun, FinSet, PortList, TupleValue, check_tuple, enumerate_tuples,
    render_ports, tuple_count,
)
from src.utils.errors import EmptyChoiceSet, NonNumericOutcome, ShapeError


@dataclass(frozen=True, eq=False)
class SelectionFunction:
    """多值选择函数 ε : (Y → R) → P(Y)"""
    choice_set: PortList
    outcome_set: PortList
    select: Callable[[FinFun], FrozenSet[TupleValue]]
    name: str = "selection"

    def __call__(self, k: FinFun) -> FrozenSet[TupleValue]:
        return self.select(k)


@dataclass(frozen=True, eq=False)
class Quantifier:
    """多值量词 φ : (Y → R) → P(R)"""
    choice_set: PortList
    outcome_set: PortList
    quantify: Callable[[FinFun], FrozenSet[TupleValue]]
    name: str = "quantifier"

    def __call__(self, k: FinFun) -> FrozenSet[TupleValue]:
        return self.quantify(k)


def outcome_value(label: str) -> Fraction:
    """收益标签 → 精确有理数（"3"、"-1"、"3/2"、"0.5"）"""
    try:
        return Fraction(label)
    except (ValueError, ZeroDivisionError):
        raise NonNumericOutcome(f"outcome label {label!r} is not a rational number")


def numeric_values(port: FinSet) -> Dict[str, Fraction]:
    return {label: outcome_value(label) for label in port.elements}


def _check_numeric_coordinate(Y: Sequence[FinSet], R: Sequence[FinSet], coordinate: int) -> Dict[str, Fraction]:
    if tuple_count(Y) == 0:
        raise EmptyChoiceSet(f"choice set {render_ports(Y)} is empty")
    if not 0 <= coordinate < len(R):
        raise ShapeError(f"coordinate {coordinate + 1} out of range for outcome ports {render_ports(R)}")
    return numeric_values(R[coordinate])


def argmax_selection(Y: Sequence[FinSet], R: Sequence[FinSet], coordinate: int = 0) -> SelectionFunction:
    """argmax：保留所有达到最大值的选择，不做平局裁决"""
    Y, R = tuple(Y), tuple(R)
    values = _check_numeric_coordinate(Y, R, coordinate)
    choices = enumerate_tuples(Y)

    def select(k: FinFun) -> FrozenSet[TupleValue]:
        scored = [(values[k(y)[coordinate]], y) for y in choices]
        best = max(v for v, _ in scored)
        return frozenset(y for v, y in scored if v == best)

    return SelectionFunction(Y, R, select, name=f"argmax[{coordinate + 1}]")


def max_quantifier(Y: Sequence[FinSet], R: Sequence[FinSet], coordinate: int = 0) -> Quantifier:
    """max：最大化者处取得的结果元组集合"""
    sel = argmax_selection(Y, R, coordinate)

    def quantify(k: FinFun) -> FrozenSet[TupleValue]:
        return frozenset(k(y) for y in sel.select(k))

    return Quantifier(sel.choice_set, sel.outcome_set, quantify, name=f"max[{coordinate + 1}]")


def _check_members(port_list: PortList, members: Iterable[TupleValue]) -> FrozenSet[TupleValue]:
    return frozenset(check_tuple(port_list, m) for m in members)


def _check_continuation(k: FinFun, Y: PortList, R: PortList) -> None:
    if k.dom != Y or k.cod != R:
        raise ShapeError(f"continuation {render_ports(k.dom)} -> {render_ports(k.cod)} "
                         f"does not match {render_ports(Y)} -> {render_ports(R)}")


def table_selection(Y: Sequence[FinSet], R: Sequence[FinSet],
                    table: Mapping[FinFun, Iterable[TupleValue]],
                    name: str = "selection") -> SelectionFunction:
    """显式表给出的选择函数；表中没有的延续映射到空集"""
    Y, R = tuple(Y), tuple(R)
    checked = {}
    for k, members in table.items():
        _check_continuation(k, Y, R)
        checked[k] = _check_members(Y, members)
    if len(checked) < len(enumerate_tuples(R)) ** len(enumerate_tuples(Y)):
        logger.debug(f"选择函数 {name}：未列出的延续映射为空集")
    return SelectionFunction(Y, R, lambda k: checked.get(k, frozenset()), name=name)


def table_quantifier(Y: Sequence[FinSet], R: Sequence[FinSet],
                     table: Mapping[FinFun, Iterable[TupleValue]],
                     name: str = "quantifier") -> Quantifier:
    """显式表给出的量词；表中没有的延续映射到空集"""
    Y, R = tuple(Y), tuple(R)
    checked = {}
    for k, members in table.items():
        _check_continuation(k, Y, R)
        checked[k] = _check_members(R, members)
    if len(checked) < len(enumerate_tuples(R)) ** len(enumerate_tuples(Y)):
        logger.debug(f"量词 {name}：未列出的延续映射为空集")
    return Quantifier(Y, R, lambda k: checked.get(k, frozenset()), name=name)


# ========== 选择函数与量词互相转换 ==========
def quantifier_from_selection(sel: SelectionFunction) -> Quantifier:
    """quantify(k) = { k(y) : y ∈ select(k) }"""
    return Quantifier(sel.choice_set, sel.outcome_set,
                      lambda k: frozenset(k(y) for y in sel.select(k)),
                      name=f"image({sel.name})")


def selection_from_quantifier(qf: Quantifier) -> SelectionFunction:
    """select(k) = quantify(k) 在 k 下的完整原像"""
    choices = enumerate_tuples(qf.choice_set)

    def select(k: FinFun) -> FrozenSet[TupleValue]:
        good = qf.quantify(k)
        return frozenset(y for y in choices if k(y) in good)

    return SelectionFunction(qf.choice_set, qf.outcome_set, select, name=f"preimage({qf.name})")
