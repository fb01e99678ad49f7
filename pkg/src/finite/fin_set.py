import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, Sequence, Tuple

from loguru import logger

from src.utils.errors import ShapeError

# 元组值：每个端口一个元素标签；空元组即唯一值 •
TupleValue = Tuple[str, ...]
BULLET = "•"


@dataclass(frozen=True)
class FinSet:
    """有名字的有限集合，元素顺序即规范枚举顺序"""
    name: str
    elements: Tuple[str, ...]

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        if len(set(elements)) != len(elements):
            duplicated = sorted({e for e in elements if elements.count(e) > 1})
            raise ShapeError(f"set {self.name} has duplicate elements: {', '.join(duplicated)}")
        if not elements:
            logger.warning(f"空集合 {self.name}：决策不能以它作为选择集合")

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def index_of(self, label: str) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise ShapeError(f"{label!r} is not an element of set {self.name}")

    def __contains__(self, label) -> bool:
        return label in self._positions

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return self.name


PortList = Tuple[FinSet, ...]


def render_ports(port_list: Sequence[FinSet]) -> str:
    """端口列表的文本形式：X*Y，空列表为 1"""
    if not port_list:
        return "1"
    return "*".join(p.name for p in port_list)


def tuple_count(port_list: Sequence[FinSet]) -> int:
    """Π|port_i|，空积为1"""
    return math.prod(len(p) for p in port_list)


@lru_cache(maxsize=4096)
def _enumerate(port_list: PortList) -> Tuple[TupleValue, ...]:
    return tuple(itertools.product(*(p.elements for p in port_list)))


def enumerate_tuples(port_list: Sequence[FinSet]) -> Tuple[TupleValue, ...]:
    """按分量下标的字典序枚举所有元组；空端口列表只有 [•]"""
    return _enumerate(tuple(port_list))


def tuple_index(port_list: Sequence[FinSet], value: TupleValue) -> int:
    """元组在枚举顺序中的位置（混合进制）"""
    if len(value) != len(port_list):
        raise ShapeError(
            f"tuple {format_tuple(value)} has {len(value)} components, "
            f"expected {len(port_list)} for {render_ports(port_list)}"
        )
    index = 0
    for port, label in zip(port_list, value):
        index = index * len(port) + port.index_of(label)
    return index


def check_tuple(port_list: Sequence[FinSet], value: TupleValue) -> TupleValue:
    """校验元组属于端口列表，返回规范化后的元组"""
    value = tuple(value)
    tuple_index(port_list, value)
    return value


def format_tuple(value: TupleValue) -> str:
    if len(value) == 0:
        return BULLET
    if len(value) == 1:
        return value[0]
    return "(" + ",".join(value) + ")"
