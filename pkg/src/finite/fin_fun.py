import itertools
from dataclasses import InitVar, dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from Config import DEFAULT_ENUMERATION_CAP, resolve_cap
from src.finite.fin_set import (
    FinSet, PortList, TupleValue, check_tuple, enumerate_tuples,
    format_tuple, render_ports, tuple_count, tuple_index,
)
from src.utils.errors import DomainTooLarge, InterfaceMismatch, LengthMismatch, ShapeError


@dataclass(frozen=True)
class FinFun:
    """全函数表 dom → cod。images 按 dom 的枚举顺序存放像，同时作为表的身份"""
    dom: PortList
    cod: PortList
    images: Tuple[TupleValue, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "cod", tuple(self.cod))
        object.__setattr__(self, "images", tuple(tuple(y) for y in self.images))
        if not check:
            return
        expected = tuple_count(self.dom)
        if len(self.images) != expected:
            raise ShapeError(
                f"function table {render_ports(self.dom)} -> {render_ports(self.cod)} "
                f"has {len(self.images)} entries, expected {expected}"
            )
        for y in self.images:
            check_tuple(self.cod, y)

    def __call__(self, x: TupleValue) -> TupleValue:
        return self.images[tuple_index(self.dom, tuple(x))]

    @property
    def table(self) -> Dict[TupleValue, TupleValue]:
        return dict(zip(enumerate_tuples(self.dom), self.images))

    @classmethod
    def from_mapping(cls, dom: Sequence[FinSet], cod: Sequence[FinSet],
                     mapping: Mapping[TupleValue, TupleValue]) -> "FinFun":
        """由字典构造；必须覆盖整个定义域"""
        images = []
        for x in enumerate_tuples(dom):
            if x not in mapping:
                raise ShapeError(f"function table is missing an entry for {format_tuple(x)}")
            images.append(tuple(mapping[x]))
        extra = set(mapping) - set(enumerate_tuples(dom))
        if extra:
            raise ShapeError(f"function table has entries outside its domain: "
                             f"{', '.join(sorted(format_tuple(x) for x in extra))}")
        return cls(tuple(dom), tuple(cod), tuple(images))

    @classmethod
    def from_callable(cls, dom: Sequence[FinSet], cod: Sequence[FinSet],
                      fn: Callable[[TupleValue], TupleValue], check: bool = True) -> "FinFun":
        images = tuple(tuple(fn(x)) for x in enumerate_tuples(dom))
        return cls(tuple(dom), tuple(cod), images, check)

    def describe(self) -> str:
        entries = ", ".join(f"{format_tuple(x)}->{format_tuple(y)}"
                            for x, y in zip(enumerate_tuples(self.dom), self.images))
        return "{" + entries + "}"


def enumerate_functions(dom: Sequence[FinSet], cod: Sequence[FinSet],
                        cap: Optional[int] = None) -> List[FinFun]:
    """枚举全部 |cod|^|dom| 个函数表，顺序确定（第一个定义域元组的像变化最慢）"""
    cap = resolve_cap(DEFAULT_ENUMERATION_CAP) if cap is None else cap
    dom, cod = tuple(dom), tuple(cod)
    n_dom = tuple_count(dom)
    n_cod = tuple_count(cod)
    count = n_cod ** n_dom
    if count > cap:
        raise DomainTooLarge(f"functions {render_ports(dom)} -> {render_ports(cod)}", count, cap)
    cod_tuples = enumerate_tuples(cod)
    logger.debug(f"枚举函数 {render_ports(dom)} -> {render_ports(cod)}：共{count}个")
    return [FinFun(dom, cod, images, False)
            for images in itertools.product(cod_tuples, repeat=n_dom)]


def compose_fun(g: FinFun, f: FinFun) -> FinFun:
    """g ∘ f：x ↦ g(f(x))"""
    if f.cod != g.dom:
        raise InterfaceMismatch(
            f"cannot compose functions: codomain {render_ports(f.cod)} "
            f"does not match domain {render_ports(g.dom)}",
            render_ports(f.cod), render_ports(g.dom),
        )
    return FinFun(f.dom, g.cod, tuple(g(y) for y in f.images), False)


# ========== 结构函数：恒等、复制、删除、投影、置换 ==========
def identity_fun(port_list: Sequence[FinSet]) -> FinFun:
    port_list = tuple(port_list)
    return FinFun(port_list, port_list, enumerate_tuples(port_list), False)


def copy_fun(port_list: Sequence[FinSet]) -> FinFun:
    """Δ：X → X++X"""
    port_list = tuple(port_list)
    return FinFun.from_callable(port_list, port_list + port_list, lambda x: x + x, check=False)


def delete_fun(port_list: Sequence[FinSet]) -> FinFun:
    """!：X → 1"""
    port_list = tuple(port_list)
    return FinFun.from_callable(port_list, (), lambda x: (), check=False)


def projection_fun(port_list: Sequence[FinSet], indices: Sequence[int]) -> FinFun:
    port_list = tuple(port_list)
    indices = tuple(indices)
    for i in indices:
        if not 0 <= i < len(port_list):
            raise LengthMismatch(f"projection index {i} out of range for {render_ports(port_list)}")
    cod = tuple(port_list[i] for i in indices)
    return FinFun.from_callable(port_list, cod, lambda x: tuple(x[i] for i in indices), check=False)


def check_permutation(perm: Sequence[int], length: int) -> Tuple[int, ...]:
    perm = tuple(perm)
    if len(perm) != length or sorted(perm) != list(range(length)):
        raise LengthMismatch(f"{list(perm)} is not a permutation of {length} ports")
    return perm


def permutation_fun(port_list: Sequence[FinSet], perm: Sequence[int]) -> FinFun:
    """cod[j] = X[perm[j]]，x ↦ (x[perm[0]], x[perm[1]], ...)"""
    perm = check_permutation(perm, len(port_list))
    return projection_fun(port_list, perm)


def product_fun(f: FinFun, g: FinFun) -> FinFun:
    """f × g：(x1, x2) ↦ (f x1, g x2)"""
    split = len(f.dom)
    return FinFun.from_callable(
        f.dom + g.dom, f.cod + g.cod,
        lambda x: f(x[:split]) + g(x[split:]),
        check=False,
    )


@dataclass(frozen=True)
class StructuralFuns:
    identity: FinFun
    copy: FinFun
    delete: FinFun
    projections: Tuple[FinFun, ...]                       # 到每个端口的投影
    permutations: Dict[Tuple[int, ...], FinFun] = field(hash=False)


def structural_funs(port_list: Sequence[FinSet]) -> StructuralFuns:
    port_list = tuple(port_list)
    return StructuralFuns(
        identity=identity_fun(port_list),
        copy=copy_fun(port_list),
        delete=delete_fun(port_list),
        projections=tuple(projection_fun(port_list, (i,)) for i in range(len(port_list))),
        permutations={perm: permutation_fun(port_list, perm)
                      for perm in itertools.permutations(range(len(port_list)))},
    )
