from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from src.utils.errors import Span

# 所有节点的 span 不参与相等比较，便于往返测试直接比较语法树


@dataclass(frozen=True)
class TypeExpr:
    names: Tuple[str, ...]            # 空元组即类型 1
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class TupleLit:
    items: Tuple[str, ...]
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class SetDecl:
    name: str
    elements: Tuple[str, ...]
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class FunDecl:
    name: str
    dom: TypeExpr
    cod: TypeExpr
    entries: Tuple[Tuple[TupleLit, TupleLit], ...]
    span: Span = field(compare=False, default=None)


# ========== 参与者的理性子句 ==========
@dataclass(frozen=True)
class ArgmaxClause:
    coordinate: Optional[int] = None  # 1 起始；省略即 1
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class MaxClause:
    coordinate: Optional[int] = None
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class TableEntry:
    images: Tuple[TupleLit, ...]      # 延续在选择元组枚举顺序下的像
    members: Tuple[TupleLit, ...]
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class SelectionClause:
    entries: Tuple[TableEntry, ...]
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class QuantifierClause:
    entries: Tuple[TableEntry, ...]
    span: Span = field(compare=False, default=None)


Rationality = Union[ArgmaxClause, MaxClause, SelectionClause, QuantifierClause]


@dataclass(frozen=True)
class PlayerDecl:
    name: str
    observe: TypeExpr
    choice: TypeExpr
    feedback: TypeExpr
    rationality: Rationality
    span: Span = field(compare=False, default=None)


# ========== 博弈表达式 ==========
@dataclass(frozen=True)
class Ref:
    name: str
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Builtin:
    op: str                           # tau | copy | delete | id | swap
    args: Tuple[TypeExpr, ...]
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Dual:
    inner: "Expr"
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Compose:
    """图序：left ; right 即 right ∘ left"""
    left: "Expr"
    right: "Expr"
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"
    span: Span = field(compare=False, default=None)


Expr = Union[Ref, Builtin, Dual, Compose, Tensor]


@dataclass(frozen=True)
class GameDecl:
    name: str
    body: Expr
    span: Span = field(compare=False, default=None)


Decl = Union[SetDecl, FunDecl, PlayerDecl, GameDecl]


@dataclass(frozen=True)
class Ast:
    declarations: Tuple[Decl, ...]
