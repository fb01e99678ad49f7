from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from loguru import logger

from src.agents import (
    Quantifier, SelectionFunction, argmax_selection, max_quantifier,
    table_quantifier, table_selection,
)
from src.core import Interface
from src.dsl.ast_nodes import (
    ArgmaxClause, Ast, Builtin, Compose, Dual, Expr, FunDecl, GameDecl, MaxClause,
    PlayerDecl, Ref, SelectionClause, SetDecl, TableEntry, Tensor, TupleLit, TypeExpr,
)
from src.finite import (
    FinFun, FinSet, PortList, TupleValue, copy_fun, delete_fun, enumerate_tuples,
    format_tuple, identity_fun, permutation_fun, render_ports,
)
from src.utils.errors import (
    DslInterfaceMismatch, DuplicateDecl, InvalidDual, PregameError, Span,
    TableError, UnknownName,
)

Operator = Union[SelectionFunction, Quantifier]


@dataclass(frozen=True, eq=False)
class PlayerInfo:
    """已检查的参与者声明：X → Y ⊗ R* 以及对应的选择函数或量词"""
    name: str
    observe: PortList
    choice: PortList
    feedback: PortList
    operator: Operator
    span: Span

    @property
    def uses_quantifier(self) -> bool:
        return isinstance(self.operator, Quantifier)


@dataclass(frozen=True, eq=False)
class TypedExpr:
    """
    带接口标注的表达式树
    :param kind: fun | player | game | tau | copy | delete | id | swap | dual | compose | tensor
    :param fun: 计算型节点对应的函数表（可以取对偶）
    """
    node: Expr
    kind: str
    domain: Interface
    codomain: Interface
    children: Tuple["TypedExpr", ...] = ()
    name: str = ""
    fun: Optional[FinFun] = None
    player: Optional[PlayerInfo] = None

    @property
    def span(self) -> Span:
        return self.node.span

    def render_type(self) -> str:
        return f"{self.domain.render()} → {self.codomain.render()}"


@dataclass
class Environment:
    """单一命名空间：集合、函数、参与者、博弈，按声明顺序"""
    sets: Dict[str, FinSet] = field(default_factory=dict)
    funs: Dict[str, FinFun] = field(default_factory=dict)
    players: Dict[str, PlayerInfo] = field(default_factory=dict)
    games: Dict[str, TypedExpr] = field(default_factory=dict)
    spans: Dict[str, Span] = field(default_factory=dict)

    def declare(self, name: str, span: Span) -> None:
        if name in self.spans:
            first = self.spans[name]
            raise DuplicateDecl(f"{name} is already declared at line {first.line}", span)
        self.spans[name] = span


class TypeChecker:
    def __init__(self):
        self.env = Environment()

    # ========== 声明 ==========
    def check_program(self, ast: Ast) -> Environment:
        for decl in ast.declarations:
            if isinstance(decl, SetDecl):
                self._set(decl)
            elif isinstance(decl, FunDecl):
                self._fun(decl)
            elif isinstance(decl, PlayerDecl):
                self._player(decl)
            elif isinstance(decl, GameDecl):
                self._game(decl)
        logger.debug(f"类型检查完成：{len(self.env.sets)}个集合，{len(self.env.funs)}个函数，"
                     f"{len(self.env.players)}个参与者，{len(self.env.games)}个博弈")
        return self.env

    def _set(self, decl: SetDecl) -> None:
        self.env.declare(decl.name, decl.span)
        seen = set()
        for element in decl.elements:
            if element in seen:
                raise TableError(f"set {decl.name} lists element {element} twice", decl.span)
            seen.add(element)
        self.env.sets[decl.name] = FinSet(decl.name, decl.elements)

    def resolve_type(self, t: TypeExpr) -> PortList:
        result = []
        for name in t.names:
            if name not in self.env.sets:
                if name in self.env.spans:
                    raise UnknownName(f"{name} is not a set", t.span)
                raise UnknownName(f"unknown set {name}", t.span)
            result.append(self.env.sets[name])
        return tuple(result)

    def _literal(self, lit: TupleLit, port_list: PortList, what: str) -> TupleValue:
        if len(lit.items) != len(port_list):
            raise TableError(f"{what} {lit_text(lit)} has {len(lit.items)} components, "
                             f"expected {len(port_list)} for {render_ports(port_list)}", lit.span)
        for item, port in zip(lit.items, port_list):
            if item not in port:
                raise TableError(f"{item} is not an element of {port.name}", lit.span)
        return tuple(lit.items)

    def _fun(self, decl: FunDecl) -> None:
        self.env.declare(decl.name, decl.span)
        dom, cod = self.resolve_type(decl.dom), self.resolve_type(decl.cod)
        mapping, spans = {}, {}
        for x_lit, y_lit in decl.entries:
            x = self._literal(x_lit, dom, "argument")
            y = self._literal(y_lit, cod, "value")
            if x in mapping:
                raise TableError(f"fun {decl.name} defines {format_tuple(x)} twice "
                                 f"(first at line {spans[x].line})", x_lit.span)
            mapping[x], spans[x] = y, x_lit.span
        missing = [x for x in enumerate_tuples(dom) if x not in mapping]
        if missing:
            raise TableError(f"fun {decl.name} is not total: missing "
                             f"{', '.join(format_tuple(x) for x in missing)}", decl.span)
        self.env.funs[decl.name] = FinFun.from_mapping(dom, cod, mapping)

    def _player(self, decl: PlayerDecl) -> None:
        self.env.declare(decl.name, decl.span)
        X = self.resolve_type(decl.observe)
        Y = self.resolve_type(decl.choice)
        R = self.resolve_type(decl.feedback)
        operator = self._operator(decl, Y, R)
        self.env.players[decl.name] = PlayerInfo(decl.name, X, Y, R, operator, decl.span)

    def _operator(self, decl: PlayerDecl, Y: PortList, R: PortList) -> Operator:
        clause = decl.rationality
        if isinstance(clause, (ArgmaxClause, MaxClause)):
            coordinate = (clause.coordinate or 1) - 1
            if coordinate >= len(R):
                raise TableError(f"coordinate {coordinate + 1} out of range for feedback "
                                 f"{render_ports(R)} of {decl.name}", clause.span)
            build = argmax_selection if isinstance(clause, ArgmaxClause) else max_quantifier
            try:
                return build(Y, R, coordinate)
            except PregameError as e:
                raise TableError(f"{decl.name}: {e}", clause.span)
        members_of = Y if isinstance(clause, SelectionClause) else R
        table = {}
        for entry in clause.entries:
            k = self._continuation(entry, Y, R)
            if k in table:
                raise TableError(f"{decl.name} lists continuation {k.describe()} twice", entry.span)
            table[k] = [self._literal(m, members_of, "member") for m in entry.members]
        if len(table) < len(enumerate_tuples(R)) ** len(enumerate_tuples(Y)):
            logger.warning(f"参与者 {decl.name} 的表未覆盖全部延续，缺失的延续映射为空集")
        build = table_selection if isinstance(clause, SelectionClause) else table_quantifier
        return build(Y, R, table, name=decl.name)

    def _continuation(self, entry: TableEntry, Y: PortList, R: PortList) -> FinFun:
        expected = len(enumerate_tuples(Y))
        if len(entry.images) != expected:
            raise TableError(f"continuation lists {len(entry.images)} images, expected {expected} "
                             f"(one per element of {render_ports(Y)})", entry.span)
        images = tuple(self._literal(lit, R, "outcome") for lit in entry.images)
        return FinFun(Y, R, images)

    def _game(self, decl: GameDecl) -> None:
        typed = self.check_expr(decl.body)
        self.env.declare(decl.name, decl.span)
        self.env.games[decl.name] = typed
        logger.debug(f"博弈 {decl.name} : {typed.render_type()}")

    # ========== 表达式 ==========
    def check_expr(self, expr: Expr) -> TypedExpr:
        if isinstance(expr, Ref):
            return self._ref(expr)
        if isinstance(expr, Builtin):
            return self._builtin(expr)
        if isinstance(expr, Dual):
            return self._dual(expr)
        if isinstance(expr, Compose):
            left, right = self.check_expr(expr.left), self.check_expr(expr.right)
            if left.codomain != right.domain:
                raise DslInterfaceMismatch(
                    f"cannot compose {left.codomain.render()} with {right.domain.render()}",
                    expr.span, left.codomain.render(), right.domain.render(),
                )
            return TypedExpr(expr, "compose", left.domain, right.codomain, (left, right))
        if isinstance(expr, Tensor):
            left, right = self.check_expr(expr.left), self.check_expr(expr.right)
            return TypedExpr(expr, "tensor", left.domain.tensor(right.domain),
                             left.codomain.tensor(right.codomain), (left, right))
        raise TypeError(f"not an expression node: {expr!r}")

    def _ref(self, expr: Ref) -> TypedExpr:
        env, name = self.env, expr.name
        if name in env.funs:
            f = env.funs[name]
            return TypedExpr(expr, "fun", Interface(f.dom, ()), Interface(f.cod, ()), name=name, fun=f)
        if name in env.players:
            p = env.players[name]
            return TypedExpr(expr, "player", Interface(p.observe, ()), Interface(p.choice, p.feedback),
                             name=name, player=p)
        if name in env.games:
            g = env.games[name]
            return TypedExpr(expr, "game", g.domain, g.codomain, (g,), name=name)
        if name in env.sets:
            raise UnknownName(f"{name} is a set, expected a fun, player or game", expr.span)
        raise UnknownName(f"unknown name {name}", expr.span)

    def _builtin(self, expr: Builtin) -> TypedExpr:
        args = [self.resolve_type(a) for a in expr.args]
        S = args[0]
        if expr.op == "tau":
            return TypedExpr(expr, "tau", Interface(S, S), Interface((), ()))
        if expr.op == "copy":
            f = copy_fun(S)
            return TypedExpr(expr, "copy", Interface(f.dom, ()), Interface(f.cod, ()), fun=f)
        if expr.op == "delete":
            f = delete_fun(S)
            return TypedExpr(expr, "delete", Interface(f.dom, ()), Interface(f.cod, ()), fun=f)
        if expr.op == "swap":
            T = args[1]
            perm = list(range(len(S), len(S) + len(T))) + list(range(len(S)))
            f = permutation_fun(S + T, perm)
            return TypedExpr(expr, "swap", Interface(f.dom, ()), Interface(f.cod, ()), fun=f)
        # id[S] 或 id[S, T]（T 为逆变端口）
        contra = args[1] if len(args) > 1 else ()
        interface = Interface(S, contra)
        f = identity_fun(S) if len(args) == 1 else None
        return TypedExpr(expr, "id", interface, interface, fun=f)

    def _dual(self, expr: Dual) -> TypedExpr:
        inner = self.check_expr(expr.inner)
        if inner.fun is None or inner.kind not in ("fun", "copy", "delete", "swap", "id"):
            what = inner.name or inner.kind
            raise InvalidDual(f"only computations can be dualized, {what} is a {inner.kind}", expr.span)
        f = inner.fun
        return TypedExpr(expr, "dual", Interface((), f.cod), Interface((), f.dom), (inner,),
                         name=inner.name, fun=f)


def lit_text(lit: TupleLit) -> str:
    return lit.items[0] if len(lit.items) == 1 else "(" + ", ".join(lit.items) + ")"


def typecheck(ast: Ast) -> Environment:
    return TypeChecker().check_program(ast)
