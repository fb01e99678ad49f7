from typing import List

from src.dsl.ast_nodes import (
    ArgmaxClause, Ast, Builtin, Compose, Dual, Expr, FunDecl, GameDecl, MaxClause,
    PlayerDecl, QuantifierClause, Rationality, Ref, SelectionClause, SetDecl,
    TableEntry, Tensor, TupleLit, TypeExpr,
)

INDENT = "  "

# 优先级：; 为 0，|| 为 1，原子（含 ^*）为 2
_PRECEDENCE = {Compose: 0, Tensor: 1}


def format_type(t: TypeExpr) -> str:
    return "*".join(t.names) if t.names else "1"


def format_tuple_lit(t: TupleLit) -> str:
    if len(t.items) == 1:
        return t.items[0]
    return "(" + ", ".join(t.items) + ")"


def _precedence(expr: Expr) -> int:
    return _PRECEDENCE.get(type(expr), 2)


def _wrap(expr: Expr, minimum: int) -> str:
    text = format_expr(expr)
    return f"({text})" if _precedence(expr) < minimum else text


def format_expr(expr: Expr) -> str:
    """最少括号地打印表达式；左结合链不加括号"""
    if isinstance(expr, Ref):
        return expr.name
    if isinstance(expr, Builtin):
        return f"{expr.op}[{', '.join(format_type(a) for a in expr.args)}]"
    if isinstance(expr, Dual):
        inner = format_expr(expr.inner)
        if not isinstance(expr.inner, (Ref, Builtin)):
            inner = f"({inner})"
        return f"{inner}^*"
    if isinstance(expr, Compose):
        return f"{_wrap(expr.left, 0)} ; {_wrap(expr.right, 1)}"
    if isinstance(expr, Tensor):
        return f"{_wrap(expr.left, 1)} || {_wrap(expr.right, 2)}"
    raise TypeError(f"not an expression node: {expr!r}")


def _format_entry(entry: TableEntry) -> str:
    images = ", ".join(format_tuple_lit(t) for t in entry.images)
    members = ", ".join(format_tuple_lit(t) for t in entry.members)
    return f"{INDENT}[{images}] -> {{{members}}}"


def format_rationality(clause: Rationality) -> str:
    if isinstance(clause, (ArgmaxClause, MaxClause)):
        keyword = "argmax" if isinstance(clause, ArgmaxClause) else "max"
        return keyword if clause.coordinate is None else f"{keyword} [{clause.coordinate}]"
    keyword = "selection" if isinstance(clause, SelectionClause) else "quantifier"
    if not clause.entries:
        return f"{keyword} {{}}"
    lines = [f"{keyword} {{"] + [_format_entry(e) for e in clause.entries] + ["}"]
    return "\n".join(lines)


def format_decl(decl) -> str:
    if isinstance(decl, SetDecl):
        return f"set {decl.name} = {{{', '.join(decl.elements)}}}"
    if isinstance(decl, FunDecl):
        lines = [f"fun {decl.name} : {format_type(decl.dom)} -> {format_type(decl.cod)} = {{"]
        lines += [f"{INDENT}{format_tuple_lit(x)} -> {format_tuple_lit(y)}" for x, y in decl.entries]
        lines.append("}")
        return "\n".join(lines)
    if isinstance(decl, PlayerDecl):
        return (f"player {decl.name} : {format_type(decl.observe)} -> {format_type(decl.choice)} "
                f"feedback {format_type(decl.feedback)} {format_rationality(decl.rationality)}")
    if isinstance(decl, GameDecl):
        return f"game {decl.name} = {format_expr(decl.body)}"
    raise TypeError(f"not a declaration: {decl!r}")


def format_program(ast: Ast) -> str:
    """规范化打印：每个声明一段，末尾换行"""
    blocks: List[str] = [format_decl(d) for d in ast.declarations]
    return "\n".join(blocks) + "\n" if blocks else ""
