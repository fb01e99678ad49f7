from .lexer import Token, KEYWORDS, tokenize
from .ast_nodes import (
    Ast, TypeExpr, TupleLit, SetDecl, FunDecl, PlayerDecl, GameDecl,
    ArgmaxClause, MaxClause, TableEntry, SelectionClause, QuantifierClause,
    Ref, Builtin, Dual, Compose, Tensor,
)
from .parser import Parser, parse, parse_source
from .printer import format_program, format_expr, format_type
from .typecheck import Environment, PlayerInfo, TypedExpr, TypeChecker, typecheck
from .elaborate import elaborate
from .program import Program, load_program, load_file, elaborate_game

__all__ = [
    "Token", "KEYWORDS", "tokenize",
    "Ast", "TypeExpr", "TupleLit", "SetDecl", "FunDecl", "PlayerDecl", "GameDecl",
    "ArgmaxClause", "MaxClause", "TableEntry", "SelectionClause", "QuantifierClause",
    "Ref", "Builtin", "Dual", "Compose", "Tensor",
    "Parser", "parse", "parse_source",
    "format_program", "format_expr", "format_type",
    "Environment", "PlayerInfo", "TypedExpr", "TypeChecker", "typecheck",
    "elaborate",
    "Program", "load_program", "load_file", "elaborate_game",
]
