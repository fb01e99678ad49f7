from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from loguru import logger

from src.core import Pregame
from src.dsl.ast_nodes import Ast
from src.dsl.elaborate import elaborate
from src.dsl.lexer import tokenize
from src.dsl.parser import parse
from src.dsl.typecheck import Environment, TypedExpr, typecheck
from src.utils.errors import Span, UnknownName


@dataclass(frozen=True, eq=False)
class Program:
    """已通过类型检查的 .pregame 源程序"""
    source: str
    ast: Ast
    environment: Environment
    path: str = "<input>"

    @property
    def game_names(self) -> List[str]:
        return list(self.environment.games)

    def typed_game(self, name: str) -> TypedExpr:
        if name not in self.environment.games:
            known = ", ".join(self.game_names) or "none"
            raise UnknownName(f"no game named {name} (declared games: {known})", Span(1, 1, 0, 0))
        return self.environment.games[name]


def load_program(source: str, path: str = "<input>") -> Program:
    """tokenize → parse → typecheck"""
    ast = parse(tokenize(source), source)
    environment = typecheck(ast)
    logger.debug(f"已加载 {path}：博弈 {list(environment.games)}")
    return Program(source, ast, environment, path)


def load_file(path) -> Program:
    path = Path(path)
    return load_program(path.read_text(encoding="utf-8"), str(path))


def elaborate_game(program: Program, name: str, cap: Optional[int] = None) -> Pregame:
    return elaborate(program.typed_game(name), cap)
