from typing import Optional

from loguru import logger

from src.agents import decision_from_quantifier, decision_from_selection
from src.core import (
    Pregame, cocomputation, compose, computation, copy_game, delete_game,
    identity, swap_game, teleological_unit, tensor,
)
from src.dsl.printer import format_type
from src.dsl.typecheck import TypedExpr
from src.utils.errors import ElaborationError, PregameError


def _leaf(typed: TypedExpr, cap: Optional[int]) -> Pregame:
    node = typed.node
    if typed.kind == "fun":
        return computation(typed.fun, name=typed.name)
    if typed.kind == "player":
        p = typed.player
        build = decision_from_quantifier if p.uses_quantifier else decision_from_selection
        return build(p.observe, p.choice, p.feedback, p.operator, name=p.name, cap=cap)
    if typed.kind == "tau":
        return teleological_unit(typed.domain.cov)
    if typed.kind == "copy":
        return copy_game(typed.domain.cov)
    if typed.kind == "delete":
        return delete_game(typed.domain.cov)
    if typed.kind == "swap":
        split = len(node.args[0].names)
        return swap_game(typed.domain.cov[:split], typed.domain.cov[split:])
    if typed.kind == "id":
        return identity(typed.domain)
    if typed.kind == "dual":
        inner = typed.children[0]
        if inner.kind == "fun":
            base = inner.name
        else:
            base = f"{inner.kind}[{', '.join(format_type(a) for a in inner.node.args)}]"
        return cocomputation(typed.fun, name=base)
    raise TypeError(f"not a leaf: {typed.kind}")


def elaborate(typed: TypedExpr, cap: Optional[int] = None) -> Pregame:
    """
    结构递归：叶子映射到核心构造子，内部节点映射到 compose/tensor
    核心错误连同叶子的位置一起重新抛出
    """
    if typed.kind == "compose":
        left, right = (elaborate(c, cap) for c in typed.children)
        return compose(right, left)
    if typed.kind == "tensor":
        left, right = (elaborate(c, cap) for c in typed.children)
        return tensor(left, right)
    if typed.kind == "game":
        return elaborate(typed.children[0], cap)
    try:
        game = _leaf(typed, cap)
    except PregameError as e:
        raise ElaborationError(str(e), typed.span, cause=e)
    logger.debug(f"展开 {game.description} : {game.render_type()}")
    return game
