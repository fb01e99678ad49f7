from functools import lru_cache
from typing import Optional, Sequence

from src.agents.operators import Quantifier, SelectionFunction
from src.core import Pregame, decision
from src.finite import FinSet, render_ports
from src.utils.errors import ShapeError


def _check_operator_shape(operator, Y, R, what: str) -> None:
    if tuple(operator.choice_set) != tuple(Y) or tuple(operator.outcome_set) != tuple(R):
        raise ShapeError(
            f"{what} {operator.name} is typed {render_ports(operator.choice_set)} -> "
            f"{render_ports(operator.outcome_set)}, decision needs {render_ports(Y)} -> {render_ports(R)}"
        )


def decision_from_selection(X: Sequence[FinSet], Y: Sequence[FinSet], R: Sequence[FinSet],
                            sel: SelectionFunction, name: str = "P",
                            cap: Optional[int] = None) -> Pregame:
    """σ E (x, k) ⟺ σ(x) ∈ ε k"""
    _check_operator_shape(sel, Y, R, "selection function")
    select = lru_cache(maxsize=None)(sel.select)
    return decision(X, Y, R, lambda sigma, x, k: sigma(x) in select(k), name=name, cap=cap)


def decision_from_quantifier(X: Sequence[FinSet], Y: Sequence[FinSet], R: Sequence[FinSet],
                             qf: Quantifier, name: str = "P",
                             cap: Optional[int] = None) -> Pregame:
    """σ E (x, k) ⟺ k(σ(x)) ∈ φ k"""
    _check_operator_shape(qf, Y, R, "quantifier")
    quantify = lru_cache(maxsize=None)(qf.quantify)
    return decision(X, Y, R, lambda sigma, x, k: k(sigma(x)) in quantify(k), name=name, cap=cap)
