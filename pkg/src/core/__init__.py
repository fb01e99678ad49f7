from .pregame import Interface, UNIT, Context, Pregame, Profile, always_rational
from .generators import (
    identity, decision, strategy_label, computation, cocomputation, dual,
    teleological_unit, structural, copy_game, delete_game, swap_game,
)
from .combinators import compose, tensor
from .analysis import (
    check_closed, equilibria, extensional_cost, explain_difference, extensionally_equal,
)

__all__ = [
    "Interface", "UNIT", "Context", "Pregame", "Profile", "always_rational",
    "identity", "decision", "strategy_label", "computation", "cocomputation", "dual",
    "teleological_unit", "structural", "copy_game", "delete_game", "swap_game",
    "compose", "tensor",
    "check_closed", "equilibria", "extensional_cost", "explain_difference", "extensionally_equal",
]
