from .operators import (
    SelectionFunction, Quantifier, outcome_value, numeric_values,
    argmax_selection, max_quantifier, table_selection, table_quantifier,
    quantifier_from_selection, selection_from_quantifier,
)
from .players import decision_from_selection, decision_from_quantifier
from .oracles import JointProfile, UtilityTable, nash_oracle, profile_labels, optimal_profiles

__all__ = [
    "SelectionFunction", "Quantifier", "outcome_value", "numeric_values",
    "argmax_selection", "max_quantifier", "table_selection", "table_quantifier",
    "quantifier_from_selection", "selection_from_quantifier",
    "decision_from_selection", "decision_from_quantifier",
    "JointProfile", "UtilityTable", "nash_oracle", "profile_labels", "optimal_profiles",
]
