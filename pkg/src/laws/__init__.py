from .generators import PregameSampler, set_pool
from .suites import (
    Counterexample, LawOutcome, LawReport, RANDOM_LAWS, run_random_law, run_laws,
    left_identity, right_identity, associativity, interchange,
    swap_involution, swap_naturality, swap_naturality_computations,
    teleological_case, teleological_naturality,
)

__all__ = [
    "PregameSampler", "set_pool",
    "Counterexample", "LawOutcome", "LawReport", "RANDOM_LAWS", "run_random_law", "run_laws",
    "left_identity", "right_identity", "associativity", "interchange",
    "swap_involution", "swap_naturality", "swap_naturality_computations",
    "teleological_case", "teleological_naturality",
]
