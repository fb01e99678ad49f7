from .schemas import (
    SimultaneousGame, SequentialGame, outcome_rules, simultaneous_diagram,
    selection_equilibria, sequential_diagram, sequential_profile_labels,
)
from .classics import (
    ClassicInstance, prisoners_dilemma, matching_pennies, coordination,
    entry_deterrence, classic_instances,
)
from .files import GAMES_DIR, corpus_path, corpus_files, load_corpus_file

__all__ = [
    "SimultaneousGame", "SequentialGame", "outcome_rules", "simultaneous_diagram",
    "selection_equilibria", "sequential_diagram", "sequential_profile_labels",
    "ClassicInstance", "prisoners_dilemma", "matching_pennies", "coordination",
    "entry_deterrence", "classic_instances",
    "GAMES_DIR", "corpus_path", "corpus_files", "load_corpus_file",
]
