from .enumeration_config import *
from .law_config import *
from .cli_config import *

__all__ = [
    # 枚举上限
    "DEFAULT_ENUMERATION_CAP", "EQUILIBRIA_CAP", "EXTENSIONAL_CAP",
    "CAP_ENV_VAR", "resolve_cap",
    # 定律测试
    "DEFAULT_SEED", "DEFAULT_ITERATIONS",
    "MAX_SET_SIZE", "MAX_PORTS", "MAX_DEPTH", "MAX_PROFILES", "RESAMPLE_BUDGET", "LAW_COST_CAP",
    "SIMULTANEOUS_BATTERY", "SEQUENTIAL_BATTERY",
    # CLI
    "EXIT_FAILURE", "EXIT_USAGE",
    "DEFAULT_LOG_LEVEL", "VERBOSE_LOG_LEVEL",
    "DOT_GRAPH_NAME", "DOT_RANKDIR",
]
