import os

# 穷举上限（超过即报 DomainTooLarge）
DEFAULT_ENUMERATION_CAP = 10 ** 6   # 函数表/策略集合枚举
EQUILIBRIA_CAP = 10 ** 5            # 闭合博弈的策略组合数
EXTENSIONAL_CAP = 10 ** 6           # |Σ|·|X|·(|R^Y|+|R|)

# 环境变量覆盖（正整数，替换所有默认上限）
CAP_ENV_VAR = "PREGAME_CAP"


def resolve_cap(default: int) -> int:
    """读取上限：环境变量优先，每次调用重新读取"""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be a positive integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{CAP_ENV_VAR} must be a positive integer, got {raw!r}")
    return value
