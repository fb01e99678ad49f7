from dataclasses import dataclass
from typing import Optional

from Config import DEFAULT_ITERATIONS, DEFAULT_SEED

COMMANDS = ("check", "equilibria", "laws", "render", "info")
FORMATS = {
    "check": ("text",),
    "equilibria": ("text", "json"),
    "laws": ("text",),
    "render": ("dot",),
    "info": ("text",),
}


@dataclass(frozen=True)
class RunConfig:
    """一次 CLI 调用的完整参数"""
    command: str
    path: Optional[str] = None
    game: Optional[str] = None
    output_format: str = "text"
    seed: int = DEFAULT_SEED
    iterations: int = DEFAULT_ITERATIONS
    cap: Optional[int] = None
    output: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS[self.command]:
            raise ValueError(f"format {self.output_format!r} is not available for {self.command}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be at least 1, got {self.iterations}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.cap is not None and self.cap < 1:
            raise ValueError(f"cap must be positive, got {self.cap}")
        if self.command in ("check", "equilibria", "render", "info") and not self.path:
            raise ValueError(f"{self.command} needs an input file")
        if self.command in ("equilibria", "render") and not self.game:
            raise ValueError(f"{self.command} needs --game")
