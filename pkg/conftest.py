import sys
from pathlib import Path

import pytest

# 项目根目录（Config 与 src 所在处）
ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.finite import FinSet  # noqa: E402


@pytest.fixture
def games_dir() -> Path:
    return ROOT / "Static" / "games"


@pytest.fixture
def two() -> FinSet:
    return FinSet("B", ("b0", "b1"))


@pytest.fixture
def three() -> FinSet:
    return FinSet("C", ("c0", "c1", "c2"))


@pytest.fixture
def payoffs() -> FinSet:
    return FinSet("U", ("0", "1", "2", "3"))


@pytest.fixture
def write_game(tmp_path):
    """把源码写进临时 .pregame 文件，返回路径字符串"""
    def _write(source: str, name: str = "game.pregame") -> str:
        path = tmp_path / name
        path.write_text(source, encoding="utf-8")
        return str(path)
    return _write
