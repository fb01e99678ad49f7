from pathlib import Path
from typing import List

from loguru import logger

from src.dsl import Program, load_file

# 语料文件与 Config、Static 同级部署
GAMES_DIR = Path(__file__).resolve().parents[2] / "Static" / "games"
SUFFIX = ".pregame"


def corpus_path(name: str) -> Path:
    file_name = name if name.endswith(SUFFIX) else name + SUFFIX
    return GAMES_DIR / file_name


def corpus_files() -> List[Path]:
    return sorted(GAMES_DIR.glob(f"*{SUFFIX}"))


def load_corpus_file(name: str) -> Program:
    """加载 Static/games/<name>.pregame"""
    path = corpus_path(name)
    if not path.exists():
        raise FileNotFoundError(f"corpus file {path} does not exist")
    logger.debug(f"加载语料文件 {path.name}")
    return load_file(path)
