import re
from dataclasses import dataclass
from typing import List

from src.utils.errors import LexError, Span

KEYWORDS = frozenset({
    "set", "fun", "player", "game", "feedback",
    "argmax", "max", "selection", "quantifier",
    "tau", "copy", "delete", "id", "swap",
})

# 顺序即优先级：注释先于数字和 "->"，数字先于 "-"
_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r\n]+)
  | (?P<comment>--[^\n]*)
  | (?P<number>-?\d+(?:/\d+|\.\d+)?)
  | (?P<symbol>->|\^\*|\|\||[=,{}:*;()\[\]])
  | (?P<word>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str     # keyword | ident | symbol | number
    text: str
    span: Span

    def __repr__(self) -> str:
        return f"{self.kind} {self.text!r}@{self.span.line}:{self.span.column}"


def _byte_len(text: str) -> int:
    return len(text.encode("utf-8"))


def tokenize(source: str) -> List[Token]:
    """
    词法分析：`--` 开始行注释，空白与注释不产生记号
    start/end 为 UTF-8 字节偏移，column 按字符计
    """
    tokens = []
    pos, offset, line, line_start = 0, 0, 1, 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            span = Span(line, pos - line_start + 1, offset, offset + _byte_len(source[pos]))
            raise LexError(f"illegal character {source[pos]!r}", span)
        kind = match.lastgroup
        text = match.group()
        if kind not in ("space", "comment"):
            span = Span(line, pos - line_start + 1, offset, offset + _byte_len(text))
            if kind == "word":
                kind = "keyword" if text in KEYWORDS else "ident"
            tokens.append(Token(kind, text, span))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        offset += _byte_len(text)
        pos = match.end()
    return tokens
