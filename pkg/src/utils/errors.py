from dataclasses import dataclass
from typing import Iterable, Optional


class PregameError(Exception):
    """所有前博弈相关错误的基类"""


class InterfaceMismatch(PregameError):
    """接口不匹配（组合时 cod(g) != dom(h)，或函数表复合时端口不一致）"""

    def __init__(self, message: str, left: str = "", right: str = ""):
        super().__init__(message)
        self.left = left
        self.right = right


class DomainTooLarge(PregameError):
    """穷举规模超过上限"""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: {count} exceeds enumeration cap {cap}")
        self.what = what
        self.count = count
        self.cap = cap


class EmptyChoiceSet(PregameError):
    """决策的选择集合为空（argmax 无定义）"""


class NotClosed(PregameError):
    """博弈不是闭合的（X 或 R 非空）"""

    def __init__(self, message: str, open_cov: tuple = (), open_contra: tuple = ()):
        super().__init__(message)
        self.open_cov = open_cov
        self.open_contra = open_contra


class LengthMismatch(PregameError):
    """置换长度与端口列表长度不一致"""


class NonNumericOutcome(PregameError):
    """收益标签无法解析为有理数"""


class ShapeError(PregameError):
    """博弈数据形状不一致（选择函数/量词/收益表与端口不符）"""


# ========== DSL 错误（全部带源码位置） ==========
@dataclass(frozen=True)
class Span:
    line: int     # 从1开始
    column: int   # 从1开始
    start: int    # 字节偏移（含）
    end: int      # 字节偏移（不含）

    def cover(self, other: "Span") -> "Span":
        """合并两个位置区间"""
        first, last = (self, other) if self.start <= other.start else (other, self)
        return Span(first.line, first.column, first.start, max(self.end, other.end))


class DslError(PregameError):
    kind = "error"

    def __init__(self, message: str, span: Span):
        super().__init__(message)
        self.message = message
        self.span = span

    def render(self, source: str, path: str = "<input>") -> str:
        """格式化为 path:line:col: kind: message，并附带源码行与插入符"""
        header = f"{path}:{self.span.line}:{self.span.column}: {self.kind}: {self.message}"
        lines = source.splitlines()
        if not lines or self.span.line > len(lines):
            return header
        text = lines[self.span.line - 1]
        width = max(1, min(self.span.end - self.span.start, len(text) - self.span.column + 1))
        caret = " " * (self.span.column - 1) + "^" * width
        return f"{header}\n  {text}\n  {caret}"


class LexError(DslError):
    kind = "lex error"


class ParseError(DslError):
    kind = "parse error"

    def __init__(self, message: str, span: Span, expected: Iterable[str] = ()):
        self.expected = tuple(sorted(set(expected)))
        if self.expected:
            message = f"{message}; expected one of: {', '.join(self.expected)}"
        super().__init__(message, span)


class UnknownName(DslError):
    kind = "unknown name"


class DuplicateDecl(DslError):
    kind = "duplicate declaration"


class TableError(DslError):
    kind = "table error"


class DslInterfaceMismatch(DslError):
    kind = "interface mismatch"

    def __init__(self, message: str, span: Span, left: str = "", right: str = ""):
        super().__init__(message, span)
        self.left = left
        self.right = right


class ElaborationError(DslError):
    kind = "elaboration error"

    def __init__(self, message: str, span: Span, cause: Optional[PregameError] = None):
        super().__init__(message, span)
        self.cause = cause


class InvalidDual(DslError):
    kind = "invalid dual"
