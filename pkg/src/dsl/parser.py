from typing import List, Optional, Sequence, Tuple

from src.dsl.ast_nodes import (
    ArgmaxClause, Ast, Builtin, Compose, Dual, Expr, FunDecl, GameDecl, MaxClause,
    PlayerDecl, QuantifierClause, Rationality, Ref, SelectionClause, SetDecl,
    TableEntry, Tensor, TupleLit, TypeExpr,
)
from src.dsl.lexer import Token, tokenize
from src.utils.errors import ParseError, Span

DECL_KEYWORDS = ("set", "fun", "player", "game")
BUILTINS = ("tau", "copy", "delete", "id", "swap")


class Parser:
    """递归下降语法分析（LL(1)）；`;` 结合得比 `||` 松，二者都左结合"""

    def __init__(self, tokens: Sequence[Token], source: str = ""):
        self.tokens = list(tokens)
        self.pos = 0
        # 偏移按 UTF-8 字节，列按字符
        end = len(source.encode("utf-8"))
        if self.tokens and end < self.tokens[-1].span.end:
            end = self.tokens[-1].span.end
        line = source.count("\n") + 1
        column = len(source) - (source.rfind("\n") + 1) + 1 if source else 1
        if not source and self.tokens:
            last = self.tokens[-1].span
            line, column = last.line, last.column + (last.end - last.start)
        self.eof_span = Span(line, column, end, end)

    # ========== 记号辅助 ==========
    def _peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _at(self, kind: str, text: Optional[str] = None) -> bool:
        tok = self._peek()
        return tok is not None and tok.kind == kind and (text is None or tok.text == text)

    def _at_symbol(self, text: str) -> bool:
        return self._at("symbol", text)

    def _fail(self, expected: Sequence[str]) -> ParseError:
        tok = self._peek()
        if tok is None:
            return ParseError("unexpected end of input", self.eof_span, expected)
        return ParseError(f"unexpected {tok.kind} {tok.text!r}", tok.span, expected)

    def _expect(self, kind: str, text: Optional[str] = None) -> Token:
        if self._at(kind, text):
            tok = self.tokens[self.pos]
            self.pos += 1
            return tok
        raise self._fail([repr(text) if text else kind])

    def _symbol(self, text: str) -> Token:
        return self._expect("symbol", text)

    def _keyword(self, text: str) -> Token:
        return self._expect("keyword", text)

    # ========== 程序与声明 ==========
    def parse_program(self) -> Ast:
        decls = []
        while self._peek() is not None:
            tok = self._peek()
            if tok.kind == "keyword" and tok.text == "set":
                decls.append(self._set_decl())
            elif tok.kind == "keyword" and tok.text == "fun":
                decls.append(self._fun_decl())
            elif tok.kind == "keyword" and tok.text == "player":
                decls.append(self._player_decl())
            elif tok.kind == "keyword" and tok.text == "game":
                decls.append(self._game_decl())
            else:
                raise self._fail([repr(k) for k in DECL_KEYWORDS])
        return Ast(tuple(decls))

    def _element(self) -> Token:
        if self._at("ident") or self._at("number"):
            tok = self.tokens[self.pos]
            self.pos += 1
            return tok
        raise self._fail(["ident", "number"])

    def _set_decl(self) -> SetDecl:
        start = self._keyword("set")
        name = self._expect("ident")
        self._symbol("=")
        self._symbol("{")
        elements = [self._element().text]
        while self._at_symbol(","):
            self.pos += 1
            elements.append(self._element().text)
        end = self._symbol("}")
        return SetDecl(name.text, tuple(elements), start.span.cover(end.span))

    def _type(self) -> TypeExpr:
        if self._at("number", "1"):
            tok = self.tokens[self.pos]
            self.pos += 1
            return TypeExpr((), tok.span)
        first = self._expect("ident") if self._at("ident") else None
        if first is None:
            raise self._fail(["ident", "'1'"])
        names, span = [first.text], first.span
        while self._at_symbol("*"):
            self.pos += 1
            tok = self._expect("ident")
            names.append(tok.text)
            span = span.cover(tok.span)
        return TypeExpr(tuple(names), span)

    def _tuple(self) -> TupleLit:
        if self._at_symbol("("):
            start = self._symbol("(")
            items = []
            if not self._at_symbol(")"):
                items.append(self._element().text)
                while self._at_symbol(","):
                    self.pos += 1
                    items.append(self._element().text)
            end = self._symbol(")")
            return TupleLit(tuple(items), start.span.cover(end.span))
        tok = self._element()
        return TupleLit((tok.text,), tok.span)

    def _fun_decl(self) -> FunDecl:
        start = self._keyword("fun")
        name = self._expect("ident")
        self._symbol(":")
        dom = self._type()
        self._symbol("->")
        cod = self._type()
        self._symbol("=")
        self._symbol("{")
        entries = [self._fun_entry()]
        while not self._at_symbol("}"):
            if self._peek() is None:
                raise self._fail(["'}'", "'('", "ident", "number"])
            entries.append(self._fun_entry())
        end = self._symbol("}")
        return FunDecl(name.text, dom, cod, tuple(entries), start.span.cover(end.span))

    def _fun_entry(self) -> Tuple[TupleLit, TupleLit]:
        x = self._tuple()
        self._symbol("->")
        y = self._tuple()
        if self._at_symbol(","):
            self.pos += 1
        return x, y

    def _player_decl(self) -> PlayerDecl:
        start = self._keyword("player")
        name = self._expect("ident")
        self._symbol(":")
        observe = self._type()
        self._symbol("->")
        choice = self._type()
        self._keyword("feedback")
        feedback = self._type()
        clause = self._rationality()
        return PlayerDecl(name.text, observe, choice, feedback, clause, start.span.cover(clause.span))

    def _coordinate(self) -> Tuple[Optional[int], Optional[Span]]:
        if not self._at_symbol("["):
            return None, None
        self._symbol("[")
        tok = self._expect("number")
        if not tok.text.isdigit() or int(tok.text) < 1:
            raise ParseError(f"coordinate must be a positive integer, got {tok.text!r}", tok.span)
        end = self._symbol("]")
        return int(tok.text), end.span

    def _rationality(self) -> Rationality:
        tok = self._peek()
        if self._at("keyword", "argmax") or self._at("keyword", "max"):
            self.pos += 1
            coordinate, end = self._coordinate()
            span = tok.span.cover(end) if end else tok.span
            return (ArgmaxClause if tok.text == "argmax" else MaxClause)(coordinate, span)
        if self._at("keyword", "selection") or self._at("keyword", "quantifier"):
            self.pos += 1
            self._symbol("{")
            entries = []
            while not self._at_symbol("}"):
                if self._peek() is None:
                    raise self._fail(["'}'", "'['"])
                entries.append(self._table_entry())
            end = self._symbol("}")
            cls = SelectionClause if tok.text == "selection" else QuantifierClause
            return cls(tuple(entries), tok.span.cover(end.span))
        raise self._fail(["'argmax'", "'max'", "'selection'", "'quantifier'"])

    def _table_entry(self) -> TableEntry:
        start = self._symbol("[")
        images = [self._tuple()]
        while self._at_symbol(","):
            self.pos += 1
            images.append(self._tuple())
        self._symbol("]")
        self._symbol("->")
        self._symbol("{")
        members = []
        if not self._at_symbol("}"):
            members.append(self._tuple())
            while self._at_symbol(","):
                self.pos += 1
                members.append(self._tuple())
        end = self._symbol("}")
        if self._at_symbol(","):
            self.pos += 1
        return TableEntry(tuple(images), tuple(members), start.span.cover(end.span))

    def _game_decl(self) -> GameDecl:
        start = self._keyword("game")
        name = self._expect("ident")
        self._symbol("=")
        body = self._expr()
        return GameDecl(name.text, body, start.span.cover(body.span))

    # ========== 表达式 ==========
    def _expr(self) -> Expr:
        left = self._texpr()
        while self._at_symbol(";"):
            self.pos += 1
            right = self._texpr()
            left = Compose(left, right, left.span.cover(right.span))
        return left

    def _texpr(self) -> Expr:
        left = self._atom()
        while self._at_symbol("||"):
            self.pos += 1
            right = self._atom()
            left = Tensor(left, right, left.span.cover(right.span))
        return left

    def _atom(self) -> Expr:
        base = self._base()
        if self._at_symbol("^*"):
            tok = self._symbol("^*")
            return Dual(base, base.span.cover(tok.span))
        return base

    def _base(self) -> Expr:
        tok = self._peek()
        if self._at("ident"):
            self.pos += 1
            return Ref(tok.text, tok.span)
        if tok is not None and tok.kind == "keyword" and tok.text in BUILTINS:
            self.pos += 1
            self._symbol("[")
            args = [self._type()]
            if tok.text in ("id", "swap") and self._at_symbol(","):
                self.pos += 1
                args.append(self._type())
            elif tok.text == "swap":
                raise self._fail(["','"])
            end = self._symbol("]")
            return Builtin(tok.text, tuple(args), tok.span.cover(end.span))
        if self._at_symbol("("):
            start = self._symbol("(")
            inner = self._expr()
            end = self._symbol(")")
            return _respan(inner, start.span.cover(end.span))
        raise self._fail(["ident", "'('"] + [repr(b) for b in BUILTINS])


def _respan(expr: Expr, span: Span) -> Expr:
    """括号表达式的位置覆盖括号本身"""
    return type(expr)(**{**expr.__dict__, "span": span})


def parse(tokens: Sequence[Token], source: str = "") -> Ast:
    return Parser(tokens, source).parse_program()


def parse_source(source: str) -> Ast:
    return parse(tokenize(source), source)
