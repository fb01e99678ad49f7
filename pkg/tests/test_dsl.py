import pytest

from src.core import equilibria, extensionally_equal
from src.dsl import (
    Builtin, Compose, Dual, Ref, Tensor, elaborate_game, format_expr, format_program,
    load_file, load_program, parse_source, tokenize,
)
from src.utils.errors import (
    DomainTooLarge, DslInterfaceMismatch, DuplicateDecl, ElaborationError, InvalidDual, LexError,
    NotClosed, ParseError, TableError, UnknownName,
)

SELECTION_GAME = """\
set Y = {l, r}
set U = {0, 1}
fun u : Y -> U = {
  l -> 0
  r -> 1
}
player P : 1 -> Y feedback U selection {
  [0, 1] -> {r}
  [1, 0] -> {l}
}
game g = P ; u || id[1, U] ; tau[U]
"""


def _body(source: str):
    return parse_source(source).declarations[-1].body


def _strip_comments(text: str) -> str:
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("--"))


# ---------- 词法 ----------

def test_tokenize_spans():
    tokens = tokenize("game g = P1 || P2")
    assert [t.text for t in tokens] == ["game", "g", "=", "P1", "||", "P2"]
    assert tokens[0].kind == "keyword"
    assert (tokens[3].span.column, tokens[3].span.start, tokens[3].span.end) == (10, 9, 11)
    assert (tokens[4].span.column, tokens[4].span.start) == (13, 12)
    assert tokens[5].span.column == 16


def test_tokenize_skips_comments_and_tracks_lines():
    tokens = tokenize("-- 注释\nset X = {-1, 3/2}")
    assert tokens[0].span.line == 2
    assert [t.kind for t in tokens if t.kind == "number"] == ["number", "number"]
    assert tokens[-2].text == "3/2"


def test_spans_are_byte_offsets_after_multibyte_comment():
    source = "-- 囚徒\nset X = {C}"
    tokens = tokenize(source)
    raw = source.encode("utf-8")
    first = tokens[0].span
    assert (first.line, first.column, first.start, first.end) == (2, 1, 10, 13)
    assert raw[first.start:first.end] == b"set"
    for tok in tokens:
        assert raw[tok.span.start:tok.span.end].decode("utf-8") == tok.text


def test_end_of_input_span_counts_bytes():
    source = "-- 博弈\ngame g = (P"
    with pytest.raises(ParseError) as info:
        parse_source(source)
    span = info.value.span
    assert span.start == span.end == len(source.encode("utf-8"))
    assert (span.line, span.column) == (2, 12)


def test_tokenize_rejects_illegal_character():
    with pytest.raises(LexError) as info:
        tokenize("set X = {a}\nset @")
    assert (info.value.span.line, info.value.span.column) == (2, 5)


# ---------- 语法 ----------

def test_compose_binds_looser_than_tensor():
    assert _body("game g = a ; b || c") == Compose(Ref("a"), Tensor(Ref("b"), Ref("c")))


def test_operators_are_left_associative():
    assert _body("game g = a || b || c") == Tensor(Tensor(Ref("a"), Ref("b")), Ref("c"))
    assert _body("game g = a ; b ; c") == Compose(Compose(Ref("a"), Ref("b")), Ref("c"))


def test_dual_is_postfix_on_atoms():
    body = _body("game g = f || copy[U*U]^*")
    assert body.right == Dual(Builtin("copy", (body.right.inner.args[0],)))
    assert body.right.inner.args[0].names == ("U", "U")


def test_swap_needs_two_arguments():
    with pytest.raises(ParseError) as info:
        parse_source("game g = swap[X]")
    assert "','" in info.value.expected


def test_unbalanced_parenthesis():
    source = "set X = {a}\ngame g = (id[X]"
    with pytest.raises(ParseError) as info:
        parse_source(source)
    span = info.value.span
    assert (span.line, span.column, span.start, span.end) == (2, 16, 27, 27)
    assert "')'" in info.value.expected
    assert info.value.render(source, "bad.pregame").splitlines() == [
        "bad.pregame:2:16: parse error: unexpected end of input; expected one of: ')'",
        "  game g = (id[X]",
        "                 ^",
    ]


def test_coordinate_must_be_positive():
    with pytest.raises(ParseError):
        parse_source("player P : 1 -> X feedback U argmax [0]")


@pytest.mark.parametrize("text", [
    "a ; b || c",
    "(a ; b) || c",
    "a || (b || c)",
    "a ; (b ; c)",
    "(a || b)^*",
    "copy[U*U]^* ; tau[1]",
    "id[X, U*U] || swap[X, Y]",
])
def test_format_expr_round_trips(text):
    body = _body(f"game g = {text}")
    assert format_expr(body) == text
    assert _body(f"game g = {format_expr(body)}") == body


def test_format_expr_drops_redundant_parens():
    assert format_expr(_body("game g = (a || b) || c")) == "a || b || c"
    assert format_expr(_body("game g = ((a ; b)) ; c")) == "a ; b ; c"


# ---------- 规范化打印与语料 ----------

def test_corpus_files_are_canonical(games_dir):
    files = sorted(games_dir.glob("*.pregame"))
    assert len(files) == 4
    for path in files:
        text = path.read_text(encoding="utf-8")
        body = _strip_comments(text)
        ast = parse_source(text)
        assert format_program(ast) == body, path.name
        assert parse_source(format_program(ast)) == ast


def test_selection_program_round_trips():
    ast = parse_source(SELECTION_GAME)
    assert format_program(ast) == SELECTION_GAME


# ---------- 类型检查 ----------

def test_prisoners_dilemma_types(games_dir):
    program = load_file(games_dir / "prisoners_dilemma.pregame")
    assert program.game_names == ["pd"]
    assert program.typed_game("pd").render_type() == "1 ⊗ 1* → 1 ⊗ 1*"
    player = program.environment.players["P2"]
    assert player.operator.name == "argmax[2]"
    assert not player.uses_quantifier


def test_duplicate_declaration():
    with pytest.raises(DuplicateDecl, match="X is already declared at line 1"):
        load_program("set X = {a}\nset X = {b}")


def test_duplicate_element():
    with pytest.raises(TableError):
        load_program("set X = {a, a}")


def test_unknown_set():
    with pytest.raises(UnknownName, match="unknown set Z"):
        load_program("set X = {a}\nfun f : X -> Z = { a -> b }")


def test_unknown_and_forward_names():
    with pytest.raises(UnknownName, match="unknown name h"):
        load_program("set X = {a}\ngame g = id[X] ; h")
    with pytest.raises(UnknownName):
        load_program("set X = {a}\ngame g = g")


def test_set_is_not_a_game():
    with pytest.raises(UnknownName, match="X is a set"):
        load_program("set X = {a}\ngame g = X")


def test_fun_must_be_total():
    with pytest.raises(TableError, match="not total: missing b"):
        load_program("set X = {a, b}\nfun f : X -> X = { a -> a }")


def test_fun_values_must_be_elements():
    with pytest.raises(TableError, match="c is not an element of X"):
        load_program("set X = {a, b}\nfun f : X -> X = { a -> c\n b -> a }")


def test_fun_duplicate_argument():
    with pytest.raises(TableError, match="defines a twice"):
        load_program("set X = {a}\nfun f : X -> X = { a -> a\n a -> a }")


def test_interface_mismatch_names_both_sides():
    source = """\
set X = {a}
set Y = {b}
set Z = {c}
fun f : X -> Y = { a -> b }
fun g : Z -> X = { c -> a }
game h = f ; g
"""
    with pytest.raises(DslInterfaceMismatch) as info:
        load_program(source)
    assert info.value.message == "cannot compose Y ⊗ 1* with Z ⊗ 1*"
    assert info.value.span.line == 6


def test_players_cannot_be_dualized():
    source = "set R = {0, 1}\nplayer P : 1 -> R feedback R argmax\ngame g = P^*"
    with pytest.raises(InvalidDual, match="P is a player"):
        load_program(source)


def test_coordinate_out_of_range():
    with pytest.raises(TableError, match="coordinate 2 out of range"):
        load_program("set R = {0, 1}\nplayer P : 1 -> R feedback R argmax [2]")


def test_argmax_needs_numeric_feedback():
    with pytest.raises(TableError):
        load_program("set R = {lo, hi}\nplayer P : 1 -> R feedback R argmax")


def test_continuation_arity_checked():
    source = "set Y = {l, r}\nset U = {0, 1}\nplayer P : 1 -> Y feedback U selection {\n  [0] -> {l}\n}"
    with pytest.raises(TableError, match="expected 2"):
        load_program(source)


def test_missing_game_name():
    program = load_program("set X = {a}\ngame g = id[X]")
    with pytest.raises(UnknownName, match="declared games: g"):
        program.typed_game("h")


# ---------- 展开 ----------

def test_prisoners_dilemma_equilibria(games_dir):
    program = load_file(games_dir / "prisoners_dilemma.pregame")
    game = elaborate_game(program, "pd")
    assert [c.name for c in game.strategy_components] == ["P1", "P2"]
    assert equilibria(game) == [("D", "D")]


def test_selection_table_player():
    program = load_program(SELECTION_GAME)
    assert equilibria(elaborate_game(program, "g")) == [("r",)]


def test_open_game_is_not_closed():
    source = "set R = {0, 1}\nplayer P : 1 -> R feedback R argmax\ngame g = P ; delete[R] || id[1, R]"
    game = elaborate_game(load_program(source), "g")
    with pytest.raises(NotClosed, match="codomain has contravariant port R"):
        equilibria(game)


def test_elaboration_reports_leaf_position():
    source = "set Y = {a, b, c}\nset U = {0, 1}\nplayer P : Y*Y -> Y feedback U argmax\ngame g = P"
    program = load_program(source)
    with pytest.raises(ElaborationError) as info:
        elaborate_game(program, "g", cap=100)
    assert info.value.span.line == 4
    assert info.value.span.column == 10
    assert isinstance(info.value.cause, DomainTooLarge)
    assert "exceeds enumeration cap 100" in info.value.message


def test_dual_of_swap_elaborates():
    source = "set X = {a, b}\nset Y = {c}\ngame g = swap[X, Y]^*"
    game = elaborate_game(load_program(source), "g")
    assert game.render_type() == "1 ⊗ Y*X* → 1 ⊗ X*Y*"
    assert game.coplay((), (), ("b", "c")) == ("c", "b")


CHAIN_DECLS = """\
set X = {a, b}
set U = {0, 1}
fun f : X -> U = {
  a -> 0
  b -> 1
}
fun h : U -> X = {
  0 -> b
  1 -> a
}
player P : 1 -> X feedback U argmax
player Q : X -> X feedback U argmax
"""


@pytest.mark.parametrize("left, right", [
    ("f ; h ; f", "f ; (h ; f)"),
    ("P ; f || id[1, U] ; tau[U]", "P ; (f || id[1, U] ; tau[U])"),
    ("h ; Q ; f || id[1, U] ; tau[U]", "h ; (Q ; (f || id[1, U] ; tau[U]))"),
    ("f^* ; h^* ; f^*", "f^* ; (h^* ; f^*)"),
])
def test_composition_bracketing_is_irrelevant(left, right):
    program = load_program(CHAIN_DECLS + f"game left = {left}\ngame right = {right}\n")
    g = elaborate_game(program, "left")
    k = elaborate_game(program, "right")
    assert g.render_type() == k.render_type()
    assert extensionally_equal(g, k)
