import pytest
from hypothesis import given
from hypothesis import strategies as st

from semigreen.core import validate_table
from semigreen.corpus import I3_E, I3_F, I3_G, corpus
from semigreen.elements import BooleanMatrix, PartialInjection, Transformation
from semigreen.errors import NonAssociativeError, ParseError
from semigreen.formats import (
    emit_eggbox,
    format_table,
    load,
    parse_generator,
    parse_generators,
    parse_table_file,
)
from semigreen.green import green_classes

BRANDT_TEXT = """5
0 0 0 0 0
0 1 0 3 0
0 0 2 0 4
0 0 3 0 1
0 4 0 2 0
labels: 0 e f a b
"""


def test_parse_brandt(b2):
    S = parse_table_file(BRANDT_TEXT)
    assert (S.table == b2.table).all()
    assert S.labels == b2.labels


@pytest.mark.parametrize("entry", corpus(), ids=lambda e: e.name)
def test_round_trip(entry):
    S = entry.build()
    T = parse_table_file(format_table(S))
    assert (T.table == S.table).all()


@given(st.integers(1, 6), st.data())
def test_round_trip_left_zero_tables(n, data):
    # x y = x is associative for any n; permute labels to vary the text
    labels = data.draw(st.permutations([f"x{k}" for k in range(n)]))
    S = validate_table([[x] * n for x in range(n)], labels=list(labels))
    T = parse_table_file(format_table(S))
    assert (T.table == S.table).all() and T.labels == S.labels


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("x\n", 1),
    ("2\n0 0\n", 2),
    ("2\n0 0\n0 a\n", 3),
    ("2\n0 0\n0\n", 3),
    ("2\n0 0\n0 2\n", 3),
    ("1\n0\nlabels: a b\n", 3),
    ("1\n0\nfoo\n", 3),
])
def test_table_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_table_file(text)
    assert exc.value.line == line


def test_nonassociative_table_rejected():
    with pytest.raises(NonAssociativeError):
        parse_table_file("2\n1 0\n0 0\n")


def test_comments_ignored():
    S = parse_table_file("# one element\n1\n0  # only row\n")
    assert S.n == 1


def test_parse_generators():
    assert parse_generator("t 3: 2 3 1") == Transformation((2, 3, 1))
    assert parse_generator("p 3: 2 3 -") == PartialInjection((2, 3, None))
    assert parse_generator("bm 2: 01;10") == BooleanMatrix(((0, 1), (1, 0)))
    text = "p 3: 2 3 -\np 3: 1 - -\np 3: 2 1 -\n"
    assert parse_generators(text) == [I3_F, I3_E, I3_G]


@pytest.mark.parametrize("line", ["t 3 2 3 1", "q 3: 1 2 3", "t x: 1", "t 3: 1 2",
                                  "t 2: 1 3", "p 3: 1 1 -", "bm 2: 01;1"])
def test_generator_errors(line):
    with pytest.raises(ParseError):
        parse_generator(line)


def test_load_dispatch():
    S, elems = load("p 3: 2 3 -\np 3: 1 - -\n")
    assert S.n == 5 and len(elems) == 5
    S, elems = load(BRANDT_TEXT)
    assert S.n == 5 and elems is None


def test_eggbox_text_brandt(b2):
    out = emit_eggbox(b2, green_classes(b2))
    assert out == (
        "D-class 0 (1x1, |H| = 1)\n"
        "+----+\n"
        "| *0 |\n"
        "+----+\n"
        "\n"
        "D-class 1 (2x2, |H| = 1)\n"
        "+----+----+\n"
        "| *e | a  |\n"
        "+----+----+\n"
        "| b  | *f |\n"
        "+----+----+\n"
    )


def test_eggbox_deterministic(t3):
    S, _ = t3
    G = green_classes(S)
    assert emit_eggbox(S, G) == emit_eggbox(S, green_classes(S))
    assert emit_eggbox(S, G, "dot") == emit_eggbox(S, G, "dot")


def test_eggbox_dot(b2):
    out = emit_eggbox(b2, green_classes(b2), "dot")
    assert out.startswith("digraph eggbox {")
    assert out.count("subgraph cluster_d") == 2
    assert "d1 -> d0;" in out
    assert out.count('BGCOLOR="lightgrey"') == 3
    with pytest.raises(ValueError):
        emit_eggbox(b2, green_classes(b2), "svg")
