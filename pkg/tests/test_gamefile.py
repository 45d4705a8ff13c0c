import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplegames.core import Hypergraph
from simplegames.gamefile import ParseError, parse, read, serialize, write

EXAMPLE1_TEXT = """# three players
n=3
011
100
111
"""


def test_parse_example1():
    h = parse(EXAMPLE1_TEXT)
    assert h.n == 3 and h.rows() == ["011", "100", "111"]


def test_header_is_optional():
    assert parse("011\n100\n").n == 3


def test_header_only_gives_empty_family():
    h = parse("n=4\n")
    assert h.n == 4 and h.edges == ()


def test_empty_coalition_row_with_header():
    h = parse("n=2\n00\n")
    assert h.edges == (0,)


@pytest.mark.parametrize(
    "text, line",
    [
        ("n=4\n0121\n", 2),
        ("n=3\n011\n0110\n", 3),
        ("011\n100\n011\n", 3),
        ("n=3\n011\nn=3\n", 3),
    ],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


def test_empty_file():
    with pytest.raises(ParseError):
        parse("# nothing\n\n")


def test_round_trip_keeps_order(tmp_path):
    h = Hypergraph.from_rows(["100", "011"])
    path = tmp_path / "g.game"
    write(path, h, ["two rows"])
    back = read(path)
    assert back.rows() == h.rows()
    assert serialize(back) == serialize(h)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), unique=True, max_size=12))))
def test_round_trip_property(case):
    n, edges = case
    h = Hypergraph(n, tuple(edges))
    back = parse(serialize(h, ["c"]))
    assert back.n == n and back.edges == h.edges
