import csv
import io
import json

import pytest

from knots11.errors import DomainError
from knots11.table import (REFERENCE_TABLE, family_tag, generate_table, knots_up_to, render,
                           table_row)


def test_small_table():
    rows = generate_table(3)
    assert [r.astuple() for r in rows] == [
        (1, 2, 0, 0, 1, 0, "trivial"),
        (1, 3, 0, 0, 1, 0, "trivial"),
        (2, 3, 1, 0, 1, 2, "qk+1"),
    ]


def test_reference_rows_are_tagged():
    rows = generate_table(25)
    tagged = [r.astuple()[:6] for r in rows if r.family == "table"]
    assert sorted(tagged) == sorted(REFERENCE_TABLE)


def test_uncovered_rows():
    rows = generate_table(25)
    assert {(r.k, r.h) for r in rows if r.family == "uncovered"} == {
        (13, 21), (13, 22), (13, 23), (13, 24), (14, 23), (14, 25),
        (15, 23), (16, 23), (16, 25), (17, 22), (17, 23), (17, 24)}


def test_ordering_and_parallel_stability():
    serial = generate_table(18)
    assert [(r.k, r.h) for r in serial] == sorted((r.k, r.h) for r in serial)
    assert generate_table(18, jobs=3) == serial


def test_max_k():
    assert {r.k for r in generate_table(10, 3)} == {1, 2, 3}
    with pytest.raises(DomainError):
        knots_up_to(5, 6)


def test_render_formats_are_deterministic():
    rows = generate_table(12)
    text = render(rows, "csv")
    assert text == render(generate_table(12), "csv")
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert len(parsed) == len(rows)
    assert parsed[0] == {"k": "1", "h": "2", "a": "0", "b": "0", "c": "1", "r": "0",
                         "family": "trivial"}
    doc = json.loads(render(rows, "json"))
    assert doc[-1]["k"] == rows[-1].k
    with pytest.raises(DomainError):
        render(rows, "xml")


def test_family_tags():
    assert family_tag(3, 5) == "qk-1"
    assert family_tag(4, 7) == "qk-1"
    assert family_tag(5, 7) == "sq'+1"
    assert family_tag(5, 8) == "table"
    assert table_row((5, 8)).astuple() == (5, 8, 2, 1, 14, 11, "table")
