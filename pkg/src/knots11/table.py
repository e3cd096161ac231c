"""Parameter table of torus knots t(k,h) and the published reference rows."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .convert import convert_torus
from .errors import DomainError
from .families import TorusKnot, closed_form_candidates

# (k, h, a, b, c, r) for the torus knots, k < h <= 25, not covered by a closed form.
REFERENCE_TABLE: tuple[tuple[int, int, int, int, int, int], ...] = (
    (5, 8, 2, 1, 14, 11), (5, 13, 2, 1, 26, 11), (5, 18, 2, 1, 38, 11), (5, 23, 2, 1, 50, 11),
    (7, 11, 2, 3, 24, 17), (7, 12, 3, 1, 34, 23), (7, 18, 2, 3, 44, 17), (7, 19, 3, 1, 58, 23),
    (7, 25, 2, 3, 64, 17),
    (8, 11, 3, 2, 33, 28), (8, 13, 3, 41, 2, 32), (8, 19, 3, 2, 63, 28), (8, 21, 3, 71, 2, 32),
    (9, 14, 2, 5, 34, 23), (9, 16, 4, 1, 62, 39), (9, 23, 2, 5, 62, 23), (9, 25, 4, 1, 102, 39),
    (10, 17, 3, 4, 61, 38),
    (11, 14, 4, 3, 60, 53), (11, 15, 3, 5, 54, 43), (11, 17, 2, 7, 44, 29), (11, 18, 3, 68, 5, 53),
    (11, 19, 4, 86, 3, 59), (11, 20, 5, 1, 98, 59), (11, 25, 4, 3, 116, 53),
    (12, 17, 5, 2, 87, 68), (12, 19, 5, 99, 2, 72),
    (13, 18, 5, 98, 3, 83), (13, 20, 2, 9, 54, 35),
    (14, 17, 5, 4, 95, 86), (14, 19, 3, 8, 75, 58),
    (15, 19, 4, 7, 96, 81),
    (17, 20, 6, 5, 138, 127),
    (18, 23, 7, 179, 4, 158), (18, 25, 5, 163, 8, 138),
    (19, 23, 5, 9, 150, 131), (19, 24, 4, 11, 132, 109),
    (20, 23, 7, 6, 189, 176),
)
REFERENCE_KEYS = frozenset((row[0], row[1]) for row in REFERENCE_TABLE)

COLUMNS = ("k", "h", "a", "b", "c", "r", "family")


@dataclass(frozen=True)
class TableRow:
    k: int
    h: int
    a: int
    b: int
    c: int
    r: int
    family: str

    def astuple(self) -> tuple:
        return (self.k, self.h, self.a, self.b, self.c, self.r, self.family)


def family_tag(k: int, h: int) -> str:
    """'trivial', a closed-form tag, 'table' for reference rows, else 'uncovered'."""
    if k == 1:
        return "trivial"
    cands = closed_form_candidates(TorusKnot(k, h))
    if cands:
        return cands[0][0]
    return "table" if (k, h) in REFERENCE_KEYS else "uncovered"


def table_row(kh: tuple[int, int]) -> TableRow:
    k, h = kh
    p = convert_torus(TorusKnot(k, h))
    return TableRow(k, h, p.a, p.b, p.c, p.r, family_tag(k, h))


def knots_up_to(max_h: int, max_k: Optional[int] = None) -> list[tuple[int, int]]:
    max_k = max_h if max_k is None else max_k
    if max_k > max_h:
        raise DomainError("max_k must not exceed max_h")
    return [(k, h) for k in range(1, max_k + 1) for h in range(k + 1, max_h + 1) if gcd(k, h) == 1]


def generate_table(max_h: int, max_k: Optional[int] = None, jobs: int = 1) -> list[TableRow]:
    """Rows ordered by k then h, independent of ``jobs``."""
    keys = knots_up_to(max_h, max_k)
    if jobs > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(table_row, keys, chunksize=max(1, len(keys) // (4 * jobs))))
    else:
        rows = [table_row(kh) for kh in keys]
    return sorted(rows, key=lambda row: (row.k, row.h))


def to_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.astuple())
    return buf.getvalue()


def to_json(rows: list[TableRow]) -> str:
    return json.dumps([dict(zip(COLUMNS, row.astuple())) for row in rows], indent=1) + "\n"


def render(rows: list[TableRow], fmt: str) -> str:
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "json":
        return to_json(rows)
    raise DomainError(f"unknown table format {fmt!r}")
