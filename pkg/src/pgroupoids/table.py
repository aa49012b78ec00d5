"""Cayley tables of finite groupoids on {0, ..., n-1}."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedTable, NotUnique, OutOfRange


@dataclass(frozen=True)
class CayleyTable:
    """Operation table with ``cells[x][y] == x*y``.

    Immutable; equality and hashing are by cell contents.
    """

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.cells)
        if n < 1:
            raise MalformedTable("a table needs at least one row")
        for row in self.cells:
            if len(row) != n:
                raise MalformedTable(f"row of length {len(row)} in a table of order {n}")
            for v in row:
                if not 0 <= v < n:
                    raise OutOfRange(f"entry {v} outside 0..{n - 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> CayleyTable:
        try:
            cells = tuple(tuple(int(v) for v in row) for row in rows)
        except (TypeError, ValueError) as exc:
            raise MalformedTable(str(exc)) from None
        return cls(cells)

    @classmethod
    def from_one_based(cls, rows: Iterable[Sequence[int]]) -> CayleyTable:
        """Load a table written with elements 1..n, as printed in the literature."""
        return cls.from_rows([[v - 1 for v in row] for row in rows])

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def elements(self) -> range:
        return range(self.n)

    def __call__(self, x: int, y: int) -> int:
        return self.cells[x][y]

    mul = __call__

    def row(self, x: int) -> tuple[int, ...]:
        return self.cells[x]

    def column(self, y: int) -> tuple[int, ...]:
        return tuple(r[y] for r in self.cells)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.cells, dtype=np.int64)
        a.setflags(write=False)
        return a

    def left_div(self, a: int, b: int) -> int:
        """The unique x with a*x == b."""
        sols = [x for x, v in enumerate(self.cells[a]) if v == b]
        if len(sols) != 1:
            raise NotUnique(f"{a}*x = {b} has {len(sols)} solutions")
        return sols[0]

    def right_div(self, b: int, a: int) -> int:
        """The unique y with y*a == b."""
        sols = [y for y in self.elements if self.cells[y][a] == b]
        if len(sols) != 1:
            raise NotUnique(f"y*{a} = {b} has {len(sols)} solutions")
        return sols[0]

    def relabel(self, images: Sequence[int]) -> CayleyTable:
        """Table of the isomorphic copy obtained by renaming x to images[x]."""
        n = self.n
        if sorted(images) != list(range(n)):
            raise ValueError("relabeling must be a permutation of the elements")
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                out[images[x]][images[y]] = images[self.cells[x][y]]
        return CayleyTable.from_rows(out)

    def to_text(self) -> str:
        lines = [f"# order {self.n}"]
        lines += [" ".join(str(v) for v in row) for row in self.cells]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "cells": [list(r) for r in self.cells]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return self.to_text()


def parse_table(text: str) -> CayleyTable:
    """Parse the text format (optional ``# order n`` header) or the JSON form."""
    stripped = text.strip()
    if not stripped:
        raise MalformedTable("empty input")
    if stripped.startswith("{"):
        return _parse_json(stripped)

    declared = None
    rows = []
    for lineno, line in enumerate(stripped.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if len(words) == 2 and words[0] == "order":
                try:
                    declared = int(words[1])
                except ValueError:
                    raise MalformedTable(f"line {lineno}: bad order header") from None
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise MalformedTable(f"line {lineno}: non-integer entry") from None
    if not rows:
        raise MalformedTable("no table rows")
    if declared is not None and declared != len(rows):
        raise MalformedTable(f"header says order {declared} but found {len(rows)} rows")
    return CayleyTable.from_rows(rows)


def _parse_json(text: str) -> CayleyTable:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedTable(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict) or "cells" not in obj:
        raise MalformedTable('JSON table needs a "cells" key')
    cells = obj["cells"]
    if not isinstance(cells, list) or not all(isinstance(r, list) for r in cells):
        raise MalformedTable('"cells" must be a list of rows')
    if any(not isinstance(v, int) or isinstance(v, bool) for r in cells for v in r):
        raise MalformedTable("cells must hold integers")
    table = CayleyTable.from_rows(cells)
    if "n" in obj and obj["n"] != table.n:
        raise MalformedTable(f'"n" is {obj["n"]} but the table has order {table.n}')
    return table
