"""Reference tables shipped with the package.

The files keep the one-based labels they were published with; loaders shift to
0-based elements.
"""
from __future__ import annotations

from importlib import resources

from .decomp import Decomposition, decomposition_from_cycles
from .table import CayleyTable

TABLES = ("k5_dihedral", "order5_not_quandle", "order9_hamiltonian")


def _rows(name: str) -> list[list[int]]:
    text = resources.files("pgroupoids").joinpath("data", f"{name}.txt").read_text()
    return [
        [int(v) for v in line.split()]
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]


def golden_table(name: str) -> CayleyTable:
    if name not in TABLES:
        raise KeyError(name)
    return CayleyTable.from_one_based(_rows(name))


def order9_cycles() -> Decomposition:
    return decomposition_from_cycles(9, [[v - 1 for v in row] for row in _rows("order9_cycles")])
