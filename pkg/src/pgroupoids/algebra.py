"""Algebraic predicates, translations, subgroupoids and isomorphisms of Cayley tables.

Every law is decided by a plain quantifier sweep in row-major tuple order, so a
failing law reports the lexicographically first violating tuple.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterator

from .errors import NotBijective
from .perm import Permutation
from .table import CayleyTable


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple[int, ...] | None = None
    law: str | None = None  # name of the violated law when holds is False

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "law": self.law,
        }


# Each law returns True when the tuple satisfies it.
def _idempotent(T, x):
    return T(x, x) == x


def _p2(T, x, y):
    return x == y or T(x, y) not in (x, y)


def _p3(T, x, y):
    return T(T(x, y), y) == x


def _left_cancellative(T, x, y, z):
    return y == z or T(x, y) != T(x, z)


def _right_cancellative(T, x, y, z):
    return y == z or T(y, x) != T(z, x)


def _left_distributive(T, x, y, z):
    return T(x, T(y, z)) == T(T(x, y), T(x, z))


def _right_distributive(T, x, y, z):
    return T(T(y, z), x) == T(T(y, x), T(z, x))


def _medial(T, x, y, z, w):
    return T(T(x, y), T(z, w)) == T(T(x, z), T(y, w))


LAWS: dict[str, tuple[int, Callable[..., bool]]] = {
    "idempotent": (1, _idempotent),
    "p2": (2, _p2),
    "p3": (2, _p3),
    "left_cancellative": (3, _left_cancellative),
    "right_cancellative": (3, _right_cancellative),
    "left_distributive": (3, _left_distributive),
    "right_distributive": (3, _right_distributive),
    "medial": (4, _medial),
}


def check_law(T: CayleyTable, law: str) -> Verdict:
    arity, pred = LAWS[law]
    for tup in product(range(T.n), repeat=arity):
        if not pred(T, *tup):
            return Verdict(False, tup, law)
    return Verdict(True)


def law_holds_at(T: CayleyTable, law: str, witness: tuple[int, ...]) -> bool:
    """Re-evaluate a single law at one tuple (used to audit witnesses)."""
    return LAWS[law][1](T, *witness)


def _first_failure(T: CayleyTable, laws: tuple[str, ...]) -> Verdict:
    for law in laws:
        v = check_law(T, law)
        if not v.holds:
            return v
    return Verdict(True)


@dataclass(frozen=True)
class PropertyReport:
    n: int
    p1: Verdict
    p2: Verdict
    p3: Verdict
    is_p_groupoid: Verdict
    is_quasigroup: Verdict | None = None
    left_distributive: Verdict | None = None
    right_distributive: Verdict | None = None
    medial: Verdict | None = None
    quandle: Verdict | None = None

    FLAGS = (
        "p1", "p2", "p3", "is_p_groupoid", "is_quasigroup",
        "left_distributive", "right_distributive", "medial", "quandle",
    )

    def to_dict(self) -> dict:
        out = {"n": self.n}
        for name in self.FLAGS:
            v = getattr(self, name)
            out[name] = v.to_dict() if v is not None else None
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        lines = [f"order {self.n}"]
        for name in self.FLAGS:
            v = getattr(self, name)
            if v is None:
                continue
            extra = "" if v.holds else f"  ({v.law} fails at {v.witness})"
            lines.append(f"{name:20s} {str(v.holds).lower()}{extra}")
        return "\n".join(lines)


def is_p_groupoid(T: CayleyTable) -> PropertyReport:
    p1 = check_law(T, "idempotent")
    p2 = check_law(T, "p2")
    p3 = check_law(T, "p3")
    return PropertyReport(T.n, p1, p2, p3, _first_failure(T, ("idempotent", "p2", "p3")))


def property_report(T: CayleyTable) -> PropertyReport:
    base = is_p_groupoid(T)
    return PropertyReport(
        n=T.n,
        p1=base.p1,
        p2=base.p2,
        p3=base.p3,
        is_p_groupoid=base.is_p_groupoid,
        is_quasigroup=_first_failure(T, ("left_cancellative", "right_cancellative")),
        left_distributive=check_law(T, "left_distributive"),
        right_distributive=check_law(T, "right_distributive"),
        medial=check_law(T, "medial"),
        # right cancellation on a finite table is the same as unique x in x*a = b
        quandle=_first_failure(T, ("idempotent", "right_cancellative", "right_distributive")),
    )


# -- translations -----------------------------------------------------------


def right_translation(T: CayleyTable, x: int) -> Permutation:
    """R_x : y -> y*x."""
    col = T.column(x)
    if len(set(col)) != T.n:
        raise NotBijective(f"R_{x} is not a permutation")
    return Permutation(col)


def left_translation(T: CayleyTable, x: int) -> Permutation:
    """L_x : y -> x*y."""
    row = T.row(x)
    if len(set(row)) != T.n:
        raise NotBijective(f"L_{x} is not a permutation")
    return Permutation(row)


# -- subgroupoids -----------------------------------------------------------


def subgroupoid_closure(T: CayleyTable, S) -> frozenset[int]:
    closed = set(S)
    frontier = list(closed)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(closed):
                for c in (T(a, b), T(b, a)):
                    if c not in closed:
                        new.add(c)
        closed |= new
        frontier = list(new)
    return frozenset(closed)


def enumerate_subgroupoids(T: CayleyTable) -> list[frozenset[int]]:
    """All nonempty closed subsets, sorted by size then elements.

    Closures of the 1- and 2-element seeds, then closures of pairwise unions
    until nothing new appears.
    """
    found: set[frozenset[int]] = set()
    for x in T.elements:
        found.add(subgroupoid_closure(T, {x}))
    for x, y in combinations(T.elements, 2):
        found.add(subgroupoid_closure(T, {x, y}))
    pending = list(found)
    while pending:
        new = set()
        current = list(found)
        for a in pending:
            for b in current:
                if a <= b or b <= a:
                    continue
                c = subgroupoid_closure(T, a | b)
                if c not in found:
                    new.add(c)
        found |= new
        pending = list(new)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# -- isomorphism ------------------------------------------------------------


def _map_signature(f: tuple[int, ...]) -> tuple:
    """Conjugation-invariant shape of a self-map: fixed points, fibres, cycle type."""
    n = len(f)
    fibres = [0] * n
    for v in f:
        fibres[v] += 1
    fixed = sum(1 for i, v in enumerate(f) if i == v)
    cyc = Permutation(f).cycle_type() if min(fibres) == 1 else ()
    return fixed, tuple(sorted(fibres)), cyc


def element_invariants(T: CayleyTable) -> list[tuple]:
    n = T.n
    out = []
    for x in range(n):
        row, col = T.row(x), T.column(x)
        commuting = sum(1 for y in range(n) if T(x, y) == T(y, x))
        out.append((T(x, x) == x, _map_signature(row), _map_signature(col), commuting))
    return out


def iter_isomorphisms(T1: CayleyTable, T2: CayleyTable) -> Iterator[Permutation]:
    """Yield every phi with phi(x*y) = phi(x)*phi(y), in lexicographic order of images."""
    if T1.n != T2.n:
        return
    n = T1.n
    A, B = T1.cells, T2.cells
    inv1, inv2 = element_invariants(T1), element_invariants(T2)
    if sorted(inv1) != sorted(inv2):
        return

    def extend(phi, used, x, y):
        phi, used = phi[:], used[:]
        assigned = [i for i in range(n) if phi[i] >= 0]
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            if phi[a] >= 0:
                if phi[a] != b:
                    return None
                continue
            if used[b] or inv1[a] != inv2[b]:
                return None
            phi[a] = b
            used[b] = True
            assigned.append(a)
            for c in assigned:
                queue.append((A[a][c], B[b][phi[c]]))
                queue.append((A[c][a], B[phi[c]][b]))
        return phi, used

    def dfs(phi, used):
        try:
            x = phi.index(-1)
        except ValueError:
            yield Permutation(tuple(phi))
            return
        for y in range(n):
            if used[y] or inv1[x] != inv2[y]:
                continue
            state = extend(phi, used, x, y)
            if state is not None:
                yield from dfs(*state)

    yield from dfs([-1] * n, [False] * n)


def find_isomorphism(T1: CayleyTable, T2: CayleyTable) -> Permutation | None:
    return next(iter_isomorphisms(T1, T2), None)


def automorphisms(T: CayleyTable) -> list[Permutation]:
    return list(iter_isomorphisms(T, T))
