"""Exhaustive enumeration of P-groupoids of a given order.

The axioms force every column of a P-groupoid to be an involution whose only
fixed point is the column index, so the search fills one column at a time with
such involutions. Cross-column constraints (row cancellation, distributive
laws, Hamiltonicity) are propagated on the partial table after each column.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .algebra import find_isomorphism
from .decomp import decomposition_from_groupoid, is_hamiltonian
from .errors import EvenOrder, OrderCapExceeded
from .table import CayleyTable

CANONICAL_CAP = 9
THREADS_ENV = "PGROUPOIDS_THREADS"


@dataclass(frozen=True)
class SearchConstraints:
    require_quasigroup: bool = False
    require_left_distributive: bool = False
    require_quandle: bool = False
    forbid_quandle: bool = False
    require_hamiltonian: bool = False
    up_to_iso: bool = False
    max_models: int | None = None
    time_budget: float | None = None  # seconds

    def __post_init__(self):
        if self.require_quandle and self.forbid_quandle:
            raise ValueError("require_quandle and forbid_quandle are mutually exclusive")
        if self.max_models is not None and self.max_models < 0:
            raise ValueError("max_models must be non-negative")

    @property
    def column_local(self) -> bool:
        """No constraint couples different columns."""
        return not (
            self.require_quasigroup
            or self.require_left_distributive
            or self.require_quandle
            or self.forbid_quandle
            or self.require_hamiltonian
        )


@dataclass
class SearchResult:
    n: int
    constraints: SearchConstraints
    tables: list[CayleyTable] = field(default_factory=list)
    labeled: int = 0
    complete: bool = True

    @property
    def iso_classes(self) -> int | None:
        return len(self.tables) if self.constraints.up_to_iso else None

    def __len__(self) -> int:
        return len(self.tables)

    def __iter__(self):
        return iter(self.tables)


# -- identities as term trees: a variable is a str, a product is a 2-tuple ---

LEFT_DISTRIBUTIVE = (("x", ("y", "z")), (("x", "y"), ("x", "z")))
RIGHT_DISTRIBUTIVE = ((("y", "z"), "x"), (("y", "x"), ("z", "x")))


class _Conflict(Exception):
    pass


class _Engine:
    def __init__(self, n: int, c: SearchConstraints):
        self.n = n
        self.c = c
        self.identities = []
        if c.require_left_distributive:
            self.identities.append(LEFT_DISTRIBUTIVE)
        if c.require_quandle:
            # P-groupoids are idempotent right quasigroups, so a quandle is
            # exactly a right-distributive one
            self.identities.append(RIGHT_DISTRIBUTIVE)
        g = np.indices((n, n, n))
        self.grids = {"x": g[0], "y": g[1], "z": g[2]}
        self.ar = np.arange(n)

    # -- state ---------------------------------------------------------------

    def empty(self) -> np.ndarray:
        T = np.full((self.n, self.n), -1, dtype=np.int64)
        T[self.ar, self.ar] = self.ar
        return T

    def _assign(self, T: np.ndarray, x: int, y: int, v: int) -> bool:
        """Set T[x,y]=v and its P3 mate; False if nothing changed."""
        if x == y:
            if v != x:
                raise _Conflict
            return False
        if v == x or v == y:
            raise _Conflict
        cur = T[x, y]
        if cur >= 0:
            if cur != v:
                raise _Conflict
            return False
        mate = T[v, y]
        if mate >= 0 and mate != x:
            raise _Conflict
        T[x, y] = v
        T[v, y] = x
        return True

    def _lookup(self, T, a, b):
        ok = (a >= 0) & (b >= 0)
        return np.where(ok, T[np.where(ok, a, 0), np.where(ok, b, 0)], -1)

    def _eval(self, T, term):
        if isinstance(term, str):
            return self.grids[term]
        return self._lookup(T, self._eval(T, term[0]), self._eval(T, term[1]))

    def _identity_forced(self, T, identity) -> list[tuple[int, int, int]]:
        lhs, rhs = identity
        la, lb = self._eval(T, lhs[0]), self._eval(T, lhs[1])
        ra, rb = self._eval(T, rhs[0]), self._eval(T, rhs[1])
        L, R = self._lookup(T, la, lb), self._lookup(T, ra, rb)
        if np.any((L >= 0) & (R >= 0) & (L != R)):
            raise _Conflict
        forced = []
        m = (L >= 0) & (R < 0) & (ra >= 0) & (rb >= 0)
        if m.any():
            forced += zip(ra[m].tolist(), rb[m].tolist(), L[m].tolist())
        m = (R >= 0) & (L < 0) & (la >= 0) & (lb >= 0)
        if m.any():
            forced += zip(la[m].tolist(), lb[m].tolist(), R[m].tolist())
        return forced

    def allowed(self, T: np.ndarray) -> np.ndarray:
        """allowed[x, y, v]: v may still be placed in unknown cell (x, y)."""
        n, ar = self.n, self.ar
        X, Y, V = self.grids["x"], self.grids["y"], self.grids["z"]
        ok = (V != X) & (V != Y) & (T[:, :, None] < 0)
        mate = T[V, Y]  # value currently at (v, y)
        ok &= (mate < 0) | (mate == X)
        if self.c.require_quasigroup:
            in_row = np.zeros((n, n), dtype=bool)
            rows, cols = np.nonzero(T >= 0)
            in_row[rows, T[rows, cols]] = True
            ok &= ~in_row[:, None, :]
        return ok

    def propagate(self, T: np.ndarray) -> bool:
        try:
            self._propagate(T)
        except _Conflict:
            return False
        return True

    def _propagate(self, T: np.ndarray) -> None:
        n = self.n
        while True:
            changed = False
            for ident in self.identities:
                for x, y, v in self._identity_forced(T, ident):
                    changed |= self._assign(T, x, y, v)
            if changed:
                continue
            unknown = T < 0
            if not unknown.any():
                break
            ok = self.allowed(T)
            counts = ok.sum(axis=2)
            if np.any(unknown & (counts == 0)):
                raise _Conflict
            singles = np.argwhere(unknown & (counts == 1))
            for x, y in singles.tolist():
                if T[x, y] < 0:
                    v = int(np.argmax(ok[x, y]))
                    changed |= self._assign(T, x, y, v)
            if self.c.require_quasigroup and not changed:
                changed = self._row_hidden_singles(T, ok)
            if not changed:
                break
        if self.c.require_quasigroup:
            self._check_rows(T)
        if self.c.require_hamiltonian:
            self._check_hamiltonian_partial(T.tolist())

    def _check_rows(self, T):
        for row in T.tolist():
            known = [v for v in row if v >= 0]
            if len(known) != len(set(known)):
                raise _Conflict

    def _row_hidden_singles(self, T, ok) -> bool:
        changed = False
        n = self.n
        for x in range(n):
            row = T[x]
            present = set(row[row >= 0].tolist())
            for v in range(n):
                if v in present:
                    continue
                spots = np.nonzero(ok[x, :, v])[0]
                if len(spots) == 0:
                    raise _Conflict
                if len(spots) == 1 and T[x, spots[0]] < 0:
                    changed |= self._assign(T, x, int(spots[0]), v)
                    return changed
        return changed

    def _check_hamiltonian_partial(self, rows: list[list[int]]) -> None:
        """Reject when some known trail closes early or revisits a vertex."""
        n = self.n
        for x in range(n):
            for y in range(n):
                if x == y:
                    continue
                prev, cur = x, y
                seen = {x, y}
                for j in range(2, n + 2):
                    nxt = rows[prev][cur]
                    if nxt < 0:
                        break
                    if j < n:
                        if nxt in seen:
                            raise _Conflict
                        seen.add(nxt)
                    elif j == n:
                        if nxt != x:
                            raise _Conflict
                    elif nxt != y:
                        raise _Conflict
                    prev, cur = cur, nxt

    # -- branching -------------------------------------------------------------

    def column_fills(self, T: np.ndarray, y: int) -> Iterator[list[tuple[int, int]]]:
        """Perfect matchings of the unknown cells of column y that respect ``allowed``."""
        ok = self.allowed(T)
        free = [x for x in range(self.n) if T[x, y] < 0]

        def match(rest):
            if not rest:
                yield []
                return
            x = rest[0]
            for i in range(1, len(rest)):
                w = rest[i]
                if ok[x, y, w] and ok[w, y, x]:
                    for m in match(rest[1:i] + rest[i + 1 :]):
                        yield [(x, w)] + m

        yield from match(free)

    def next_column(self, T: np.ndarray) -> int | None:
        cols = np.nonzero((T < 0).any(axis=0))[0]
        return int(cols[0]) if len(cols) else None

    def children(self, T: np.ndarray) -> Iterator[np.ndarray]:
        y = self.next_column(T)
        for fill in self.column_fills(T, y):
            child = T.copy()
            try:
                for x, w in fill:
                    self._assign(child, x, y, w)
            except _Conflict:
                continue
            if self.propagate(child):
                yield child

    def accept(self, T: np.ndarray) -> bool:
        """Final checks on a complete table."""
        table = CayleyTable.from_rows(T.tolist())
        if self.c.forbid_quandle and self._satisfies(T, RIGHT_DISTRIBUTIVE):
            return False
        if self.c.require_hamiltonian and not is_hamiltonian(decomposition_from_groupoid(table)):
            return False
        return True

    def _satisfies(self, T, identity) -> bool:
        lhs, rhs = identity
        return bool(np.all(self._eval(T, lhs) == self._eval(T, rhs)))

    def leaves(self, T: np.ndarray, deadline: float | None) -> Iterator[np.ndarray | None]:
        """Depth-first leaves; yields None once when the deadline passes."""
        stack = [iter([T])]
        while stack:
            if deadline is not None and time.monotonic() > deadline:
                yield None
                return
            node = next(stack[-1], None)
            if node is None:
                stack.pop()
                continue
            if self.next_column(node) is None:
                if self.accept(node):
                    yield node
            else:
                stack.append(self.children(node))


# -- canonical form ---------------------------------------------------------


@lru_cache(maxsize=None)
def _perm_array(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)


def _perm_chunks(n: int, size: int = 40320) -> Iterator[np.ndarray]:
    if n <= 9:
        P = _perm_array(n)
        for i in range(0, len(P), size):
            yield P[i : i + size]
        return
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield np.array(block, dtype=np.int8)


def _lexmin_row(M: np.ndarray) -> np.ndarray:
    idx = np.arange(len(M))
    for c in range(M.shape[1]):
        col = M[idx, c]
        idx = idx[col == col.min()]
        if len(idx) == 1:
            break
    return M[idx[0]]


def canonical_form(T: CayleyTable, force: bool = False) -> CayleyTable:
    """Lexicographically least relabeling of T (row-major) over all n! permutations."""
    n = T.n
    if n > CANONICAL_CAP and not force:
        raise OrderCapExceeded(f"canonical form over {n}! relabelings needs force=True")
    A = np.array(T.cells, dtype=np.int8)
    best = None
    for inv in _perm_chunks(n):
        # inv[k, i] is the old element given new label i
        sigma = np.argsort(inv, axis=1).astype(np.int8)
        old = A[inv[:, :, None], inv[:, None, :]].reshape(len(inv), n * n)
        cand = _lexmin_row(np.take_along_axis(sigma, old.astype(np.int64), axis=1))
        if best is None or cand.tolist() < best.tolist():
            best = cand
    return CayleyTable.from_rows(best.reshape(n, n).tolist())


# -- drivers -----------------------------------------------------------------


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n % 2 == 0:
        raise EvenOrder(f"order must be odd, got {n}")


def _run_subtree(args) -> tuple[list[list[list[int]]], bool]:
    n, c, start, deadline, limit = args
    engine = _Engine(n, c)
    out = []
    complete = True
    for leaf in engine.leaves(np.array(start, dtype=np.int64), deadline):
        if leaf is None:
            complete = False
            break
        out.append(leaf.tolist())
        if limit is not None and len(out) >= limit:
            complete = False
            break
    return out, complete


def _labeled_leaves(n: int, c: SearchConstraints, threads: int) -> Iterator[list | None]:
    """Stream labeled models in deterministic order; None marks an early stop."""
    engine = _Engine(n, c)
    deadline = time.monotonic() + c.time_budget if c.time_budget is not None else None
    root = engine.empty()
    if not engine.propagate(root):
        return
    if threads <= 1 or engine.next_column(root) is None:
        for leaf in engine.leaves(root, deadline):
            yield None if leaf is None else leaf.tolist()
        return
    # split at the first column: one task per fill, merged back in order
    limit = None if (c.up_to_iso or c.max_models is None) else c.max_models
    tasks = [(n, c, child.tolist(), deadline, limit) for child in engine.children(root)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for rows, complete in pool.map(_run_subtree, tasks):
            yield from rows
            if not complete:
                yield None
                return


class _IsoFilter:
    """Keeps one representative per isomorphism class."""

    def __init__(self, n: int):
        self.n = n
        self.seen: set[CayleyTable] = set()
        self.reps: list[CayleyTable] = []

    def add(self, table: CayleyTable) -> bool:
        if self.n <= 7:
            canon = canonical_form(table)
            if canon in self.seen:
                return False
            self.seen.add(canon)
            self.reps.append(canon)
            return True
        if any(find_isomorphism(table, r) is not None for r in self.reps):
            return False
        self.reps.append(table)
        return True

    def representatives(self) -> list[CayleyTable]:
        if self.n <= 7 or self.n > CANONICAL_CAP:
            return list(self.reps)
        return [canonical_form(r) for r in self.reps]


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def search_p_groupoids(
    n: int, c: SearchConstraints | None = None, threads: int | None = None
) -> SearchResult:
    """Enumerate P-groupoids of order n satisfying the constraints."""
    c = c or SearchConstraints()
    _check_order(n)
    threads = default_threads() if threads is None else threads
    result = SearchResult(n, c)
    if c.max_models == 0:
        result.complete = False
        return result
    iso = _IsoFilter(n) if c.up_to_iso else None
    for rows in _labeled_leaves(n, c, threads):
        if rows is None:
            result.complete = False
            break
        table = CayleyTable.from_rows(rows)
        result.labeled += 1
        if iso is None:
            result.tables.append(table)
        elif iso.add(table):
            result.tables.append(iso.reps[-1])
        if c.max_models is not None and len(result.tables) >= c.max_models:
            result.complete = False
            break
    if iso is not None:
        result.tables = iso.representatives()
    return result


def column_completion_counts(n: int) -> list[int]:
    """Number of admissible fills of each column of an otherwise empty table."""
    _check_order(n)
    engine = _Engine(n, SearchConstraints())
    root = engine.empty()
    return [sum(1 for _ in engine.column_fills(root, y)) for y in range(n)]


def count_models(
    n: int, c: SearchConstraints | None = None, threads: int | None = None
) -> tuple[int, int | None]:
    """(labeled count, isomorphism-class count or None when not requested).

    With only the axioms, columns are independent, so the labeled count is the
    product of per-column fill counts and nothing is materialized.
    """
    c = c or SearchConstraints()
    _check_order(n)
    if c.column_local and not c.up_to_iso and c.max_models is None:
        total = 1
        for k in column_completion_counts(n):
            total *= k
        return total, None
    res = search_p_groupoids(n, c, threads)
    return res.labeled, res.iso_classes
