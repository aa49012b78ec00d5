"""Edge decompositions of K_n and their correspondence with P-groupoids.

A class is a closed trail, stored as its cyclic vertex sequence. Consecutive
vertices ``u, v, w`` in a trail encode the product ``u*v = w``. Simple cycles
are the special case where no vertex repeats; a general P-groupoid can induce
trails that pass through a vertex more than once, and the transition at each
visit is part of the data.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import find_isomorphism, is_p_groupoid, iter_isomorphisms
from .errors import InvalidDecomposition, NotPGroupoid, NotSurjective
from .perm import Permutation
from .table import CayleyTable

Edge = tuple[int, int]

DOT_COLORS = (
    "black", "red", "blue", "darkgreen", "orange", "purple", "brown",
    "magenta", "cyan", "gold", "gray", "navy",
)


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def canonical_trail(seq: Sequence[int]) -> tuple[int, ...]:
    """Least rotation/reflection of a cyclic vertex sequence."""
    L = len(seq)
    best = None
    for s in (list(seq), list(reversed(seq))):
        for i in range(L):
            cand = tuple(s[i:] + s[:i])
            if best is None or cand < best:
                best = cand
    return best


def trail_edges(trail: Sequence[int]) -> list[Edge]:
    L = len(trail)
    return [_edge(trail[i], trail[(i + 1) % L]) for i in range(L)]


@dataclass(frozen=True)
class Decomposition:
    """Partition of E(K_n) into closed trails (canonical order, canonical rotation)."""

    n: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise InvalidDecomposition("vertex count must be positive")
        canon = []
        seen: set[Edge] = set()
        for trail in self.classes:
            trail = tuple(int(v) for v in trail)
            if len(trail) < 3:
                raise InvalidDecomposition(f"class {trail} is shorter than a triangle")
            for v in trail:
                if not 0 <= v < n:
                    raise InvalidDecomposition(f"vertex {v} outside 0..{n - 1}")
            for i in range(len(trail)):
                if trail[i] == trail[(i + 1) % len(trail)]:
                    raise InvalidDecomposition(f"class {trail} contains a loop")
            for e in trail_edges(trail):
                if e in seen:
                    raise InvalidDecomposition(f"edge {e} appears twice")
                seen.add(e)
            canon.append(canonical_trail(trail))
        if len(seen) != n * (n - 1) // 2:
            missing = n * (n - 1) // 2 - len(seen)
            raise InvalidDecomposition(f"{missing} edges of K_{n} are not covered")
        object.__setattr__(self, "classes", tuple(sorted(canon)))

    @property
    def edge_classes(self) -> list[frozenset[Edge]]:
        return [frozenset(trail_edges(t)) for t in self.classes]

    def is_cycle_decomposition(self) -> bool:
        """True when every class is a simple cycle (no repeated vertex)."""
        return all(len(set(t)) == len(t) for t in self.classes)

    def relabel(self, images: Sequence[int]) -> Decomposition:
        return Decomposition(self.n, tuple(tuple(images[v] for v in t) for t in self.classes))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [
                [[t[i], t[(i + 1) % len(t)]] for i in range(len(t))] for t in self.classes
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self) -> str:
        lines = ["graph decomposition {", "  node [shape=circle];"]
        lines += [f"  {v};" for v in range(self.n)]
        for i, t in enumerate(self.classes):
            color = DOT_COLORS[i % len(DOT_COLORS)]
            lines.append(f"  subgraph class_{i} {{")
            lines.append(f'    edge [color="{color}"];')
            for u, v in zip(t, t[1:] + t[:1]):
                lines.append(f"    {u} -- {v};")
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _cycles_of_two_regular(n: int, edges: list[Edge]) -> list[tuple[int, ...]] | None:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(nb) != 2 for nb in adj.values()):
        return None
    cycles = []
    left = set(adj)
    while left:
        start = min(left)
        cyc = [start]
        prev, cur = start, min(adj[start])
        while cur != start:
            cyc.append(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        left -= set(cyc)
        cycles.append(tuple(cyc))
    return cycles


def decomposition_from_dict(obj) -> Decomposition:
    """Load the JSON form.

    Each class is a list of vertex pairs. Pairs chained head to tail are read as
    a closed trail in that order; otherwise the class must be 2-regular and is
    split into its cycles.
    """
    if not isinstance(obj, dict) or "n" not in obj or "classes" not in obj:
        raise InvalidDecomposition('decomposition JSON needs "n" and "classes"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidDecomposition('"n" must be a positive integer')
    if not isinstance(obj["classes"], list):
        raise InvalidDecomposition('"classes" must be a list')
    trails = []
    for cls in obj["classes"]:
        try:
            pairs = [(int(p[0]), int(p[1])) for p in cls if len(p) == 2]
        except (TypeError, ValueError, KeyError):
            raise InvalidDecomposition(f"bad class {cls!r}") from None
        if len(pairs) != len(cls) or not pairs:
            raise InvalidDecomposition(f"bad class {cls!r}")
        L = len(pairs)
        if all(pairs[i][1] == pairs[(i + 1) % L][0] for i in range(L)):
            trails.append(tuple(p[0] for p in pairs))
            continue
        cycles = _cycles_of_two_regular(n, [_edge(u, v) for u, v in pairs])
        if cycles is None:
            raise InvalidDecomposition(
                f"class {cls!r} is neither a chained trail nor 2-regular"
            )
        trails.extend(cycles)
    return Decomposition(n, tuple(trails))


def parse_decomposition(text: str) -> Decomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDecomposition(f"bad JSON: {exc}") from None
    return decomposition_from_dict(obj)


def decomposition_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Decomposition:
    return Decomposition(n, tuple(tuple(c) for c in cycles))


def decomposition_from_groupoid(T: CayleyTable) -> Decomposition:
    """Trails of the map (x, y) -> (y, x*y) on directed edges."""
    if not is_p_groupoid(T).is_p_groupoid.holds:
        raise NotPGroupoid("table does not satisfy the P-groupoid axioms")
    n = T.n
    done: set[Edge] = set()
    trails = []
    for x in range(n):
        for y in range(x + 1, n):
            if (x, y) in done:
                continue
            trail = []
            a, b = x, y
            while True:
                done.add(_edge(a, b))
                trail.append(a)
                a, b = b, T(a, b)
                if (a, b) == (x, y):
                    break
            trails.append(tuple(trail))
    return Decomposition(n, tuple(trails))


def groupoid_from_decomposition(D: Decomposition) -> CayleyTable:
    n = D.n
    cells = [[-1] * n for _ in range(n)]
    for x in range(n):
        cells[x][x] = x
    for t in D.classes:
        L = len(t)
        for i in range(L):
            u, v, w = t[i - 1], t[i], t[(i + 1) % L]
            cells[u][v] = w
            cells[w][v] = u
    # Decomposition validation guarantees every off-diagonal cell is set once.
    return CayleyTable.from_rows(cells)


def is_hamiltonian(D: Decomposition) -> bool:
    if len(D.classes) != (D.n - 1) // 2:
        return False
    return all(len(t) == D.n and len(set(t)) == D.n for t in D.classes)


def decomposition_isomorphism(
    D1: Decomposition, D2: Decomposition, strict: bool = False
) -> Permutation | None:
    """Vertex bijection carrying the classes of D1 onto classes of D2.

    Delegates to groupoid isomorphism on the induced P-groupoids. With
    ``strict`` the i-th class of D1 must land on the i-th class of D2.
    """
    if D1.n != D2.n or len(D1.classes) != len(D2.classes):
        return None
    T1, T2 = groupoid_from_decomposition(D1), groupoid_from_decomposition(D2)
    if not strict:
        return find_isomorphism(T1, T2)
    targets = D2.edge_classes
    for phi in iter_isomorphisms(T1, T2):
        images = [frozenset(_edge(phi(u), phi(v)) for u, v in cls) for cls in D1.edge_classes]
        if images == targets:
            return phi
    return None


# -- amalgamation -----------------------------------------------------------


@dataclass(frozen=True)
class AmalgamationMap:
    images: tuple[int, ...]
    m: int | None = None

    def __post_init__(self):
        m = self.m if self.m is not None else (max(self.images) + 1 if self.images else 0)
        object.__setattr__(self, "m", m)
        if any(not 0 <= v < m for v in self.images) or set(self.images) != set(range(m)):
            raise NotSurjective(f"map {self.images} is not onto 0..{m - 1}")

    @classmethod
    def parse(cls, text: str) -> AmalgamationMap:
        try:
            return cls(tuple(int(v) for v in text.split(",")))
        except ValueError:
            raise NotSurjective(f"cannot parse map {text!r}") from None


@dataclass(frozen=True)
class MultiGraph:
    """Colored multigraph; an edge (v, v, color) is a loop."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def loops(self, color: int | None = None) -> list[tuple[int, int, int]]:
        return [e for e in self.edges if e[0] == e[1] and (color is None or e[2] == color)]

    def color_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(c for _, _, c in self.edges).items()))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1  # a loop adds 2
        return deg

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_dot(self) -> str:
        lines = ["graph amalgamation {", "  node [shape=circle];"]
        lines += [f"  {v};" for v in range(self.n)]
        for u, v, c in self.edges:
            lines.append(f'  {u} -- {v} [color="{DOT_COLORS[c % len(DOT_COLORS)]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def amalgamate(D: Decomposition, psi: AmalgamationMap) -> MultiGraph:
    """Image of D under a vertex surjection; intra-fibre edges become loops."""
    if len(psi.images) != D.n:
        raise NotSurjective(f"map has {len(psi.images)} entries for {D.n} vertices")
    edges = []
    for color, t in enumerate(D.classes):
        for u, v in zip(t, t[1:] + t[:1]):
            a, b = sorted((psi.images[u], psi.images[v]))
            edges.append((a, b, color))
    return MultiGraph(psi.m, tuple(edges))
