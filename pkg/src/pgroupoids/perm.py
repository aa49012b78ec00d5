"""Small permutation groups: BFS closure, dihedral recognition, abstract automorphisms.

Permutations act on the right, matching the ``yR_x`` convention: ``(p * q)(i)``
applies ``p`` first, then ``q``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import NotSubgroup, OrderCapExceeded

DEFAULT_GROUP_CAP = 10**6
DEFAULT_AUTOMORPHISM_CAP = 4000


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                img[a] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return _trusted(tuple([other.images[i] for i in self.images]))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i == j]

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if self.degree else 1

    def __str__(self) -> str:
        if not self.degree:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


@dataclass(frozen=True)
class PermutationGroup:
    """Generators plus the fully enumerated element list (BFS order)."""

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def index(self, g: Permutation) -> int:
        return self._index[g]

    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return all(g in other for g in self.elements)

    def cayley_table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        m = self.order
        dt = np.int32 if m > 32000 else np.int16
        out = np.empty((m, m), dtype=dt)
        for i, g in enumerate(self.elements):
            for j, h in enumerate(self.elements):
                out[i, j] = self._index[g * h]
        return out


def _trusted(images: tuple[int, ...]) -> Permutation:
    # skips validation for products of known permutations
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


def generate_group(
    gens: Iterable[Permutation], degree: int | None = None, cap: int = DEFAULT_GROUP_CAP
) -> PermutationGroup:
    """Closure of ``gens`` under composition by breadth-first search.

    Right-multiplying by generators suffices for finite groups: inverses are
    positive powers.
    """
    gens = tuple(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    ident = tuple(range(degree))
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    distinct = tuple(dict.fromkeys(g.images for g in gens if not g.is_identity()))
    while queue:
        g = queue.popleft()
        for s in distinct:
            h = tuple([s[i] for i in g])
            if h not in seen:
                seen.add(h)
                order.append(h)
                if len(order) > cap:
                    raise OrderCapExceeded(f"group order exceeds cap {cap}")
                queue.append(h)
    elements = tuple(_trusted(p) for p in order)
    return PermutationGroup(degree, gens, elements)


def is_dihedral(G: PermutationGroup) -> int | None:
    """Return m when G is dihedral of order 2m with m >= 3, else None."""
    if G.order < 6 or G.order % 2:
        return None
    m = G.order // 2
    rotations = [r for r in G.elements if r.order() == m]
    involutions = [s for s in G.elements if s.order() == 2]
    for r in rotations:
        r_inv = r.inverse()
        cyclic = {r**k for k in range(m)}
        for s in involutions:
            if s not in cyclic and s * r * s == r_inv:
                return m
    return None


# -- abstract automorphisms -------------------------------------------------


def _subgroup_from(table: np.ndarray, gens: list[int], identity: int) -> set[int]:
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = int(table[g, s])
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen


def _small_generating_set(table: np.ndarray, orders: list[int], identity: int) -> list[int]:
    m = len(orders)
    gens: list[int] = []
    span = {identity}
    # high-order elements first: they cover the most ground per generator
    for g in sorted(range(m), key=lambda i: (-orders[i], i)):
        if len(span) == m:
            break
        if g not in span:
            gens.append(g)
            span = _subgroup_from(table, gens, identity)
    return gens


def _extend_hom(table: np.ndarray, identity: int, gens: list[int], imgs: list[int]) -> dict | None:
    """Extend generator images to the generated subgroup; None on inconsistency."""
    phi = {identity: identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        pg = phi[g]
        for s, t in zip(gens, imgs):
            h = int(table[g, s])
            ph = int(table[pg, t])
            known = phi.get(h)
            if known is None:
                phi[h] = ph
                queue.append(h)
            elif known != ph:
                return None
    if len(set(phi.values())) != len(phi):
        return None
    return phi


def group_automorphisms(
    G: PermutationGroup, cap: int = DEFAULT_AUTOMORPHISM_CAP
) -> list[tuple[int, ...]]:
    """All automorphisms of G as maps on element indices (``auto[i] = j``).

    Generator images are chosen among elements of equal order; each partial
    choice is extended over the subgroup it generates and pruned on conflict.
    """
    if G.order > cap:
        raise OrderCapExceeded(f"group of order {G.order} exceeds automorphism cap {cap}")
    table = G.cayley_table()
    identity = G.index(Permutation.identity(G.degree))
    orders = [g.order() for g in G.elements]
    gens = _small_generating_set(table, orders, identity)
    by_order: dict[int, list[int]] = {}
    for i, o in enumerate(orders):
        by_order.setdefault(o, []).append(i)

    found = []

    def extend(imgs: list[int]):
        k = len(imgs)
        if k == len(gens):
            phi = _extend_hom(table, identity, gens, imgs)
            if phi is not None and len(phi) == G.order:
                found.append(tuple(phi[i] for i in range(G.order)))
            return
        for cand in by_order[orders[gens[k]]]:
            if cand in imgs:
                continue
            trial = imgs + [cand]
            if _extend_hom(table, identity, gens[: k + 1], trial) is None:
                continue
            extend(trial)

    extend([])
    return sorted(found)


def is_characteristic(
    H: PermutationGroup, G: PermutationGroup, cap: int = DEFAULT_AUTOMORPHISM_CAP
) -> bool:
    """True iff every automorphism of G maps H onto itself."""
    if not H.is_subgroup_of(G):
        raise NotSubgroup("H is not contained in G")
    sub = {G.index(h) for h in H.elements}
    return all({auto[i] for i in sub} == sub for auto in group_automorphisms(G, cap))
