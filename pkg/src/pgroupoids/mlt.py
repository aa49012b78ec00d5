"""Multiplication groups of a Cayley table."""
from __future__ import annotations

from typing import NamedTuple

from .algebra import left_translation, right_translation
from .errors import NotBijective, OrderCapExceeded
from .perm import (
    DEFAULT_AUTOMORPHISM_CAP,
    PermutationGroup,
    generate_group,
    is_characteristic,
    is_dihedral,
)
from .table import CayleyTable


class MultiplicationGroups(NamedTuple):
    right: PermutationGroup
    left: PermutationGroup
    full: PermutationGroup


def right_multiplication_group(T: CayleyTable) -> PermutationGroup:
    return generate_group([right_translation(T, x) for x in T.elements], degree=T.n)


def left_multiplication_group(T: CayleyTable) -> PermutationGroup:
    return generate_group([left_translation(T, x) for x in T.elements], degree=T.n)


def multiplication_groups(T: CayleyTable) -> MultiplicationGroups:
    """(Mlt_rho, Mlt_lambda, Mlt); raises NotBijective if either side fails."""
    right = right_multiplication_group(T)
    left = left_multiplication_group(T)
    full = generate_group(right.generators + left.generators, degree=T.n)
    return MultiplicationGroups(right, left, full)


def mlt_summary(T: CayleyTable, automorphism_cap: int = DEFAULT_AUTOMORPHISM_CAP) -> dict:
    """Orders, dihedral verdict and characteristic-subgroup verdicts as plain data.

    Sides whose translations are not permutations are reported as None.
    """
    out: dict = {"n": T.n}
    try:
        right = right_multiplication_group(T)
    except NotBijective:
        right = None
    try:
        left = left_multiplication_group(T)
    except NotBijective:
        left = None
    gens = (right.generators if right else ()) + (left.generators if left else ())
    full = generate_group(gens, degree=T.n) if right and left else None

    out["mlt_right_order"] = right.order if right else None
    out["mlt_left_order"] = left.order if left else None
    out["mlt_order"] = full.order if full else None
    out["right_dihedral"] = is_dihedral(right) if right else None
    for key, sub in (("right_characteristic", right), ("left_characteristic", left)):
        verdict = None
        if sub is not None and full is not None:
            try:
                verdict = is_characteristic(sub, full, automorphism_cap)
            except OrderCapExceeded:
                verdict = None
        out[key] = verdict
    return out
