"""The dihedral (Denes-Keedwell) P-quasigroup and affine tables over Z_n."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import EvenOrder, NotUnit
from .perm import Permutation
from .table import CayleyTable


def _require_odd(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n % 2 == 0:
        raise EvenOrder(f"order must be odd, got {n}")


def denes_keedwell(n: int) -> CayleyTable:
    """r o s = 2s - r (mod n)."""
    _require_odd(n)
    return CayleyTable.from_rows([[(2 * s - r) % n for s in range(n)] for r in range(n)])


@dataclass(frozen=True)
class AffineSpec:
    """x*y = a_f*x + a_g*y + c over Z_n."""

    n: int
    a_f: int
    a_g: int
    c: int = 0

    def __post_init__(self):
        _require_odd(self.n)
        for name in ("a_f", "a_g"):
            a = getattr(self, name)
            if gcd(a, self.n) != 1:
                raise NotUnit(f"{name}={a} is not a unit mod {self.n}")
        if not 0 <= self.c < self.n:
            raise ValueError(f"c={self.c} outside 0..{self.n - 1}")


def medial_affine(spec: AffineSpec) -> CayleyTable:
    n = spec.n
    return CayleyTable.from_rows(
        [[(spec.a_f * x + spec.a_g * y + spec.c) % n for y in range(n)] for x in range(n)]
    )


def left_translation_power(n: int, x: int, k: int) -> Permutation:
    """L_x^k on denes_keedwell(n) in closed form: y -> 2^k (y - x) + x."""
    _require_odd(n)
    if k < 0:
        raise ValueError("k must be non-negative")
    m = pow(2, k, n)
    return Permutation(tuple((m * (y - x) + x) % n for y in range(n)))


def left_translation_order(n: int) -> int:
    """Multiplicative order of 2 mod n, by repeated doubling."""
    _require_odd(n)
    if n == 1:
        raise ValueError("order of 2 is undefined mod 1")
    k, v = 1, 2 % n
    while v != 1:
        v = (2 * v) % n
        k += 1
    return k
