"""Cycle operators of the single-vertex map induced by a coloring.

A coloring ``gamma`` is an int bitmask with bit ``x - 1`` set iff label ``x``
is black (traversed twice in the same direction).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from gausslacet import gf2
from gausslacet.errors import DimensionMismatch, InternalInconsistency, TooLarge
from gausslacet.gauss import (
    EdgeSet,
    GaussCode,
    _check_label,
    interlace_of_set,
    interlace_squared_table,
    parity_partition,
)

DEFAULT_N_LIMIT = 20


def _check_gamma(code: GaussCode, gamma: int) -> None:
    if gamma < 0 or gamma >> code.n:
        raise DimensionMismatch(f"coloring {gamma:#b} has more than {code.n} bits")


def kappa(code: GaussCode, gamma: int, x: int) -> EdgeSet:
    _check_label(code, x)
    return gamma & (1 << (x - 1))


def c_map(code: GaussCode, gamma: int, x: int) -> EdgeSet:
    _check_label(code, x)
    return code._interlace[x - 1] ^ (gamma & (1 << (x - 1)))


def c_antimap(code: GaussCode, gamma: int, x: int) -> EdgeSet:
    return c_map(code, gamma, x) ^ (1 << (x - 1))


def c_of_set(code: GaussCode, gamma: int, mask: EdgeSet) -> EdgeSet:
    out = 0
    x = 1
    while mask:
        if mask & 1:
            out ^= c_map(code, gamma, x)
        mask >>= 1
        x += 1
    return out


def b_map(code: GaussCode, gamma: int, x: int) -> EdgeSet:
    """i²(x) plus the labels of i(x) that share the color of x."""
    _check_label(code, x)
    ix = code._interlace[x - 1]
    same = gamma if gamma >> (x - 1) & 1 else code.full & ~gamma
    return interlace_of_set(code, ix) ^ (ix & same)


def b_map_composed(code: GaussCode, gamma: int, x: int) -> EdgeSet:
    """b as c∘c + c, i.e. the antimap cycle operator applied after c."""
    cx = c_map(code, gamma, x)
    return c_of_set(code, gamma, cx) ^ cx


@dataclass(frozen=True)
class BMatrix:
    rows: tuple[EdgeSet, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def as_bitmatrix(self) -> gf2.BitMatrix:
        return gf2.BitMatrix(self.rows, self.n)


def b_matrix(code: GaussCode, gamma: int) -> BMatrix:
    _check_gamma(code, gamma)
    full = code.full
    inter = code._interlace
    squares = interlace_squared_table(code)
    rows = []
    for k in range(code.n):
        same = gamma if gamma >> k & 1 else full & ~gamma
        rows.append(squares[k] ^ (inter[k] & same))
    return BMatrix(tuple(rows))


def connectivity(code: GaussCode, gamma: int) -> int:
    return gf2.rank(b_matrix(code, gamma).as_bitmatrix())


def is_orientable(code: GaussCode) -> bool:
    return parity_partition(code).odd == 0


class Surface(enum.Enum):
    SPHERE = "sphere"
    PROJECTIVE_PLANE = "projective_plane"
    TORUS = "torus"
    KLEIN_BOTTLE = "klein_bottle"
    HIGHER = "higher"


@dataclass(frozen=True)
class SurfaceClass:
    kind: Surface
    connectivity: int
    orientable: bool

    @property
    def name(self) -> str:
        return self.kind.value

    def __str__(self) -> str:
        if self.kind is Surface.HIGHER:
            tag = "orientable" if self.orientable else "non-orientable"
            return f"higher(connectivity={self.connectivity}, {tag})"
        return self.kind.value


KLEIN_FAMILY = frozenset({Surface.SPHERE, Surface.PROJECTIVE_PLANE, Surface.KLEIN_BOTTLE})


def surface_from(k: int, orientable: bool) -> SurfaceClass:
    if orientable and k % 2:
        raise InternalInconsistency(f"orientable surface with odd connectivity {k}")
    if not orientable and k == 0:
        raise InternalInconsistency("odd labels present but b vanishes")
    if k == 0:
        kind = Surface.SPHERE
    elif k == 1:
        kind = Surface.PROJECTIVE_PLANE
    elif k == 2:
        kind = Surface.TORUS if orientable else Surface.KLEIN_BOTTLE
    else:
        kind = Surface.HIGHER
    return SurfaceClass(kind, k, orientable)


def classify_surface(code: GaussCode, gamma: int) -> SurfaceClass:
    return surface_from(connectivity(code, gamma), is_orientable(code))


def colorings(n: int) -> Iterator[int]:
    """All colorings in numeric order of their bit strings (label 1 most significant)."""
    for v in range(1 << n):
        g = 0
        for i in range(n):
            if v >> (n - 1 - i) & 1:
                g |= 1 << i
        yield g


def min_conn2(code: GaussCode, n_limit: int = DEFAULT_N_LIMIT) -> tuple[int, int]:
    """Minimum connectivity over all 2^n colorings and the first minimizing coloring."""
    if code.n > n_limit:
        raise TooLarge(code.n, n_limit)
    best, witness = code.n + 1, 0
    for g in colorings(code.n):
        k = connectivity(code, g)
        if k < best:
            best, witness = k, g
            if k == 0 or (k == 1 and not is_orientable(code)):
                break
    return best, witness
