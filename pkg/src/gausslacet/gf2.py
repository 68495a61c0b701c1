"""Dense linear algebra over Z2 with rows packed into Python ints.

Column ``j`` of a row is bit ``j``. Vectors (right-hand sides, solutions,
certificates) use the same packing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from gausslacet.errors import DimensionMismatch, RankExceedsP, TooManySolutions

DEFAULT_CAP = 1 << 20


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise DimensionMismatch(f"row {r:#x} wider than {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for row in data:
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
            rows.append(pack(row))
        return cls(tuple(rows), ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    def to_lists(self) -> list[list[int]]:
        return [unpack(r, self.ncols) for r in self.rows]

    def get(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def transpose(self) -> "BitMatrix":
        out = [0] * self.ncols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    out[j] |= 1 << i
                r >>= 1
                j += 1
        return BitMatrix(tuple(out), self.nrows)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = []
        for r in self.rows:
            acc = 0
            k = 0
            while r:
                if r & 1:
                    acc ^= other.rows[k]
                r >>= 1
                k += 1
            out.append(acc)
        return BitMatrix(tuple(out), other.ncols)

    def apply(self, vec: int) -> int:
        """Matrix-vector product; bit ``i`` of the result is row ``i`` dotted with ``vec``."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & vec).bit_count() & 1:
                out |= 1 << i
        return out

    def left_apply(self, vec: int) -> int:
        """Row-vector product ``vecᵀ M`` (XOR of the rows selected by ``vec``)."""
        out = 0
        i = 0
        while vec:
            if vec & 1:
                out ^= self.rows[i]
            vec >>= 1
            i += 1
        return out


def pack(bits: Iterable[int]) -> int:
    return sum(1 << i for i, b in enumerate(bits) if b & 1)


def unpack(value: int, length: int) -> list[int]:
    return [value >> i & 1 for i in range(length)]


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form with the accumulated transform.

    ``transform.rows[i]`` selects the original rows whose XOR is ``rows[i]``.
    The first ``rank`` rows are nonzero with leading columns ``pivots``.
    """

    rows: tuple[int, ...]
    transform: tuple[int, ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rref(rows: Sequence[int], ncols: int) -> Echelon:
    work = list(rows)
    trans = [1 << i for i in range(len(work))]
    pivots = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        piv = next((r for r in range(top, len(work)) if work[r] & bit), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        trans[top], trans[piv] = trans[piv], trans[top]
        prow, ptr = work[top], trans[top]
        for r in range(len(work)):
            if r != top and work[r] & bit:
                work[r] ^= prow
                trans[r] ^= ptr
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return Echelon(tuple(work), tuple(trans), tuple(pivots))


def rank(m: BitMatrix) -> int:
    work = [r for r in m.rows if r]
    rk = 0
    while work:
        piv = max(work)
        high = 1 << (piv.bit_length() - 1)
        work = [r ^ piv if r & high else r for r in work if r != piv]
        work = [r for r in work if r]
        rk += 1
    return rk


def rank_of_rows(rows: Iterable[int]) -> int:
    rows = list(rows)
    width = max((r.bit_length() for r in rows), default=0)
    return rank(BitMatrix(tuple(rows), width))


@dataclass(frozen=True)
class Solutions:
    particular: int
    nullspace_basis: tuple[int, ...]
    ncols: int

    @property
    def dim(self) -> int:
        return len(self.nullspace_basis)


@dataclass(frozen=True)
class Infeasible:
    certificate: int
    nrows: int


AffineSolveOutcome = Union[Solutions, Infeasible]


def solve_affine(L: BitMatrix, r: int, nrows: int | None = None) -> AffineSolveOutcome:
    """Solve ``L ξ = r``; ``r`` packs one bit per row of ``L``.

    An inconsistent system yields the certificate ν with νᵀL = 0, νᵀr = 1.
    """
    if nrows is not None and nrows != L.nrows:
        raise DimensionMismatch(f"rhs has {nrows} entries, L has {L.nrows} rows")
    if r >> L.nrows:
        raise DimensionMismatch("rhs wider than the number of rows")
    n = L.ncols
    rhs_bit = 1 << n
    augmented = [row | (rhs_bit if r >> i & 1 else 0) for i, row in enumerate(L.rows)]
    ech = rref(augmented, n + 1)
    if ech.pivots and ech.pivots[-1] == n:
        # leading entry in the rhs column: a 0 ... 0 | 1 row
        cert = ech.transform[ech.rank - 1]
        return Infeasible(certificate=cert, nrows=L.nrows)
    particular = 0
    for i, col in enumerate(ech.pivots):
        if ech.rows[i] & rhs_bit:
            particular |= 1 << col
    pivot_set = set(ech.pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = 1 << free
        for i, col in enumerate(ech.pivots):
            if ech.rows[i] >> free & 1:
                vec |= 1 << col
        basis.append(vec)
    return Solutions(particular=particular, nullspace_basis=tuple(basis), ncols=n)


def enumerate_affine(outcome: Solutions, cap: int = DEFAULT_CAP) -> list[int]:
    """All solutions, lexicographic over the basis coefficient vectors."""
    dim = outcome.dim
    if (1 << dim) > cap:
        raise TooManySolutions(dim, cap)
    basis = outcome.nullspace_basis
    out = []
    for coeffs in itertools.product((0, 1), repeat=dim):
        v = outcome.particular
        for c, b in zip(coeffs, basis):
            if c:
                v ^= b
        out.append(v)
    return out


def verify_certificate(L: BitMatrix, r: int, nu: int, nrows: int | None = None) -> bool:
    if nrows is not None and nrows != L.nrows:
        raise DimensionMismatch(f"certificate has {nrows} entries, L has {L.nrows} rows")
    if nu >> L.nrows or r >> L.nrows:
        raise DimensionMismatch("vector wider than the number of rows")
    return L.left_apply(nu) == 0 and dot(nu, r) == 1


def verify_solution(L: BitMatrix, r: int, xi: int) -> bool:
    return L.apply(xi) == r


def rank_factorize(B: BitMatrix, p: int) -> tuple[BitMatrix, BitMatrix]:
    """Factor ``B = D Fᵀ`` with ``D`` of shape rows×p and ``F`` of shape cols×p.

    ``D`` holds the pivot columns of ``B``, ``Fᵀ`` the nonzero rows of its
    reduced echelon form; unused inner columns are zero.
    """
    ech = rref(B.rows, B.ncols)
    k = ech.rank
    if k > p:
        raise RankExceedsP(k, p)
    d_rows = []
    for row in B.rows:
        d_rows.append(sum(1 << j for j, col in enumerate(ech.pivots) if row >> col & 1))
    D = BitMatrix(tuple(d_rows), p)
    Ft = BitMatrix(tuple(ech.rows[:k]) + (0,) * (p - k), B.ncols)
    return D, Ft.transpose()
