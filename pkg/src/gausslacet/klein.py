"""Affine Z2 system whose solutions are the sphere, projective plane and Klein
bottle realizations of a Gauss code.

Unknowns are packed as ξ = (γ, δ): bit ``k - 1`` is γ_k (label k black),
bit ``n + k - 1`` is δ_k (which part of the partition label k falls in).

A pair (k, ℓ) constrains the ℓ-coordinate of b(k). By default the system
carries every such constraint, including those of pairs where ℓ is in
neither i(k) nor i²(k): there b(k) misses ℓ, which still forces
δ_k + δ_ℓ = 1 (both odd) or δ_even = 0 (mixed parity). Passing
``twelve_class_only=True`` drops those rows and reproduces the classical
twelve-class table; that smaller system admits solutions that are not
realizations (see ``verify_solution``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from gausslacet import gf2
from gausslacet.errors import DimensionMismatch, LacetError, SamePair
from gausslacet.gauss import (
    EdgeSet,
    GaussCode,
    _check_label,
    bits_to_str,
    interlace_squared_table,
    parity_partition,
)
from gausslacet.lacet import BMatrix, SurfaceClass, b_matrix, is_orientable, surface_from


class ImplicationClass(enum.Enum):
    I1 = 1
    I2 = 2
    I3 = 3
    I4 = 4
    I5 = 5
    I6 = 6
    I7 = 7
    I8 = 8
    I9 = 9
    I10 = 10
    I11 = 11
    I12 = 12
    I13 = 13

    def __str__(self) -> str:
        return self.name


# (γ_k, γ_ℓ, δ_k, δ_ℓ | rhs) per class.
COEFFICIENTS: dict[ImplicationClass, tuple[int, int, int, int, int]] = {
    ImplicationClass.I1: (0, 0, 1, 1, 0),
    ImplicationClass.I2: (1, 1, 1, 1, 1),
    ImplicationClass.I3: (1, 1, 1, 1, 0),
    ImplicationClass.I4: (0, 0, 0, 1, 1),
    ImplicationClass.I5: (1, 1, 0, 1, 0),
    ImplicationClass.I6: (1, 1, 0, 1, 1),
    ImplicationClass.I7: (0, 0, 1, 0, 1),
    ImplicationClass.I8: (1, 1, 1, 0, 0),
    ImplicationClass.I9: (1, 1, 1, 0, 1),
    ImplicationClass.I10: (0, 0, 0, 0, 1),
    ImplicationClass.I11: (1, 1, 0, 0, 0),
    ImplicationClass.I12: (1, 1, 0, 0, 1),
    ImplicationClass.I13: (0, 0, 0, 0, 0),
}

# Restriction of a pair with ℓ outside i(k) ∪ i²(k), keyed by (k odd, ℓ odd).
DISJOINT_COEFFICIENTS: dict[tuple[bool, bool], tuple[int, int, int, int, int]] = {
    (True, True): (0, 0, 1, 1, 1),
    (True, False): (0, 0, 0, 1, 0),
    (False, True): (0, 0, 1, 0, 0),
    (False, False): (0, 0, 0, 0, 0),
}


def _pair_class(k_odd: bool, l_odd: bool, in_i: bool, in_i2: bool) -> ImplicationClass:
    if not (in_i or in_i2):
        return ImplicationClass.I13
    block = {(True, True): 0, (True, False): 3, (False, True): 6, (False, False): 9}[(k_odd, l_odd)]
    # i² only, both, i only
    offset = 1 if not in_i else 2 if in_i2 else 3
    return ImplicationClass(block + offset)


def classify_pair(code: GaussCode, k: int, l: int) -> ImplicationClass:
    _check_label(code, k)
    _check_label(code, l)
    if k == l:
        raise SamePair(k)
    odd = parity_partition(code).odd
    bit = 1 << (l - 1)
    i_k = code._interlace[k - 1]
    i2_k = interlace_squared_table(code)[k - 1]
    return _pair_class(bool(odd >> (k - 1) & 1), bool(odd & bit), bool(i_k & bit), bool(i2_k & bit))


@dataclass(frozen=True)
class RowOrigin:
    k: int
    l: int
    cls: ImplicationClass


@dataclass(frozen=True)
class KleinLinearSystem:
    n: int
    L: gf2.BitMatrix
    r: int
    provenance: tuple[RowOrigin, ...]
    twelve_class_only: bool = False

    @property
    def m(self) -> int:
        return self.L.nrows

    def dump(self) -> str:
        """Plain-text matrix format: header, L rows, r, then provenance lines."""
        lines = [f"{self.m} {self.n}"]
        lines += [bits_to_str(row, 2 * self.n) for row in self.L.rows]
        lines.append(bits_to_str(self.r, self.m))
        lines += [f"{o.k} {o.l} {o.cls}" for o in self.provenance]
        return "\n".join(lines) + "\n"


def parse_dump(text: str) -> KleinLinearSystem:
    lines = text.split("\n")
    m, n = map(int, lines[0].split())
    rows = tuple(int(lines[1 + i][::-1], 2) for i in range(m))
    rline = lines[1 + m]
    r = int(rline[::-1], 2) if rline else 0
    prov = []
    for line in lines[2 + m : 2 + 2 * m]:
        k, l, cls = line.split()
        prov.append(RowOrigin(int(k), int(l), ImplicationClass[cls]))
    return KleinLinearSystem(n, gf2.BitMatrix(rows, 2 * n), r, tuple(prov))


def build_system(code: GaussCode, twelve_class_only: bool = False) -> KleinLinearSystem:
    n = code.n
    odd = parity_partition(code).odd
    inter = code._interlace
    squares = interlace_squared_table(code)
    rows, rhs, prov = [], 0, []
    for k in range(1, n + 1):
        k_odd = bool(odd >> (k - 1) & 1)
        for l in range(k + 1, n + 1):
            bit = 1 << (l - 1)
            l_odd = bool(odd & bit)
            cls = _pair_class(k_odd, l_odd, bool(inter[k - 1] & bit), bool(squares[k - 1] & bit))
            if cls is ImplicationClass.I13:
                if twelve_class_only:
                    continue
                coeffs = DISJOINT_COEFFICIENTS[(k_odd, l_odd)]
            else:
                coeffs = COEFFICIENTS[cls]
            gk, gl, dk, dl, c = coeffs
            row = gk << (k - 1) | gl << (l - 1) | dk << (n + k - 1) | dl << (n + l - 1)
            if not row and not c:
                continue
            if c:
                rhs |= 1 << len(rows)
            rows.append(row)
            prov.append(RowOrigin(k, l, cls))
    return KleinLinearSystem(n, gf2.BitMatrix(tuple(rows), 2 * n), rhs, tuple(prov), twelve_class_only)


@dataclass(frozen=True)
class KleinSolution:
    gamma: int
    delta: int

    def xi(self, n: int) -> int:
        return self.gamma | self.delta << n

    @classmethod
    def from_xi(cls, xi: int, n: int) -> "KleinSolution":
        mask = (1 << n) - 1
        return cls(gamma=xi & mask, delta=xi >> n & mask)


@dataclass(frozen=True)
class PartitionWitness:
    O0: EdgeSet
    O1: EdgeSet
    E0: EdgeSet
    E1: EdgeSet


def solution_partition(code: GaussCode, sol: KleinSolution) -> PartitionWitness:
    part = parity_partition(code)
    d = sol.delta
    if d >> code.n:
        raise DimensionMismatch("delta has more than n bits")
    return PartitionWitness(
        O0=part.odd & ~d, O1=part.odd & d, E0=part.even & ~d, E1=part.even & d
    )


def _pattern_holds(bm: BMatrix, w: PartitionWitness) -> bool:
    odd = w.O0 | w.O1
    want = (w.O0 | w.E1, w.O1 | w.E1, 0, odd)
    for x, row in enumerate(bm.rows):
        bit = 1 << x
        part = 0 if w.O0 & bit else 1 if w.O1 & bit else 2 if w.E0 & bit else 3
        if row != want[part]:
            return False
    return True


def _klein_sides_hold(w: PartitionWitness) -> bool:
    # either labeling of the odd parts may carry the distinguished odd label
    for first, second in ((w.O0, w.O1), (w.O1, w.O0)):
        if first and not (second == 0 and w.E1 == 0):
            return True
    return False


def verify_solution(code: GaussCode, sol: KleinSolution, bm: BMatrix | None = None) -> bool:
    """Check the partition pattern of b against (γ, δ), plus the Klein side conditions."""
    if sol.gamma >> code.n or sol.delta >> code.n:
        return False
    if bm is None:
        bm = b_matrix(code, sol.gamma)
    w = solution_partition(code, sol)
    if not _pattern_holds(bm, w):
        return False
    k = gf2.rank(bm.as_bitmatrix())
    if k == 2 and not is_orientable(code):
        return _klein_sides_hold(w)
    return True


@dataclass(frozen=True)
class SolutionRecord:
    solution: KleinSolution
    surface: SurfaceClass
    partition: PartitionWitness
    verified: bool


@dataclass(frozen=True)
class Realizable:
    system: KleinLinearSystem
    solutions: tuple[SolutionRecord, ...]
    affine_dim: int

    realizable = True


@dataclass(frozen=True)
class NotRealizable:
    system: KleinLinearSystem
    certificate: int

    realizable = False

    def certificate_rows(self) -> list[RowOrigin]:
        return [o for i, o in enumerate(self.system.provenance) if self.certificate >> i & 1]


RealizabilityReport = Union[Realizable, NotRealizable]


def solve(
    code: GaussCode, cap: int = gf2.DEFAULT_CAP, twelve_class_only: bool = False
) -> RealizabilityReport:
    system = build_system(code, twelve_class_only=twelve_class_only)
    outcome = gf2.solve_affine(system.L, system.r)
    if isinstance(outcome, gf2.Infeasible):
        if not gf2.verify_certificate(system.L, system.r, outcome.certificate):
            raise LacetError("elimination produced an invalid certificate")
        return NotRealizable(system, outcome.certificate)
    n = code.n
    orientable = is_orientable(code)
    sols = sorted(
        (KleinSolution.from_xi(xi, n) for xi in gf2.enumerate_affine(outcome, cap)),
        key=lambda s: (bits_to_str(s.gamma, n), bits_to_str(s.delta, n)),
    )
    per_gamma: dict[int, tuple[BMatrix, SurfaceClass]] = {}
    records = []
    for s in sols:
        if s.gamma not in per_gamma:
            bm = b_matrix(code, s.gamma)
            per_gamma[s.gamma] = (bm, surface_from(gf2.rank(bm.as_bitmatrix()), orientable))
        bm, surface = per_gamma[s.gamma]
        records.append(
            SolutionRecord(s, surface, solution_partition(code, s), verify_solution(code, s, bm))
        )
    return Realizable(system, tuple(records), outcome.dim)
