"""Quadratic Z2 system deciding whether some coloring reaches connectivity ≤ p.

For labels x, y the equation reads

    α[x][y]·(γ_x + γ_y) + Σ_j δ[y][j]·ε[x][j] = β[x][y]

with α the interlacement matrix and β the matrix of i + i². Fixing γ turns
it into the factorization problem B = F·Dᵀ for the b-matrix B, which is
solved here by elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from gausslacet import gf2
from gausslacet.errors import DimensionMismatch, TooLarge
from gausslacet.gauss import GaussCode, interlace_squared_table
from gausslacet.lacet import DEFAULT_N_LIMIT, b_matrix, colorings, connectivity


def alpha_beta(code: GaussCode) -> tuple[gf2.BitMatrix, gf2.BitMatrix]:
    n = code.n
    inter = code._interlace
    squares = interlace_squared_table(code)
    alpha = gf2.BitMatrix(inter, n)
    beta = gf2.BitMatrix(tuple(a ^ s for a, s in zip(inter, squares)), n)
    return alpha, beta


@dataclass(frozen=True)
class QuadraticSystem:
    n: int
    p: int
    alpha: gf2.BitMatrix
    beta: gf2.BitMatrix

    @property
    def num_equations(self) -> int:
        return self.n * self.n

    def variable_names(self) -> list[str]:
        names = [f"g{x}" for x in range(1, self.n + 1)]
        names += [f"d{x}_{j}" for x in range(1, self.n + 1) for j in range(1, self.p + 1)]
        names += [f"e{x}_{j}" for x in range(1, self.n + 1) for j in range(1, self.p + 1)]
        return names

    @property
    def num_variables(self) -> int:
        return self.n * (2 * self.p + 1)


@dataclass(frozen=True)
class QuadAssignment:
    gamma: int
    delta: gf2.BitMatrix
    epsilon: gf2.BitMatrix


def build_quadratic(code: GaussCode, p: int) -> QuadraticSystem:
    if p < 0:
        raise ValueError("p must be non-negative")
    alpha, beta = alpha_beta(code)
    return QuadraticSystem(code.n, p, alpha, beta)


def evaluate(system: QuadraticSystem, a: QuadAssignment) -> list[tuple[int, int]]:
    """Equations (x, y), 1-based, that the assignment violates."""
    n, p = system.n, system.p
    for mat in (a.delta, a.epsilon):
        if mat.nrows != n or mat.ncols != p:
            raise DimensionMismatch(f"expected {n}x{p} factor, got {mat.nrows}x{mat.ncols}")
    if a.gamma >> n:
        raise DimensionMismatch("gamma has more than n bits")
    bad = []
    for x in range(n):
        arow, brow, eps = system.alpha.rows[x], system.beta.rows[x], a.epsilon.rows[x]
        gx = a.gamma >> x & 1
        for y in range(n):
            lhs = (arow >> y & 1) & (gx ^ (a.gamma >> y & 1))
            lhs ^= gf2.dot(a.delta.rows[y], eps)
            if lhs != brow >> y & 1:
                bad.append((x + 1, y + 1))
    return bad


def solve_fixed_gamma(code: GaussCode, gamma: int, p: int) -> QuadAssignment:
    B = b_matrix(code, gamma).as_bitmatrix()
    # Σ_j δ[y][j] ε[x][j] = B[x][y], i.e. D·Fᵀ = Bᵀ
    D, F = gf2.rank_factorize(B.transpose(), p)
    return QuadAssignment(gamma=gamma, delta=D, epsilon=F)


def decide_conn2_le_p(
    code: GaussCode, p: int, n_limit: int = DEFAULT_N_LIMIT
) -> tuple[bool, QuadAssignment | None]:
    if code.n > n_limit:
        raise TooLarge(code.n, n_limit)
    for g in colorings(code.n):
        if connectivity(code, g) <= p:
            return True, solve_fixed_gamma(code, g, p)
    return False, None


def anf_terms(system: QuadraticSystem, x: int, y: int) -> list[str]:
    """Terms of equation (x, y), 1-based, with β moved to the left."""
    terms = []
    if system.alpha.get(x - 1, y - 1):
        terms += [f"g{x}", f"g{y}"]
    terms += [f"d{y}_{j}*e{x}_{j}" for j in range(1, system.p + 1)]
    if system.beta.get(x - 1, y - 1):
        terms.append("1")
    return terms


def export_anf(system: QuadraticSystem) -> str:
    lines = [f"# n={system.n} p={system.p} vars={system.num_variables}"]
    for x in range(1, system.n + 1):
        for y in range(1, system.n + 1):
            terms = anf_terms(system, x, y)
            lines.append((" + ".join(terms) if terms else "0") + " = 0")
    return "\n".join(lines) + "\n"


def assignment_values(system: QuadraticSystem, a: QuadAssignment) -> dict[str, int]:
    """Variable name → bit, matching the names used by :func:`export_anf`."""
    values = {f"g{x}": a.gamma >> (x - 1) & 1 for x in range(1, system.n + 1)}
    for x in range(1, system.n + 1):
        for j in range(1, system.p + 1):
            values[f"d{x}_{j}"] = a.delta.get(x - 1, j - 1)
            values[f"e{x}_{j}"] = a.epsilon.get(x - 1, j - 1)
    return values
