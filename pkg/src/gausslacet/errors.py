"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class LacetError(Exception):
    """Base class for every error raised by gausslacet."""


class GaussCodeError(LacetError, ValueError):
    """Malformed Gauss code input."""


class EmptyInput(GaussCodeError):
    def __init__(self) -> None:
        super().__init__("empty Gauss code")


class OddLength(GaussCodeError):
    def __init__(self, length: int) -> None:
        self.length = length
        super().__init__(f"Gauss code has odd length {length}")


class BadMultiplicity(GaussCodeError):
    def __init__(self, token: str, count: int) -> None:
        self.token = token
        self.count = count
        super().__init__(f"token {token!r} occurs {count} times, expected 2")


class LabelOutOfRange(LacetError, ValueError):
    def __init__(self, label: int, n: int) -> None:
        self.label = label
        self.n = n
        super().__init__(f"label {label} outside 1..{n}")


class DimensionMismatch(LacetError, ValueError):
    pass


class TooManySolutions(LacetError):
    def __init__(self, dim: int, cap: int) -> None:
        self.dim = dim
        self.cap = cap
        super().__init__(f"solution space has dimension {dim}; 2^{dim} exceeds cap {cap}")


class RankExceedsP(LacetError):
    def __init__(self, rank: int, p: int) -> None:
        self.rank = rank
        self.p = p
        super().__init__(f"rank {rank} exceeds p={p}")


class TooLarge(LacetError):
    def __init__(self, n: int, n_limit: int) -> None:
        self.n = n
        self.n_limit = n_limit
        super().__init__(f"n={n} exceeds limit {n_limit} for exhaustive sweeps")


class SamePair(LacetError, ValueError):
    def __init__(self, label: int) -> None:
        self.label = label
        super().__init__(f"pair ({label}, {label}) carries no implication class")


class InternalInconsistency(LacetError, AssertionError):
    """An invariant that must hold for every Gauss code was violated."""
