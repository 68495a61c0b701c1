"""Gauss codes, the interlacement operator and the odd/even label partition.

Edge sets are plain ``int`` bitmasks: bit ``x - 1`` is set iff label ``x``
belongs to the set, so symmetric difference is ``^``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from gausslacet.errors import (
    BadMultiplicity,
    EmptyInput,
    GaussCodeError,
    LabelOutOfRange,
    OddLength,
)

EdgeSet = int


def edge_set(labels: Iterable[int]) -> EdgeSet:
    mask = 0
    for x in labels:
        mask ^= 1 << (x - 1)
    return mask


def labels_of(mask: EdgeSet) -> list[int]:
    """Sorted labels contained in ``mask``."""
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def bits_to_str(mask: int, n: int) -> str:
    """Render a length-n vector in label order ("00111011": label 1 first)."""
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def str_to_bits(text: str) -> int:
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"not a bit string: {text!r}")
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def parity(mask: int) -> int:
    return mask.bit_count() & 1


@dataclass(frozen=True)
class GaussCode:
    """A double-occurrence word over labels 1..n, stored linearly.

    ``tokens[x - 1]`` is the user token normalized to label ``x``.
    """

    seq: tuple[int, ...]
    tokens: tuple[str, ...] = ()
    _interlace: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        seq = tuple(self.seq)
        object.__setattr__(self, "seq", seq)
        if not seq:
            raise EmptyInput()
        if len(seq) % 2:
            raise OddLength(len(seq))
        n = len(seq) // 2
        counts = [0] * (n + 1)
        for x in seq:
            if not 1 <= x <= n:
                raise LabelOutOfRange(x, n)
            counts[x] += 1
        for x in range(1, n + 1):
            if counts[x] != 2:
                raise BadMultiplicity(str(x), counts[x])
        if not self.tokens:
            object.__setattr__(self, "tokens", tuple(str(x) for x in range(1, n + 1)))
        elif len(self.tokens) != n:
            raise GaussCodeError("token table does not match the number of labels")
        object.__setattr__(self, "_interlace", _interlace_all(seq, n))

    @property
    def n(self) -> int:
        return len(self.seq) // 2

    @property
    def label_map(self) -> dict[str, int]:
        return {tok: x for x, tok in enumerate(self.tokens, start=1)}

    @property
    def full(self) -> EdgeSet:
        return (1 << self.n) - 1

    def original(self) -> list[str]:
        return [self.tokens[x - 1] for x in self.seq]

    def __str__(self) -> str:
        return " ".join(map(str, self.seq))


def _interlace_all(seq: tuple[int, ...], n: int) -> tuple[int, ...]:
    first = [-1] * (n + 1)
    out = [0] * (n + 1)
    for pos, x in enumerate(seq):
        if first[x] < 0:
            first[x] = pos
            continue
        mask = 0
        # a label seen twice in the window toggles back out
        for y in seq[first[x] + 1 : pos]:
            mask ^= 1 << (y - 1)
        out[x] = mask
    return tuple(out[1:])


_SEPARATORS = re.compile(r"[\s,]+")


def parse_gauss_code(text: str, compact: bool = False) -> GaussCode:
    """Parse a whitespace/comma separated code, or a digit string when ``compact``."""
    if compact:
        raw = [ch for ch in _SEPARATORS.sub("", text)]
    else:
        raw = [tok for tok in _SEPARATORS.split(text.strip()) if tok]
    return from_tokens(raw)


def from_tokens(raw: Sequence[str]) -> GaussCode:
    if not raw:
        raise EmptyInput()
    counts: dict[str, int] = {}
    for tok in raw:
        counts[tok] = counts.get(tok, 0) + 1
    for tok, cnt in counts.items():
        if cnt != 2:
            raise BadMultiplicity(tok, cnt)
    if len(raw) % 2:
        raise OddLength(len(raw))
    n = len(counts)
    table: dict[str, int] = {}
    if set(counts) == {str(x) for x in range(1, n + 1)}:
        # already labeled 1..n: keep the user's numbering
        table = {str(x): x for x in range(1, n + 1)}
    else:
        for tok in raw:
            table.setdefault(tok, len(table) + 1)
    tokens = tuple(sorted(table, key=table.__getitem__))
    return GaussCode(tuple(table[tok] for tok in raw), tokens)


def _check_label(code: GaussCode, x: int) -> None:
    if not 1 <= x <= code.n:
        raise LabelOutOfRange(x, code.n)


def interlace(code: GaussCode, x: int) -> EdgeSet:
    """Labels occurring exactly once strictly between the two occurrences of ``x``."""
    _check_label(code, x)
    return code._interlace[x - 1]


def interlace_of_set(code: GaussCode, mask: EdgeSet) -> EdgeSet:
    """Linear extension of :func:`interlace` to an arbitrary edge set."""
    out = 0
    rows = code._interlace
    i = 0
    while mask:
        if mask & 1:
            out ^= rows[i]
        mask >>= 1
        i += 1
    return out


def interlace_squared(code: GaussCode, x: int) -> EdgeSet:
    _check_label(code, x)
    return interlace_of_set(code, code._interlace[x - 1])


def interlace_table(code: GaussCode) -> list[EdgeSet]:
    return list(code._interlace)


def interlace_squared_table(code: GaussCode) -> list[EdgeSet]:
    return [interlace_of_set(code, row) for row in code._interlace]


@dataclass(frozen=True)
class ParityPartition:
    odd: EdgeSet
    even: EdgeSet


def parity_partition(code: GaussCode) -> ParityPartition:
    odd = 0
    for x, row in enumerate(code._interlace):
        if parity(row):
            odd |= 1 << x
    return ParityPartition(odd=odd, even=code.full & ~odd)


def relabel(seq: Sequence[int]) -> tuple[int, ...]:
    """Renumber labels by order of first occurrence."""
    table: dict[int, int] = {}
    for x in seq:
        table.setdefault(x, len(table) + 1)
    return tuple(table[x] for x in seq)


def canonicalize(code: GaussCode) -> GaussCode:
    start = code.seq.index(1)
    rotated = code.seq[start:] + code.seq[:start]
    table: dict[int, int] = {}
    for x in rotated:
        table.setdefault(x, len(table) + 1)
    tokens = [""] * code.n
    for old, new in table.items():
        tokens[new - 1] = code.tokens[old - 1]
    return GaussCode(tuple(table[x] for x in rotated), tuple(tokens))


def rotate(code: GaussCode, k: int) -> GaussCode:
    """Cyclic rotation by ``k`` positions, relabeled by first occurrence."""
    k %= len(code.seq)
    return GaussCode(relabel(code.seq[k:] + code.seq[:k]))


def reverse(code: GaussCode) -> GaussCode:
    return GaussCode(relabel(code.seq[::-1]))


def iter_codes(n: int) -> Iterator[GaussCode]:
    """Every double-occurrence word on n labels normalized by first occurrence.

    There are (2n - 1)!! of them; each cyclic class appears at least once.
    """
    seq: list[int] = []
    counts = [0] * (n + 2)

    def rec(next_new: int) -> Iterator[GaussCode]:
        if len(seq) == 2 * n:
            yield GaussCode(tuple(seq))
            return
        for x in range(1, next_new):
            if counts[x] == 1:
                counts[x] = 2
                seq.append(x)
                yield from rec(next_new)
                seq.pop()
                counts[x] = 1
        if next_new <= n:
            counts[next_new] = 1
            seq.append(next_new)
            yield from rec(next_new + 1)
            seq.pop()
            counts[next_new] = 0

    if n >= 1:
        yield from rec(1)


def random_code(n: int, rng) -> GaussCode:
    """Uniformly shuffled double-occurrence word; ``rng`` is a ``random.Random``."""
    seq = [x for x in range(1, n + 1) for _ in (0, 1)]
    rng.shuffle(seq)
    return GaussCode(relabel(seq))
