"""Partitions, Young-diagram combinatorics, and the partition lattice
operations the design kernel is built on.

A partition is stored without trailing zeros, so shapes that differ only in
padding compare and hash equal.  Operations that need a fixed ambient length
(tableaux, exponent lists, blossoms) take the order n explicitly.  Box
indices (i, j) are 1-based, matching the usual diagram convention; JSON
surfaces use 0-based arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    BoxOutsideDiagram,
    EmptyPartition,
    EnumerationTooLarge,
    LengthExceedsOrder,
    NotAPartition,
    NotRealizable,
)

# Hook-length counts grow combinatorially; refuse enumerations beyond this.
MAX_ENUMERATION = 200_000


class Partition:
    """A non-increasing tuple of positive parts (trailing zeros stripped)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotAPartition(f"parts must be non-increasing: {parts}")
        if parts and parts[-1] < 0:
            raise NotAPartition(f"parts must be non-negative: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    # -- basic shape data -------------------------------------------------

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "()"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        """First part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """1-based part access with zero padding beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    # -- diagram geometry --------------------------------------------------

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: column lengths become parts."""
        cols = [0] * self.first
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def _check_box(self, i: int, j: int) -> None:
        if not (1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]):
            raise BoxOutsideDiagram(f"box ({i},{j}) outside {self}")

    def hook(self, i: int, j: int) -> int:
        """Arm + leg + 1 at box (i, j)."""
        self._check_box(i, j)
        col = sum(1 for p in self.parts if p >= j)
        return self.parts[i - 1] + col - i - j + 1

    def content(self, i: int, j: int) -> int:
        self._check_box(i, j)
        return j - i

    # -- lattice moves -----------------------------------------------------

    def bottom(self) -> "Partition":
        """Delete the first row."""
        return Partition(self.parts[1:])

    def border_complement(self) -> "Partition":
        """Delete the first column: every positive part drops by one."""
        return Partition(p - 1 for p in self.parts)

    def frobenius(self) -> "FrobeniusForm":
        conj = self.conjugate()
        r = 0
        while self.part(r + 1) >= r + 1:
            r += 1
        arms = tuple(self.part(i) - i for i in range(1, r + 1))
        legs = tuple(conj.part(i) - i for i in range(1, r + 1))
        return FrobeniusForm(arms, legs)


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize an iterable of parts."""
    return Partition(parts)


@dataclass(frozen=True)
class FrobeniusForm:
    """Arm/leg lengths read off the main diagonal boxes."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise NotAPartition("arm and leg lists must have equal length")
        for seq in (self.arms, self.legs):
            for a, b in zip(seq, seq[1:]):
                if a <= b:
                    raise NotAPartition("Frobenius coordinates must strictly decrease")
            if seq and seq[-1] < 0:
                raise NotAPartition("Frobenius coordinates must be non-negative")

    def to_partition(self) -> Partition:
        r = len(self.arms)
        rows = [self.arms[i] + i + 1 for i in range(r)]
        depth = (self.legs[0] + 1) if r else 0
        for i in range(r + 1, depth + 1):
            rows.append(sum(1 for j, b in enumerate(self.legs, start=1) if b + j >= i))
        return Partition(rows)


@dataclass(frozen=True)
class MuntzTableau:
    """The n+1 partitions indexing blossom components for a shape of order n."""

    entries: tuple[Partition, ...]

    def __getitem__(self, i: int) -> Partition:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def order(self) -> int:
        return len(self.entries) - 1


def muntz_tableau(shape: Partition, n: int) -> MuntzTableau:
    """Entry 0 deletes the first row; entry i (1 <= i < n) adds a box to the
    first i rows and deletes row i+1; entry n adds a box to every row."""
    _require_order(shape, n)
    entries = [shape.bottom()]
    padded = shape.parts + (0,) * (n - len(shape.parts))
    for i in range(1, n):
        entries.append(
            Partition(tuple(p + 1 for p in padded[:i]) + padded[i + 1:])
        )
    entries.append(Partition(p + 1 for p in padded))
    return MuntzTableau(tuple(entries))


def _require_order(shape: Partition, n: int) -> None:
    if n < 1:
        raise LengthExceedsOrder(f"order must be positive, got {n}")
    if len(shape) > n:
        raise LengthExceedsOrder(f"length {len(shape)} exceeds order {n}")


@lru_cache(maxsize=None)
def _ssyt_count(parts: tuple[int, ...], n: int) -> int:
    shape = Partition(parts)
    num = 1
    den = 1
    for (i, j) in shape.boxes():
        num *= n + shape.content(i, j)
        den *= shape.hook(i, j)
    if num == 0:
        return 0
    q, r = divmod(num, den)
    assert r == 0, "hook product must divide the content product"
    return q


def ssyt_count(shape: Partition, n: int) -> int:
    """Number of semistandard fillings with entries at most n, by the
    hook-content product; 0 when the shape has more than n rows."""
    if len(shape) > n:
        return 0
    return _ssyt_count(shape.parts, n)


def hook_ratio_first_row(shape: Partition, n: int) -> Fraction:
    """ssyt_count(shape, n+1) / ssyt_count(bottom, n), which telescopes to a
    product over the first row only."""
    if not shape:
        raise EmptyPartition("first-row hook ratio needs a non-empty shape")
    out = Fraction(1)
    for j in range(1, shape.first + 1):
        out *= Fraction(n + 1 + shape.content(1, j), shape.hook(1, j))
    return out


def bottom_partition(shape: Partition) -> Partition:
    return shape.bottom()


def conjugate(shape: Partition) -> Partition:
    return shape.conjugate()


def hook_and_content(shape: Partition, i: int, j: int) -> tuple[int, int]:
    return shape.hook(i, j), shape.content(i, j)


def border_complement(shape: Partition) -> Partition:
    return shape.border_complement()


# -- exponent lists ---------------------------------------------------------


def partition_to_exponents(shape: Partition, n: int) -> tuple[int, ...]:
    """Strictly increasing exponents s_i = first - part(i+1) + i, with the
    top exponent first + n."""
    _require_order(shape, n)
    lam1 = shape.first
    return tuple(lam1 - shape.part(i + 1) + i for i in range(1, n + 1))


def exponents_to_partition(exponents: Sequence[int]) -> Partition:
    """Invert the exponent map; rejects lists that are not strictly
    increasing positive integers."""
    s = tuple(int(e) for e in exponents)
    if not s:
        raise NotRealizable("need at least one exponent")
    if any(e < 1 for e in s) or any(a >= b for a, b in zip(s, s[1:])):
        raise NotRealizable(f"exponents must be strictly increasing and >= 1: {s}")
    n = len(s)
    lam1 = s[-1] - n
    parts = [lam1] + [lam1 + i - s[i - 1] for i in range(1, n)]
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise NotRealizable(f"exponents {s} do not define a partition")
    shape = Partition(parts)
    assert partition_to_exponents(shape, n) == s
    return shape


# -- elevation lattice -------------------------------------------------------


def is_dimension_elevation(shape: Partition, n: int, target: Partition) -> bool:
    """True when the order-n space of `shape` sits inside the order-(n+1)
    space of `target`, i.e. the exponent sets nest."""
    if len(target) > n + 1:
        return False
    own = set(partition_to_exponents(shape, n))
    return own <= set(partition_to_exponents(target, n + 1))


def dimension_elevation_partitions(
    shape: Partition, n: int, r_max: int
) -> list[Partition]:
    """All shapes mu with the order-n space of `shape` inside the
    order-(n+1) space of mu: the shifted family (r added to every row plus a
    new row r) for 0 <= r <= r_max, and the insertion family (first s rows
    decremented, a new part rho spliced in) over all admissible s, rho."""
    _require_order(shape, n)
    out: list[Partition] = []
    seen: set[tuple[int, ...]] = set()
    padded = shape.parts + (0,) * (n + 1 - len(shape.parts))
    for r in range(r_max + 1):
        mu = Partition(tuple(p + r for p in padded[:n]) + (r,))
        if mu.parts not in seen:
            seen.add(mu.parts)
            out.append(mu)
    for s in range(1, n + 1):
        if padded[s - 1] <= padded[s]:
            continue
        head = tuple(p - 1 for p in padded[:s])
        tail = padded[s:n]
        for rho in range(padded[s], padded[s - 1]):
            mu = Partition(head + (rho,) + tail)
            if mu.parts not in seen:
                seen.add(mu.parts)
                out.append(mu)
    for mu in out:
        assert is_dimension_elevation(shape, n, mu)
    return out


def descent_chain(shape: Partition, n: int) -> list[tuple[Partition, int]]:
    """Iterated border complements down to the empty shape, with orders
    n, n+1, ...; length is first part + 1."""
    _require_order(shape, n)
    chain = [(shape, n)]
    cur, order = shape, n
    while cur:
        cur = cur.border_complement()
        order += 1
        chain.append((cur, order))
    return chain


# -- tableau enumeration ------------------------------------------------------


def enumerate_ssyt(
    shape: Partition, n: int, limit: int = MAX_ENUMERATION
) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard fillings (weakly increasing rows, strictly increasing
    columns, entries in 1..n), as tuples of row tuples."""
    count = ssyt_count(shape, n)
    if count > limit:
        raise EnumerationTooLarge(f"{count} tableaux exceeds the bound {limit}")
    if not shape:
        return [()]
    if len(shape) > n:
        return []

    rows = shape.parts
    results: list[tuple[tuple[int, ...], ...]] = []
    filled: list[list[int]] = [[0] * p for p in rows]

    def fill(i: int, j: int) -> None:
        if i == len(rows):
            results.append(tuple(tuple(r) for r in filled))
            return
        ni, nj = (i, j + 1) if j + 1 < rows[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, filled[i][j - 1])
        if i > 0 and j < rows[i - 1]:
            lo = max(lo, filled[i - 1][j] + 1)
        for v in range(lo, n + 1):
            filled[i][j] = v
            fill(ni, nj)

    fill(0, 0)
    return results


# -- enumeration helpers used by identity checks ------------------------------


def subpartitions(shape: Partition) -> Iterator[Partition]:
    """All mu contained in shape."""

    def rec(i: int, cap: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(shape.parts):
            yield acc
            return
        for p in range(min(cap, shape.parts[i]) + 1):
            yield from rec(i + 1, p, acc + (p,))

    for parts in rec(0, shape.first, ()):
        yield Partition(parts)


def interlacing_partitions(shape: Partition, n: int) -> Iterator[Partition]:
    """All mu of length < n with part(i) between part i and part i+1 of the
    padded shape."""
    padded = shape.parts + (0,) * (n - len(shape.parts))

    def rec(i: int, prev: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == n - 1:
            yield acc
            return
        hi = min(prev, padded[i])
        lo = padded[i + 1]
        for p in range(hi, lo - 1, -1):
            yield from rec(i + 1, p, acc + (p,))

    if n == 1:
        yield Partition()
        return
    for parts in rec(0, padded[0], ()):
        yield Partition(parts)


def partitions_of_weight_at_most(w: int) -> Iterator[Partition]:
    """Every partition with weight <= w, the empty one first."""
    for m in range(w + 1):
        yield from partitions_of_weight(m)


def partitions_of_weight(m: int) -> Iterator[Partition]:
    def rec(rem: int, cap: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield acc
            return
        for p in range(min(cap, rem), 0, -1):
            yield from rec(rem - p, p, acc + (p,))

    for parts in rec(m, m, ()):
        yield Partition(parts)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
