"""Finite topological spaces as minimal-neighborhood tables.

A topology on points 0..n-1 is stored as one bitmask per point: the
smallest open set containing that point.  The two table axioms are
x ∈ min_nbhd(x), and y ∈ min_nbhd(x) ⇒ min_nbhd(y) ⊆ min_nbhd(x);
open sets are then exactly the unions of minimal neighborhoods, which
makes every point-set operation below a handful of integer mask ops.

Point sets are plain ints (bit i = point i).  Spaces are immutable and
hashable, so enumeration streams and caches are safe to share.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_ENUM_POINTS = 5      # labeled-topology enumeration cap
MAX_OPENS_POINTS = 16    # full open-set iteration cap
MAX_PRODUCT_POINTS = 4096


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured desk-scale cap."""


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def points_of(mask: int) -> list[int]:
    return list(bits(mask))


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topology given by per-point minimal open neighborhoods."""

    n: int
    min_nbhd: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("point count must be nonnegative")
        if len(self.min_nbhd) != self.n:
            raise ValueError("need one minimal neighborhood per point")
        full = (1 << self.n) - 1
        for x, m in enumerate(self.min_nbhd):
            if m & ~full:
                raise ValueError(f"min_nbhd({x}) mentions out-of-range points")
            if not (m >> x) & 1:
                raise ValueError(f"point {x} missing from its own minimal neighborhood")
        for x, m in enumerate(self.min_nbhd):
            for y in bits(m):
                if self.min_nbhd[y] | m != m:
                    raise ValueError(
                        f"min_nbhd({y}) not inside min_nbhd({x}) although {y} lies in it"
                    )

    # -- carrier and subset plumbing ------------------------------------

    @property
    def carrier(self) -> int:
        return (1 << self.n) - 1

    def check_subset(self, s: int) -> None:
        if s < 0 or s & ~self.carrier:
            raise ValueError(f"point set {s:#x} not inside carrier of {self.n} points")

    # -- point-set operations -------------------------------------------

    def is_open(self, s: int) -> bool:
        """True iff s is a union of minimal neighborhoods."""
        self.check_subset(s)
        return all(self.min_nbhd[x] | s == s for x in bits(s))

    def closure(self, s: int) -> int:
        """{x : min_nbhd(x) meets s}."""
        self.check_subset(s)
        return mask_of(x for x in range(self.n) if self.min_nbhd[x] & s)

    def interior(self, s: int) -> int:
        self.check_subset(s)
        return mask_of(x for x in bits(s) if self.min_nbhd[x] | s == s)

    def is_dense(self, s: int) -> bool:
        return self.closure(s) == self.carrier

    def opens(self) -> tuple[int, ...]:
        """All open sets, ascending by bitmask value (incl. the empty set)."""
        return _opens(self)

    def nonempty_opens(self) -> tuple[int, ...]:
        return _opens(self)[1:] if self.n else ()

    def is_regular(self) -> bool:
        """Definitional check: every open U ∋ x admits open V ∋ x, cl(V) ⊆ U."""
        ops = self.opens()
        for x in range(self.n):
            for u in ops:
                if not (u >> x) & 1:
                    continue
                if not any(
                    (v >> x) & 1 and self.closure(v) | u == u for v in ops
                ):
                    return False
        return True

    def is_partition(self) -> bool:
        """True iff the minimal neighborhoods partition the carrier."""
        for x in range(self.n):
            for y in range(x + 1, self.n):
                mx, my = self.min_nbhd[x], self.min_nbhd[y]
                if mx & my and mx != my:
                    return False
        return True

    def subspace(self, y: int) -> tuple["FiniteSpace", tuple[int, ...]]:
        """Subspace on y with its index mapping (new index -> old point)."""
        self.check_subset(y)
        if y == 0:
            raise ValueError("empty subspace")
        pts = points_of(y)
        index = {p: i for i, p in enumerate(pts)}
        rows = tuple(
            mask_of(index[q] for q in bits(self.min_nbhd[p] & y)) for p in pts
        )
        return FiniteSpace(len(pts), rows), tuple(pts)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "points": self.n,
            "min_nbhds": [points_of(m) for m in self.min_nbhd],
        }

    @staticmethod
    def from_json(obj: dict) -> "FiniteSpace":
        n = obj["points"]
        rows = tuple(mask_of(r) for r in obj["min_nbhds"])
        return FiniteSpace(n, rows)


@lru_cache(maxsize=None)
def _opens(space: FiniteSpace) -> tuple[int, ...]:
    if space.n > MAX_OPENS_POINTS:
        raise BudgetExceededError(
            f"open-set iteration capped at {MAX_OPENS_POINTS} points, got {space.n}"
        )
    return tuple(s for s in range(1 << space.n) if space.is_open(s))


# -- standard small spaces -----------------------------------------------


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, tuple(1 << i for i in range(n)))


def indiscrete(n: int) -> FiniteSpace:
    full = (1 << n) - 1
    return FiniteSpace(n, tuple(full for _ in range(n)))


def sierpinski() -> FiniteSpace:
    """Two points; {0} open, {1} not."""
    return FiniteSpace(2, (0b01, 0b11))


def chain(n: int) -> FiniteSpace:
    """min_nbhd(k) = {0..k}; opens are the down-sets {0..j}."""
    return FiniteSpace(n, tuple((1 << (k + 1)) - 1 for k in range(n)))


def partition_space(blocks: Iterable[Iterable[int]]) -> FiniteSpace:
    block_masks = [mask_of(b) for b in blocks]
    union = 0
    for m in block_masks:
        if union & m:
            raise ValueError("blocks overlap")
        union |= m
    n = union.bit_length()
    if union != (1 << n) - 1:
        raise ValueError("blocks must cover 0..n-1 without gaps")
    rows = [0] * n
    for m in block_masks:
        for p in bits(m):
            rows[p] = m
    return FiniteSpace(n, tuple(rows))


# -- products, subspaces, enumeration -------------------------------------


def product(a: FiniteSpace, b: FiniteSpace) -> FiniteSpace:
    """Product space on pairs, point (x, y) at flat index x*b.n + y."""
    if a.n * b.n > MAX_PRODUCT_POINTS:
        raise BudgetExceededError("product carrier too large")
    rows = []
    for x in range(a.n):
        for y in range(b.n):
            m = 0
            mb = b.min_nbhd[y]
            for p in bits(a.min_nbhd[x]):
                m |= mb << (p * b.n)
            rows.append(m)
    return FiniteSpace(a.n * b.n, tuple(rows))


def enumerate_spaces(n: int) -> Iterator[FiniteSpace]:
    """All labeled topologies on n points, each exactly once.

    Backtracks over minimal-neighborhood tables; the nesting axiom is
    checked pairwise as rows are assigned, so the stream is ordered
    lexicographically by table.
    """
    if n > MAX_ENUM_POINTS:
        raise BudgetExceededError(f"topology enumeration capped at {MAX_ENUM_POINTS} points")
    if n == 0:
        yield FiniteSpace(0, ())
        return
    candidates = [
        [m for m in range(1 << n) if (m >> x) & 1] for x in range(n)
    ]
    assigned = [0] * n

    def consistent(x: int, m: int) -> bool:
        for y in range(x):
            my = assigned[y]
            if (m >> y) & 1 and my | m != m:
                return False
            if (my >> x) & 1 and m | my != my:
                return False
        return True

    def rec(x: int) -> Iterator[FiniteSpace]:
        if x == n:
            yield FiniteSpace(n, tuple(assigned))
            return
        for m in candidates[x]:
            if consistent(x, m):
                assigned[x] = m
                yield from rec(x + 1)

    yield from rec(0)


def count_topologies_bruteforce(n: int) -> int:
    """Independent census: every family of subsets, filtered by the axioms.

    Exponential (2^(2^n) families); the oracle for enumerate_spaces.
    """
    if n > 3:
        raise BudgetExceededError("brute-force topology census capped at 3 points")
    full = (1 << n) - 1
    subsets = list(range(1 << n))
    count = 0
    for fam_bits in range(1 << (1 << n)):
        fam = [s for s in subsets if (fam_bits >> s) & 1]
        if 0 not in fam or full not in fam:
            continue
        ok = True
        for s in fam:
            for t in fam:
                if (fam_bits >> (s | t)) & 1 == 0 or (fam_bits >> (s & t)) & 1 == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All set partitions of {0..n-1} (Bell-number many)."""
    if n == 0:
        yield []
        return

    def rec(i: int, blocks: list[list[int]]) -> Iterator[list[list[int]]]:
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def partition_spaces(n: int) -> Iterator[FiniteSpace]:
    """All partition topologies on n points (the regular finite spaces)."""
    for part in set_partitions(n):
        yield partition_space(part)


def random_space(n: int, rng: random.Random, density: float = 0.35) -> FiniteSpace:
    """Seeded random topology: random reflexive rows, closed under nesting."""
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                rows[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for x in range(n):
            m = rows[x]
            for y in bits(m):
                if rows[y] | m != m:
                    m |= rows[y]
            if m != rows[x]:
                rows[x] = m
                changed = True
    return FiniteSpace(n, tuple(rows))


CATALOG = {
    "point": discrete(1),
    "sierpinski": sierpinski(),
    "discrete2": discrete(2),
    "discrete3": discrete(3),
    "indiscrete2": indiscrete(2),
    "indiscrete3": indiscrete(3),
    "chain3": chain(3),
    "partition_2_1": partition_space([[0, 1], [2]]),
}
