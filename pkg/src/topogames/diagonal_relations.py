"""Relations on X×X, semi-neighborhoods of the diagonal, and Δ-Baire checks.

A relation P ⊆ X×X is stored row-wise: row x is P_x = {y : (x,y) ∈ P}
as a bitmask.  P is semi-open when every row is open, and a
semi-neighborhood of the diagonal when additionally x ∈ P_x for all x.

The Δ-Baire question ("does every semi-neighborhood P admit a nonempty
open W with W×W inside the closure of P?") is decided two ways: the
production path reduces to the unique ⊆-least semi-neighborhood, and a
brute-force oracle enumerates every semi-neighborhood outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .finite_topology import (
    BudgetExceededError,
    FiniteSpace,
    bits,
    mask_of,
    points_of,
)


@dataclass(frozen=True)
class Relation:
    """A subset of X×X given by its rows P_x."""

    space: FiniteSpace
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.space.n:
            raise ValueError("need one row per carrier point")
        for x, r in enumerate(self.rows):
            self.space.check_subset(r)

    def contains(self, x: int, y: int) -> bool:
        return bool((self.rows[x] >> y) & 1)

    def is_semi_open(self) -> bool:
        return all(self.space.is_open(r) for r in self.rows)

    def is_semi_nbhd(self) -> bool:
        """Semi-open and contains the diagonal."""
        return self.is_semi_open() and all(
            (r >> x) & 1 for x, r in enumerate(self.rows)
        )

    def rowwise_subset_of(self, other: "Relation") -> bool:
        return all(a | b == b for a, b in zip(self.rows, other.rows))

    def product_closure(self) -> "Relation":
        """Closure of P in the product topology on X×X.

        (x,y) lies in the closure iff the minimal box
        min_nbhd(x) × min_nbhd(y) meets P, i.e. y is in the closure of
        the union of the rows over min_nbhd(x).
        """
        space = self.space
        rows = []
        for x in range(space.n):
            meet = 0
            for xp in bits(space.min_nbhd[x]):
                meet |= self.rows[xp]
            rows.append(space.closure(meet))
        return Relation(space, tuple(rows))

    def box_disjoint(self, v: int, w: int) -> bool:
        """True iff (V × W) ∩ P = ∅."""
        return all(self.rows[x] & w == 0 for x in bits(v))

    def to_json(self) -> dict:
        return {
            "space": self.space.to_json(),
            "rows": [points_of(r) for r in self.rows],
        }

    @staticmethod
    def from_json(obj: dict) -> "Relation":
        space = FiniteSpace.from_json(obj["space"])
        return Relation(space, tuple(mask_of(r) for r in obj["rows"]))


def identity_relation(space: FiniteSpace) -> Relation:
    return Relation(space, tuple(1 << x for x in range(space.n)))


def minimal_semi_nbhd(space: FiniteSpace) -> Relation:
    """The ⊆-least semi-neighborhood of the diagonal: row x = min_nbhd(x)."""
    return Relation(space, space.min_nbhd)


def delta_baire_witness(space: FiniteSpace, p: Relation) -> int | None:
    """Nonempty open W with W×W ⊆ closure(p), or None.

    Deterministic: the first open in ascending bitmask order.
    """
    if p.space != space:
        raise ValueError("relation lives on a different space")
    if not p.is_semi_nbhd():
        raise ValueError("relation is not a semi-neighborhood of the diagonal")
    closed = p.product_closure()
    for w in space.nonempty_opens():
        if all(closed.rows[x] & w == w for x in bits(w)):
            return w
    return None


def is_delta_baire(space: FiniteSpace) -> bool:
    """Every semi-neighborhood of the diagonal admits a witness.

    Reduction: product closure is monotone rowwise and the minimal
    semi-neighborhood is ⊆-least, so a witness for the minimal one is a
    witness for all, and a failure there is itself a counterexample.
    """
    if space.n == 0:
        return False
    return delta_baire_witness(space, minimal_semi_nbhd(space)) is not None


def semi_nbhd_instances(space: FiniteSpace, max_instances: int = 1 << 20):
    """Every semi-neighborhood of the diagonal (the brute-force universe)."""
    per_point = [
        [u for u in space.nonempty_opens() if (u >> x) & 1] for x in range(space.n)
    ]
    total = 1
    for choices in per_point:
        total *= len(choices)
    if total > max_instances:
        raise BudgetExceededError(
            f"{total} semi-neighborhood instances exceed the cap {max_instances}"
        )
    for combo in iter_product(*per_point):
        yield Relation(space, tuple(combo))


def is_delta_baire_bruteforce(
    space: FiniteSpace, max_instances: int = 1 << 20
) -> bool:
    """Oracle: check witness existence for every semi-neighborhood."""
    if space.n == 0:
        return False
    for p in semi_nbhd_instances(space, max_instances):
        if delta_baire_witness(space, p) is None:
            return False
    return True


def is_baire(space: FiniteSpace) -> bool:
    """Intersection of all dense open sets is nonempty and dense.

    A finite space has finitely many dense opens, and countable families
    repeat, so the full intersection decides the property.  The empty
    space is pinned not Baire.
    """
    if space.n == 0:
        return False
    meet = space.carrier
    for u in space.opens():
        if space.is_dense(u):
            meet &= u
    return meet != 0 and space.is_dense(meet)
