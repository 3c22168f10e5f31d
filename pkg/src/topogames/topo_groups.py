"""Finite groups with topologies: classification and continuity witnesses.

A group lives on the same carrier 0..n-1 as its FiniteSpace.  Joint
continuity of multiplication is decided by the minimal-neighborhood
criterion U_g · U_h ⊆ U_{g·h}, which is equivalent to the open-preimage
definition because finite spaces have minimal neighborhoods (the tests
cross-check against the definitional form).

The inverse-continuity extractor turns the closure argument into code:
shrink U to V with cl(V·V) ⊆ U, close I(V) in the square, find W with
W×W inside that closure, and return P = W⁻¹·W together with its checked
symmetry and containment contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .diagonal_relations import Relation, delta_baire_witness, is_delta_baire
from .finite_topology import (
    BudgetExceededError,
    FiniteSpace,
    bits,
    enumerate_spaces,
    mask_of,
    points_of,
)


class NoShrinkError(RuntimeError):
    """No open V ∋ e with cl(V·V) ⊆ U exists (non-regular obstruction)."""


class NoWitnessError(RuntimeError):
    """The Δ-Baire step found no W; falsifies the hypothesis, not the code."""


@dataclass(frozen=True)
class FiniteTopoGroup:
    """Cayley table plus a topology on the same carrier."""

    order: int
    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    space: FiniteSpace

    def __post_init__(self) -> None:
        n = self.order
        if self.space.n != n:
            raise ValueError("space carrier must match the group order")
        if len(self.cayley) != n or any(len(r) != n for r in self.cayley):
            raise ValueError("cayley table must be order×order")
        rng = range(n)
        for a in rng:
            if self.cayley[self.identity][a] != a or self.cayley[a][self.identity] != a:
                raise ValueError("identity law fails")
        for a in rng:
            b = self.inverse[a]
            if self.cayley[a][b] != self.identity or self.cayley[b][a] != self.identity:
                raise ValueError("inverse law fails")
        for a in rng:
            for b in rng:
                for c in rng:
                    if self.cayley[self.cayley[a][b]][c] != self.cayley[a][self.cayley[b][c]]:
                        raise ValueError("associativity fails")

    @staticmethod
    def build(cayley, space: FiniteSpace) -> "FiniteTopoGroup":
        """Derive identity and inverses from the table, then validate."""
        n = len(cayley)
        table = tuple(tuple(row) for row in cayley)
        identity = None
        for e in range(n):
            if all(table[e][a] == a and table[a][e] == a for a in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity")
        inverse = []
        for a in range(n):
            inv = [b for b in range(n) if table[a][b] == identity]
            if len(inv) != 1:
                raise ValueError("table has no unique inverse")
            inverse.append(inv[0])
        return FiniteTopoGroup(n, table, identity, tuple(inverse), space)

    # -- element and set algebra ------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def left_translate(self, g: int, s: int) -> int:
        return mask_of(self.cayley[g][x] for x in bits(s))

    def right_translate(self, s: int, g: int) -> int:
        return mask_of(self.cayley[x][g] for x in bits(s))

    def set_product(self, a: int, b: int) -> int:
        m = 0
        for x in bits(a):
            m |= self.left_translate(x, b)
        return m

    def set_inverse(self, s: int) -> int:
        return mask_of(self.inverse[x] for x in bits(s))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "cayley": [list(r) for r in self.cayley],
            "space": self.space.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "FiniteTopoGroup":
        return FiniteTopoGroup.build(obj["cayley"], FiniteSpace.from_json(obj["space"]))


@dataclass(frozen=True)
class Classification:
    semitopological: bool
    paratopological: bool
    topological: bool


def classify(g: FiniteTopoGroup) -> Classification:
    """Translation / joint / inversion continuity via minimal neighborhoods."""
    sp = g.space
    nb = sp.min_nbhd
    semi = True
    for a in range(g.order):
        for x in range(g.order):
            if g.left_translate(a, nb[x]) | nb[g.mul(a, x)] != nb[g.mul(a, x)]:
                semi = False
                break
            if g.right_translate(nb[x], a) | nb[g.mul(x, a)] != nb[g.mul(x, a)]:
                semi = False
                break
        if not semi:
            break
    para = semi
    if para:
        for a in range(g.order):
            for b in range(g.order):
                prod = g.set_product(nb[a], nb[b])
                if prod | nb[g.mul(a, b)] != nb[g.mul(a, b)]:
                    para = False
                    break
            if not para:
                break
    topo = para
    if topo:
        for a in range(g.order):
            if g.set_inverse(nb[a]) | nb[g.inv(a)] != nb[g.inv(a)]:
                topo = False
                break
    return Classification(semi, para, topo)


def i_relation(g: FiniteTopoGroup, m: int) -> Relation:
    """The relation {(x,y) : x⁻¹·y ∈ M}; its row at x is the translate x·M."""
    g.space.check_subset(m)
    return Relation(g.space, tuple(g.left_translate(x, m) for x in range(g.order)))


@dataclass(frozen=True)
class InverseWitness:
    """Output of the inverse-continuity extraction for one open U ∋ e."""

    u: int
    v: int
    w: int
    p: int


def inverse_continuity_witness(g: FiniteTopoGroup, u: int) -> InverseWitness:
    """Run the closure argument on a concrete open U ∋ e and return P = W⁻¹·W.

    Steps: smallest open V ∋ e (bitmask order) with cl(V·V) ⊆ U; close
    I(V) in the square; W from the diagonal-witness search; P = W⁻¹·W.
    The returned P is asserted open, symmetric, and inside U ∩ U⁻¹.
    """
    sp = g.space
    sp.check_subset(u)
    e = g.identity
    if not sp.is_open(u) or not (u >> e) & 1:
        raise ValueError("U must be an open set containing the identity")
    v = None
    for cand in sp.nonempty_opens():
        if (cand >> e) & 1 and sp.closure(g.set_product(cand, cand)) | u == u:
            v = cand
            break
    if v is None:
        raise NoShrinkError(f"no open V ∋ e with cl(V·V) ⊆ {u:#x}")
    iv = i_relation(g, v)
    w = delta_baire_witness(sp, iv)
    if w is None:
        raise NoWitnessError("no open W with W×W inside cl(I(V))")
    p = g.set_product(g.set_inverse(w), w)
    u_inv = g.set_inverse(u)
    assert sp.is_open(p)
    assert (p >> e) & 1
    assert g.set_inverse(p) == p
    assert p | u == u and p | u_inv == u_inv
    return InverseWitness(u=u, v=v, w=w, p=p)


# -- small-group catalog ----------------------------------------------------


def cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def klein_table() -> list[list[int]]:
    # (Z2)² with elements 0..3 as bit pairs
    return [[a ^ b for b in range(4)] for a in range(4)]


def s3_table() -> list[list[int]]:
    """Symmetric group on 3 letters; elements are permutation tuples."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p∘q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    return [[index[compose(p, q)] for q in perms] for p in perms]


def groups_of_order(n: int, all_labeled: bool = False) -> list[tuple[tuple[int, ...], ...]]:
    """Group tables of order n: one per isomorphism class, or every labeled
    table with identity 0 via the Latin-square fallback."""
    if all_labeled:
        return list(_labeled_group_tables(n))
    tables = {
        1: [cyclic_table(1)],
        2: [cyclic_table(2)],
        3: [cyclic_table(3)],
        4: [cyclic_table(4), klein_table()],
        5: [cyclic_table(5)],
        6: [cyclic_table(6), s3_table()],
    }
    if n not in tables:
        raise BudgetExceededError(f"no group catalog for order {n}")
    return [tuple(tuple(r) for r in t) for t in tables[n]]


def _labeled_group_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Backtracking census of all group tables on 0..n-1 with identity 0."""
    if n > 5:
        raise BudgetExceededError("labeled group census capped at order 5")
    table = [[-1] * n for _ in range(n)]
    table[0] = list(range(n))
    for a in range(n):
        table[a][0] = a

    def assoc_ok(a: int, b: int) -> bool:
        # check all triples fully determined so far that involve (a, b)
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    xy = table[x][y]
                    if xy < 0:
                        continue
                    yz = table[y][z]
                    if yz < 0:
                        continue
                    l = table[xy][z]
                    r = table[x][yz]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    cells = [(a, b) for a in range(1, n) for b in range(1, n)]

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(cells):
            try:
                FiniteTopoGroup.build(table, _any_space(n))
            except ValueError:
                return
            yield tuple(tuple(r) for r in table)
            return
        a, b = cells[k]
        row_used = set(table[a])
        col_used = {table[x][b] for x in range(n)}
        for c in range(n):
            if c in row_used or c in col_used:
                continue
            table[a][b] = c
            if assoc_ok(a, b):
                yield from rec(k + 1)
            table[a][b] = -1

    yield from rec(0)


def _any_space(n: int) -> FiniteSpace:
    from .finite_topology import indiscrete

    return indiscrete(n)


# -- theorem harness --------------------------------------------------------


@dataclass
class HarnessReport:
    max_order: int
    instances: int = 0
    semitopological: int = 0
    paratopological: int = 0
    topological: int = 0
    delta_baire_instances: int = 0
    regular_instances: int = 0
    witnesses_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    per_order: dict[int, dict] = field(default_factory=dict)

    @property
    def paratopological_all_topological(self) -> bool:
        return all(
            v.get("kind") != "paratopological-not-topological" for v in self.violations
        )

    def to_json(self) -> dict:
        return {
            "format": 1,
            "max_order": self.max_order,
            "instances": self.instances,
            "semitopological": self.semitopological,
            "paratopological": self.paratopological,
            "topological": self.topological,
            "delta_baire_instances": self.delta_baire_instances,
            "regular_instances": self.regular_instances,
            "witnesses_checked": self.witnesses_checked,
            "violations": self.violations,
            "paratopological_all_topological": self.paratopological_all_topological,
            "per_order": self.per_order,
        }


def harness_instances(
    max_order: int, all_labeled_groups: bool = False
) -> Iterator[FiniteTopoGroup]:
    """Every (group table, labeled topology) pair up to max_order."""
    if max_order > 5:
        raise BudgetExceededError("harness capped at order 5 (topology enumeration)")
    for order in range(1, max_order + 1):
        for table in groups_of_order(order, all_labeled=all_labeled_groups):
            for space in enumerate_spaces(order):
                yield FiniteTopoGroup.build(table, space)


def theorem1_harness(
    max_order: int, all_labeled_groups: bool = False
) -> HarnessReport:
    """Scan all desk-scale instances for 'paratopological ∧ Δ-Baire ⇒ topological'
    and run the inverse-continuity extractor on every open U ∋ e of every
    paratopological instance."""
    report = HarnessReport(max_order=max_order)
    for g in harness_instances(max_order, all_labeled_groups):
        report.instances += 1
        stats = report.per_order.setdefault(
            g.order, {"instances": 0, "paratopological": 0, "topological": 0}
        )
        stats["instances"] += 1
        cls = classify(g)
        delta = is_delta_baire(g.space)
        if cls.semitopological:
            report.semitopological += 1
        if g.space.is_regular():
            report.regular_instances += 1
        if delta:
            report.delta_baire_instances += 1
        if not cls.paratopological:
            continue
        report.paratopological += 1
        stats["paratopological"] += 1
        if cls.topological:
            report.topological += 1
            stats["topological"] += 1
        if delta and not cls.topological:
            report.violations.append(
                {
                    "kind": "paratopological-not-topological",
                    "group": g.to_json(),
                }
            )
        e = g.identity
        for u in g.space.nonempty_opens():
            if not (u >> e) & 1:
                continue
            try:
                wit = inverse_continuity_witness(g, u)
            except (NoShrinkError, NoWitnessError) as exc:
                report.violations.append(
                    {
                        "kind": "witness-failure",
                        "error": str(exc),
                        "u": points_of(u),
                        "group": g.to_json(),
                    }
                )
                continue
            report.witnesses_checked += 1
            p, u_inv = wit.p, g.set_inverse(u)
            if g.set_inverse(p) != p or p | u_inv != u_inv:
                report.violations.append(
                    {
                        "kind": "witness-contract",
                        "u": points_of(u),
                        "p": points_of(p),
                        "group": g.to_json(),
                    }
                )
    return report
