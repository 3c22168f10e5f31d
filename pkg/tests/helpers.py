"""Shared test helpers: small space inventories and witness contracts."""

from __future__ import annotations

import random

from topogames.finite_topology import (
    FiniteSpace,
    bits,
    enumerate_spaces,
    random_space,
)


def spaces_up_to(n: int) -> list[FiniteSpace]:
    out: list[FiniteSpace] = []
    for k in range(1, n + 1):
        out.extend(enumerate_spaces(k))
    return out


def sampled_spaces(n: int, count: int, seed: int = 0) -> list[FiniteSpace]:
    rng = random.Random(seed)
    return [random_space(n, rng) for _ in range(count)]


def assert_delta_witness(space: FiniteSpace, p, w: int) -> None:
    """Post-hoc contract for any W returned by delta_baire_witness."""
    assert w != 0
    assert space.is_open(w)
    closed = p.product_closure()
    for x in bits(w):
        assert closed.rows[x] & w == w
