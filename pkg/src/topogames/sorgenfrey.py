"""Exact symbolic witnesses on the Sorgenfrey line over the rationals.

Basic open sets are half-open intervals [a, b) with rational endpoints;
everything below is decided by exact Fraction arithmetic, no floats.
The carrier is ℚ rather than ℝ: all the desk-scale witnesses (the
discontinuity of negation, the Δ-Baire failure, and the interval-
splitting β strategy) only ever mention rational points, and ℚ keeps
every predicate decidable.

Difference strips {(x,y) : y-x ∈ [a,b)} play the role the square
relations I(V) play on finite carriers; their closures pick up the
right endpoint, which is the whole content of the failure witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import games

Rat = Fraction
RatLike = Union[Fraction, int, str]


def rat(x: RatLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rat_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SInterval:
    """The basic open set [a, b)."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.a, Fraction) or not isinstance(self.b, Fraction):
            raise ValueError("endpoints must be exact rationals")
        if not self.a < self.b:
            raise ValueError(f"need a < b, got [{rat_str(self.a)}, {rat_str(self.b)})")

    def contains(self, x: RatLike) -> bool:
        return self.a <= rat(x) < self.b

    def is_subset_of(self, other: "SInterval") -> bool:
        return other.a <= self.a and self.b <= other.b

    def __str__(self) -> str:
        return f"[{rat_str(self.a)}, {rat_str(self.b)})"

    def to_json(self) -> dict:
        return {"a": rat_str(self.a), "b": rat_str(self.b)}

    @staticmethod
    def from_json(obj: dict) -> "SInterval":
        return SInterval(rat(obj["a"]), rat(obj["b"]))


def interval(a: RatLike, b: RatLike) -> SInterval:
    return SInterval(rat(a), rat(b))


@dataclass(frozen=True)
class Strip:
    """{(x, y) : y - x ∈ [a, b)} — or [a, b] when closed_right."""

    a: Fraction
    b: Fraction
    closed_right: bool = False

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise ValueError("need a < b")

    def contains(self, x: RatLike, y: RatLike) -> bool:
        d = rat(y) - rat(x)
        if self.closed_right:
            return self.a <= d <= self.b
        return self.a <= d < self.b

    def box_disjoint(self, v: SInterval, w: SInterval) -> bool:
        """True iff (V × W) ∩ strip = ∅.

        Differences w' - v' over v' ∈ V, w' ∈ W fill the open interval
        (w.a - v.b, w.b - v.a) (ℚ is dense), so disjointness is a
        two-inequality check regardless of the right endpoint.
        """
        lo = w.a - v.b
        hi = w.b - v.a
        return hi <= self.a or lo >= self.b

    def __str__(self) -> str:
        right = "]" if self.closed_right else ")"
        return f"{{y-x ∈ [{rat_str(self.a)}, {rat_str(self.b)}{right}}}"

    def to_json(self) -> dict:
        return {"a": rat_str(self.a), "b": rat_str(self.b), "closed_right": self.closed_right}

    @staticmethod
    def from_json(obj: dict) -> "Strip":
        return Strip(rat(obj["a"]), rat(obj["b"]), bool(obj["closed_right"]))


def i_strip(m: SInterval) -> Strip:
    """I(M) on the additive line: row at x is the translate x + M."""
    return Strip(m.a, m.b, closed_right=False)


P_UNIT = i_strip(interval(0, 1))


# -- closures -----------------------------------------------------------------


def interval_closure(i: SInterval) -> tuple[SInterval, tuple[str, ...]]:
    """[a, b) is clopen; the trace names the separating neighborhoods."""
    trace = (
        f"x < {rat_str(i.a)}: the basic set [x, {rat_str(i.a)}) misses {i}",
        f"x ≥ {rat_str(i.b)}: the basic set [x, x+1) misses {i}",
        f"closure({i}) = {i}",
    )
    return i, trace


def strip_closure(s: Strip) -> Strip:
    """Closure of a half-open strip in the Sorgenfrey plane: [a, b] strip.

    Points with y-x = b are limits of boxes [x, x+ε)×[y, y+δ) meeting
    the strip (the corner (x+ε/2, y) has difference b-ε/2); points with
    y-x < a or y-x > b own a box missing the strip.
    """
    if s.closed_right:
        raise ValueError("strip already closed on the right")
    return Strip(s.a, s.b, closed_right=True)


def box_meets_strip(x: Rat, y: Rat, eps: Rat, delta: Rat, s: Strip) -> bool:
    """Does [x, x+ε) × [y, y+δ) meet the strip?  Exact primitive."""
    if eps <= 0 or delta <= 0:
        raise ValueError("box sides must be positive")
    lo = y - (x + eps)  # differences fill (lo, hi), plus y-x itself
    hi = (y + delta) - x
    if s.closed_right:
        return lo < s.b and hi > s.a
    return lo < s.b and hi > s.a


def in_strip_closure_by_boxes(x: RatLike, y: RatLike, s: Strip) -> bool:
    """Independent ε-δ check: search for a separating box, else in closure.

    A box [x,x+ε)×[y,y+δ) misses the strip iff its difference interval
    clears [a,b) on one side, which happens for some positive ε, δ iff
    y-x < a or y-x > b; each found witness box is re-checked with the
    box primitive.
    """
    if s.closed_right:
        raise ValueError("box oracle is for the half-open strip")
    x, y = rat(x), rat(y)
    d = y - x
    if d < s.a:
        delta = (s.a - d) / 2
        assert not box_meets_strip(x, y, Fraction(1), delta, s)
        return False
    if d > s.b:
        eps = (d - s.b) / 2
        assert not box_meets_strip(x, y, eps, Fraction(1), s)
        return False
    return True


# -- the three witnesses ------------------------------------------------------


@dataclass(frozen=True)
class InversionWitness:
    """Negation is discontinuous at 0 into u = [0, r)."""

    u: SInterval
    point: Fraction = Fraction(0)

    def counterexample(self, eps: RatLike) -> Fraction:
        """A point of [0, ε) whose negation misses u."""
        e = rat(eps)
        if e <= 0:
            raise ValueError("candidate neighborhood must have positive length")
        c = e / 2
        assert SInterval(Fraction(0), e).contains(c)
        assert not self.u.contains(-c)
        return c


@dataclass(frozen=True)
class NotAWitnessCase:
    """u reaches left of 0, so some [0, ε) negates into u."""

    u: SInterval
    shrink: Fraction

    def __post_init__(self) -> None:
        # negation of [0, shrink) is (-shrink, 0] ⊆ u
        assert self.shrink > 0
        assert self.u.a <= -self.shrink and self.u.contains(0)


def inversion_discontinuity_witness(
    u: SInterval,
) -> Union[InversionWitness, NotAWitnessCase]:
    if not u.contains(0):
        raise ValueError("u must contain 0")
    if u.a < 0:
        return NotAWitnessCase(u, shrink=-u.a)
    return InversionWitness(u)


def delta_baire_failure_witness(w: SInterval) -> tuple[Fraction, Fraction]:
    """A pair of W × W outside the closure of I([0,1)).

    x sits a quarter-length above the midpoint of W and y a quarter
    below, so y - x = -(len W)/2 < 0 escapes [0, 1]; no basic W can
    satisfy W×W ⊆ closure(I([0,1))).
    """
    mid = (w.a + w.b) / 2
    quarter = (w.b - w.a) / 4
    x = mid + quarter
    y = mid - quarter
    assert w.contains(x) and w.contains(y)
    assert y - x == -(w.b - w.a) / 2
    assert not strip_closure(P_UNIT).contains(x, y)
    return x, y


# -- game backend -------------------------------------------------------------


class _WholeLine:
    def __repr__(self) -> str:
        return "WHOLE_LINE"


WHOLE_LINE = _WholeLine()


class SorgenfreyBackend(games.Backend):
    """Move language: basic sets [a, b) with rational endpoints."""

    finite = False

    def whole(self):
        return WHOLE_LINE

    def illegal_reason(self, s) -> Optional[str]:
        if s is WHOLE_LINE:
            return "the whole line is not a playable basic set"
        if not isinstance(s, SInterval):
            return "not a basic half-open interval"
        return None

    def is_subset(self, a, b) -> bool:
        if b is WHOLE_LINE:
            return True
        if a is WHOLE_LINE:
            return False
        return a.is_subset_of(b)

    def closure(self, s):
        if s is WHOLE_LINE:
            return WHOLE_LINE
        return interval_closure(s)[0]

    def encode(self, s) -> str:
        if s is WHOLE_LINE:
            return "Q"
        return f"{rat_str(s.a)}:{rat_str(s.b)}"

    def set_to_json(self, s):
        if s is WHOLE_LINE:
            return "whole"
        return s.to_json()

    def random_move_set(self, constraint, rng: random.Random) -> SInterval:
        if constraint is WHOLE_LINE:
            base = rng.randrange(-3, 3)
            return interval(base, base + 1)
        q = rng.randrange(2, 6)
        i = rng.randrange(q)
        j = rng.randrange(i + 1, q + 1)
        width = (constraint.b - constraint.a) / q
        return SInterval(constraint.a + i * width, constraint.a + j * width)


class Theorem2SorgenfreyBeta(games.Strategy):
    """β for G(OD, b): split the constraint at its midpoint.

    Given U = [a, b) it plays W = [a, m), V = [m, b) with m = (a+b)/2:
    all differences w - v are negative, so V×W misses I([0,1)), and V
    is clopen inside U.  Both per-round facts are asserted and noted.
    """

    name = "theorem2-sorgenfrey"
    player = games.BETA
    rule = "b"

    def __init__(self, start: Optional[SInterval] = None):
        self.p = P_UNIT
        self.start = start or interval(0, 1)

    def move(self, play: games.Play, pending=None) -> games.BetaMove:
        c = play.constraint_before(len(play.rounds))
        if c is WHOLE_LINE:
            c = self.start
        if not isinstance(c, SInterval):
            raise games.IllegalMove(games.BETA, len(play.rounds), "non-basic constraint")
        m = (c.a + c.b) / 2
        w = SInterval(c.a, m)
        v = SInterval(m, c.b)
        assert self.p.box_disjoint(v, w)
        assert v.is_subset_of(c)  # closure(V) = V since basics are clopen
        notes = (
            f"V×W ∩ I([0,1)) = ∅ at split {rat_str(m)}",
            f"closure(V) = {v} ⊆ {c}",
        )
        return games.BetaMove(v, w, notes=notes)

    def make_certificate(self, play: games.Play):
        return games.SeparationCertificate(self.p)


def theorem2_beta_strategy_sorgenfrey(start: Optional[SInterval] = None) -> Theorem2SorgenfreyBeta:
    return Theorem2SorgenfreyBeta(start)
