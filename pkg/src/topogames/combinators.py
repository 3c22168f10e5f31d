"""Strategy transformations with their per-round proof invariants as asserts.

Each combinator wires existing strategies into a new one the way the
corresponding construction does, and checks the construction's
per-round facts on every move (not sampled): the separation pair of the
splitting β strategy, the four bookkeeping conditions of the product
strategy, the box-split containments of the pair strategy, and the
closed-shrink containments of the subspace lift.  Winning-ness over
infinite plays is deliberately *not* asserted — the executable surface
is legality plus those invariants plus the finite-backend exact
verdicts.

All outputs are pure: shadow histories are recomputed (memoized) from
the passed history, so the same partial play always produces the same
move and concurrent plays share nothing mutable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from . import games
from .diagonal_relations import Relation
from .finite_topology import FiniteSpace, bits, mask_of, points_of, product
from .games import (
    ALPHA,
    BETA,
    BM,
    OD,
    AlphaMove,
    BetaMove,
    FiniteBackend,
    Play,
    SeparationCertificate,
    Strategy,
)
from .sorgenfrey import P_UNIT, SorgenfreyBackend, theorem2_beta_strategy_sorgenfrey


class NoSeparation(RuntimeError):
    """The separation search failed: P was not a Δ-Baire counterexample."""

    def __init__(self, round_index: int):
        self.round_index = round_index
        super().__init__(f"no separated pair (V, W) at round {round_index}")


class DensityViolation(RuntimeError):
    def __init__(self, round_index: int):
        self.round_index = round_index
        super().__init__(f"no member of γ_{round_index} meets V_{round_index}")


class ShrinkFailure(RuntimeError):
    """No open set with closure inside the target exists (non-regular obstruction)."""


class InvariantViolation(AssertionError):
    """A per-round proof invariant failed; falsifies the construction."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantViolation(message)


# -- separation-splitting β strategy ---------------------------------------------


class FiniteTheorem2Beta(Strategy):
    """β for G(OD, b) from a diagonal counterexample P on a finite space.

    Each round searches the constraint for nonempty opens V, W with
    V×W ∩ P = ∅ and cl(V) inside the constraint (bit-set order).
    """

    name = "theorem2-finite"
    player = BETA
    rule = "b"

    def __init__(self, backend: FiniteBackend, p: Relation):
        if p.space != backend.space:
            raise ValueError("relation lives on a different space")
        self.backend = backend
        self.p = p

    def move(self, play: Play, pending=None) -> BetaMove:
        c = play.constraint_before(len(play.rounds))
        space = self.backend.space
        for v in self.backend.legal_sets(c):
            if space.closure(v) | c != c:
                continue
            for w in self.backend.legal_sets(c):
                if self.p.box_disjoint(v, w):
                    return BetaMove(
                        v,
                        w,
                        notes=(
                            f"V×W ∩ P = ∅ (V={points_of(v)}, W={points_of(w)})",
                            f"cl(V) ⊆ U[{len(play.rounds)-1}]",
                        ),
                    )
        raise NoSeparation(len(play.rounds))

    def make_certificate(self, play: Play):
        return SeparationCertificate(self.p)


def theorem2_beta_strategy(backend: games.Backend, p) -> Strategy:
    """Dispatch the splitting construction to the backend at hand."""
    if isinstance(backend, SorgenfreyBackend):
        if p != P_UNIT:
            raise ValueError("Sorgenfrey splitting is built for P = I([0,1))")
        return theorem2_beta_strategy_sorgenfrey()
    if isinstance(backend, FiniteBackend):
        return FiniteTheorem2Beta(backend, p)
    raise ValueError(f"unsupported backend {backend!r}")


# -- OD pair → BM β wiring -----------------------------------------------------


class Prop3BetaBM(Strategy):
    """β for BM from a β-OD strategy t1 and an α-OD strategy t2.

    The two shadow OD plays: t1 sees β-moves (V'_n, W_n) answered by the
    real α moves U_n; t2 sees the same β-moves answered by its own
    outputs V_n, which become the emitted BM moves.
    """

    name = "prop3-beta-bm"
    player = BETA

    def __init__(self, t1: Strategy, t2: Strategy):
        self.t1 = t1
        self.t2 = t2
        self.name = f"prop3({t1.name},{t2.name})"
        self._memo: dict = {}

    def _state(self, play: Play):
        """(shadow1 rounds, shadow2 rounds, emitted V list) for a BM history."""
        rounds = play.rounds
        if rounds in self._memo:
            return self._memo[rounds]
        if not rounds:
            state = ((), (), ())
        else:
            s1, s2, vs = self._state(replace(play, rounds=rounds[:-1]))
            prev = rounds[-1]
            bm, v = self._derive(play, s1, s2)
            _require(prev.v == v, "recorded BM move differs from shadow wiring")
            s1 = s1 + (games.Round(bm.v, bm.w, prev.u),)
            s2 = s2 + (games.Round(bm.v, bm.w, v),)
            state = (s1, s2, vs + (v,))
        self._memo[rounds] = state
        return state

    def _derive(self, play: Play, s1, s2):
        shadow1 = Play(backend=play.backend, kind=OD, rounds=s1)
        bm = self.t1.move(shadow1)
        shadow2 = Play(backend=play.backend, kind=OD, rounds=s2)
        v = self.t2.move(shadow2, pending=bm).u
        return bm, v

    def shadows(self, play: Play):
        s1, s2, _ = self._state(play)
        be = play.backend
        return (
            Play(backend=be, kind=OD, rounds=s1),
            Play(backend=be, kind=OD, rounds=s2),
        )

    def move(self, play: Play, pending=None) -> BetaMove:
        s1, s2, _ = self._state(play)
        bm, v = self._derive(play, s1, s2)
        return BetaMove(
            v,
            notes=(f"shadow β-OD move V'={play.backend.encode(bm.v)}, W={play.backend.encode(bm.w)}",),
        )


def prop3_beta_bm(t1: Strategy, t2: Strategy) -> Strategy:
    if t1.player != BETA or t2.player != ALPHA:
        raise ValueError("need a β-OD strategy and an α-OD strategy")
    return Prop3BetaBM(t1, t2)


# -- forgetful transfers -------------------------------------------------------


class _IgnoreW(Strategy):
    """α-OD wrapper that feeds its inner α-BM strategy the W-free trace."""

    player = ALPHA

    def __init__(self, inner: Strategy):
        self.inner = inner
        self.name = f"ignore-w({inner.name})"
        self.rule = inner.rule

    def move(self, play: Play, pending: Optional[BetaMove] = None) -> AlphaMove:
        stripped = Play(
            backend=play.backend,
            kind=BM,
            rounds=tuple(replace(r, w=None) for r in play.rounds),
        )
        return self.inner.move(stripped, pending=BetaMove(pending.v))


class _WeakenRule(Strategy):
    """Same moves, weaker win claim (k* → b*)."""

    def __init__(self, inner: Strategy):
        self.inner = inner
        self.player = inner.player
        self.name = f"weaken({inner.name})"
        self.rule = "b*"

    def move(self, play: Play, pending=None):
        return self.inner.move(play, pending=pending)


def prop4_forget(strategy: Strategy, direction: str) -> Strategy:
    """direction: "k*->b*" keeps the moves, "bm->od" ignores the W_n."""
    if direction == "k*->b*":
        if strategy.rule not in (None, "k*"):
            raise ValueError(f"strategy claims rule {strategy.rule!r}, not k*")
        return _WeakenRule(strategy)
    if direction == "bm->od":
        if strategy.player != ALPHA:
            raise ValueError("only α strategies transfer from BM to OD")
        if getattr(strategy, "kind", BM) == OD:
            raise ValueError("strategy already plays OD")
        return _IgnoreW(strategy)
    raise ValueError(f"unknown direction {direction!r}")


# -- dense-union α strategy ----------------------------------------------------


@dataclass(frozen=True)
class GammaSequence:
    """Levels γ_n of open sets; index past the end repeats the last level."""

    space: FiniteSpace
    levels: tuple[tuple[int, ...], ...]
    claim: str = ""

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("need at least one level")
        for level in self.levels:
            for u in level:
                if not self.space.is_open(u):
                    raise ValueError("γ members must be open")

    def at(self, n: int) -> tuple[int, ...]:
        return self.levels[min(n, len(self.levels) - 1)]

    def union_dense_at(self, n: int) -> bool:
        u = 0
        for g in self.at(n):
            u |= g
        return self.space.is_dense(u)


class LemmaAlpha(Strategy):
    """α for BM: reply inside V_n ∩ W_n for the first W_n ∈ γ_n meeting V_n."""

    name = "lemma-alpha"
    player = ALPHA
    kind = BM

    def __init__(self, backend: FiniteBackend, gammas: GammaSequence):
        if gammas.space != backend.space:
            raise ValueError("γ sequence lives on a different space")
        self.backend = backend
        self.gammas = gammas
        self.rule = {"converges-to-compact": "k*"}.get(gammas.claim, "b*")

    def move(self, play: Play, pending: Optional[BetaMove] = None) -> AlphaMove:
        n = len(play.rounds)
        for g in self.gammas.at(n):
            u = g & pending.v
            if u:
                return AlphaMove(u, notes=(f"W_{n} = {points_of(g)}",))
        raise DensityViolation(n)


def lemma_alpha_strategy(backend: FiniteBackend, gammas: GammaSequence) -> Strategy:
    return LemmaAlpha(backend, gammas)


# -- γ sequences from Σ- and p-space data ---------------------------------------


@dataclass(frozen=True)
class SigmaData:
    """Increasing levels of closed families plus a covering collection.

    On a finite backend every family is locally finite and every subset
    is compact, so only closedness, monotonicity and the covering are
    material; the strong flag is carried but changes nothing at desk
    scale.
    """

    space: FiniteSpace
    families: tuple[tuple[int, ...], ...]
    cover: tuple[int, ...]
    strong: bool = False

    def __post_init__(self) -> None:
        if not self.families:
            raise ValueError("need at least one family level")
        for level in self.families:
            for f in level:
                if self.space.closure(f) != f:
                    raise ValueError("family members must be closed")
        for lo, hi in zip(self.families, self.families[1:]):
            if not set(lo) <= set(hi):
                raise ValueError("families must increase")
        covered = 0
        for k in self.cover:
            self.space.check_subset(k)
            covered |= k
        if covered != self.space.carrier:
            raise ValueError("cover must cover the carrier")


def gammas_from_sigma(space: FiniteSpace, data: SigmaData) -> GammaSequence:
    """γ_n = opens U with U ∩ F ≠ ∅ ⇒ U ⊆ F for every F in level n.

    Density of ⋃γ_n is guaranteed for closed levels on a finite space
    (every ⊆-minimal minimal-neighborhood qualifies); it is still
    asserted, as a malformed-data tripwire.
    """
    if data.space != space:
        raise ValueError("Σ data lives on a different space")
    levels = []
    for fam in data.families:
        level = tuple(
            u
            for u in space.nonempty_opens()
            if all(u & f == 0 or u | f == f for f in fam)
        )
        levels.append(level)
    claim = "converges-to-compact" if data.strong else "bounded"
    gammas = GammaSequence(space, tuple(levels), claim=claim)
    for n in range(len(levels)):
        if not gammas.union_dense_at(n):
            raise ValueError(f"⋃γ_{n} is not dense: malformed Σ data")
    return gammas


def gammas_from_pspace(space: FiniteSpace, covers: Sequence[Sequence[int]]) -> GammaSequence:
    """Open covers pass through unchanged, tagged with the convergence claim."""
    levels = []
    for n, cover in enumerate(covers):
        u = 0
        for g in cover:
            if not space.is_open(g):
                raise ValueError(f"cover {n} has a non-open member")
            u |= g
        if u != space.carrier:
            raise ValueError(f"cover {n} misses a point")
        levels.append(tuple(cover))
    return GammaSequence(space, tuple(levels), claim="converges-to-compact")


# -- product bookkeeping --------------------------------------------------------


class ProductStructure:
    """Mixed-radix index helpers for a product of finite spaces."""

    def __init__(self, factors: Sequence[FiniteSpace]):
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = list(factors)
        self.sizes = [f.n for f in factors]
        space = factors[0]
        for f in factors[1:]:
            space = product(space, f)
        self.space = space
        self.fulls = [(1 << f.n) - 1 for f in factors]

    def decode(self, point: int) -> tuple[int, ...]:
        coords = [0] * len(self.sizes)
        for j in range(len(self.sizes) - 1, -1, -1):
            coords[j] = point % self.sizes[j]
            point //= self.sizes[j]
        return tuple(coords)

    def box(self, comps: Sequence[int]) -> int:
        pts = [0]
        for size, comp in zip(self.sizes, comps):
            pts = [p * size + q for p in pts for q in bits(comp)]
        return mask_of(pts)

    def min_box(self, s: int) -> tuple[int, tuple[int, ...]]:
        """Box refinement at the least point of s: (box mask, components)."""
        point = next(bits(s))
        coords = self.decode(point)
        comps = tuple(f.min_nbhd[c] for f, c in zip(self.factors, coords))
        box = self.space.min_nbhd[point]
        _require(self.box(comps) == box, "product minimal neighborhood is not the box")
        return box, comps


class Prop7ProductAlpha(Strategy):
    """α for OD on a finite product, driven by per-factor α strategies.

    Bookkeeping per round: box-refine β's V, W at their least points;
    coordinates refined for the first time enter the active set A_n;
    every active coordinate's factor strategy answers its own shadow
    round; the reply is the box of the factor replies with untouched
    coordinates left whole.  Conditions: (1) chain containments,
    (2) the reply is exactly that box, (3) the refined boxes sit inside
    β's moves, (4) factor-play legality — all asserted every round.
    """

    name = "prop7-product-alpha"
    player = ALPHA
    kind = OD
    rule = "k*"

    def __init__(self, factor_strategies: Sequence[Strategy], factors: Sequence[FiniteSpace]):
        if len(factor_strategies) != len(factors):
            raise ValueError("one strategy per factor")
        for t in factor_strategies:
            if t.player != ALPHA:
                raise ValueError("factor strategies must play α")
        self.structure = ProductStructure(factors)
        self.backend = FiniteBackend(self.structure.space)
        self.factor_backends = [FiniteBackend(f) for f in factors]
        self.strategies = list(factor_strategies)
        self._memo: dict = {}

    # state: (entry_round per coord or None, factor rounds tuples, last U)
    def _initial_state(self):
        m = len(self.structure.factors)
        return (tuple([None] * m), tuple(() for _ in range(m)), self.structure.space.carrier)

    def _state(self, rounds: tuple):
        if rounds in self._memo:
            return self._memo[rounds]
        if not rounds:
            state = self._initial_state()
        else:
            prev_state = self._state(rounds[:-1])
            rec = rounds[-1]
            state, u, _notes = self._step(prev_state, rec.v, rec.w, len(rounds) - 1)
            _require(u == rec.u, "recorded α move differs from product bookkeeping")
        self._memo[rounds] = state
        return state

    def _step(self, state, v: int, w: int, n: int):
        entries, factor_rounds, last_u = state
        st = self.structure
        _require(v | last_u == last_u and w | last_u == last_u, "cond(1): V,W ⊆ U[n-1]")
        vbox, vcomps = st.min_box(v)
        wbox, wcomps = st.min_box(w)
        entries = list(entries)
        factor_rounds = [list(r) for r in factor_rounds]
        for a in range(len(st.factors)):
            proper = vcomps[a] != st.fulls[a] or wcomps[a] != st.fulls[a]
            if entries[a] is None and proper:
                entries[a] = n
        star_v = st.box(
            [vcomps[a] if entries[a] is not None else st.fulls[a] for a in range(len(st.factors))]
        )
        star_w = st.box(
            [wcomps[a] if entries[a] is not None else st.fulls[a] for a in range(len(st.factors))]
        )
        _require(star_v | v == v, "cond(3): V* ⊆ V")
        _require(star_w | w == w, "cond(3): W* ⊆ W")
        ucomps = []
        notes = [f"A_{n} joins {[a for a in range(len(st.factors)) if entries[a] == n]}"]
        for a in range(len(st.factors)):
            if entries[a] is None:
                ucomps.append(st.fulls[a])
                continue
            hist = factor_rounds[a]
            prev_u = hist[-1].u if hist else self.structure.factors[a].carrier
            _require(
                vcomps[a] | prev_u == prev_u and wcomps[a] | prev_u == prev_u,
                f"cond(4): factor {a} moves inside its previous U",
            )
            pending = BetaMove(vcomps[a], wcomps[a])
            shadow = Play(backend=self.factor_backends[a], kind=OD, rounds=tuple(hist))
            ua = self.strategies[a].move(shadow, pending=pending).u
            _require(ua | vcomps[a] == vcomps[a], f"cond(4): factor {a} α reply inside its V")
            hist.append(games.Round(vcomps[a], wcomps[a], ua))
            ucomps.append(ua)
            notes.append(f"factor {a} round {len(hist)-1}: U^a={points_of(ua)}")
        u = st.box(ucomps)
        _require(u | v == v, "cond(1)+(2): U ⊆ V")
        new_state = (tuple(entries), tuple(tuple(r) for r in factor_rounds), u)
        return new_state, u, tuple(notes)

    def factor_plays(self, play: Play) -> list[Play]:
        state = self._state(play.rounds)
        return [
            Play(backend=be, kind=OD, rounds=rs)
            for be, rs in zip(self.factor_backends, state[1])
        ]

    def move(self, play: Play, pending: Optional[BetaMove] = None) -> AlphaMove:
        state = self._state(play.rounds)
        _, u, notes = self._step(state, pending.v, pending.w, len(play.rounds))
        return AlphaMove(u, notes=notes)


def prop7_product_alpha(
    factor_strategies: Sequence[Strategy], factors: Sequence[FiniteSpace]
) -> Prop7ProductAlpha:
    return Prop7ProductAlpha(factor_strategies, factors)


class Prop8PairAlpha(Strategy):
    """α for OD on X×Y: split β's moves into boxes, answer coordinatewise."""

    name = "prop8-pair-alpha"
    player = ALPHA
    kind = OD
    rule = "b*"

    def __init__(self, p: Strategy, q: Strategy, x_space: FiniteSpace, y_space: FiniteSpace):
        if p.player != ALPHA or q.player != ALPHA:
            raise ValueError("both factor strategies must play α")
        self.structure = ProductStructure([x_space, y_space])
        self.backend = FiniteBackend(self.structure.space)
        self.x_backend = FiniteBackend(x_space)
        self.y_backend = FiniteBackend(y_space)
        self.p = p
        self.q = q
        self._memo: dict = {}

    def _state(self, rounds: tuple):
        if rounds in self._memo:
            return self._memo[rounds]
        if not rounds:
            state = ((), ())
        else:
            prev = self._state(rounds[:-1])
            rec = rounds[-1]
            state, u, _ = self._step(prev, rec.v, rec.w)
            _require(u == rec.u, "recorded α move differs from pair bookkeeping")
        self._memo[rounds] = state
        return state

    def _step(self, state, v: int, w: int):
        x_rounds, y_rounds = state
        st = self.structure
        if self.structure.space.carrier | v != self.structure.space.carrier:
            raise ValueError("move does not live on the product backend")
        _vbox, (vx, vy) = st.min_box(v)
        _wbox, (wx, wy) = st.min_box(w)
        _require(st.box([vx, vy]) | v == v, "split: Vˣ×Vʸ ⊆ V")
        _require(st.box([wx, wy]) | w == w, "split: Wˣ×Wʸ ⊆ W")
        ux = self.p.move(
            Play(backend=self.x_backend, kind=OD, rounds=x_rounds),
            pending=BetaMove(vx, wx),
        ).u
        uy = self.q.move(
            Play(backend=self.y_backend, kind=OD, rounds=y_rounds),
            pending=BetaMove(vy, wy),
        ).u
        _require(ux | vx == vx and uy | vy == vy, "factor replies inside their V's")
        u = st.box([ux, uy])
        x_rounds = x_rounds + (games.Round(vx, wx, ux),)
        y_rounds = y_rounds + (games.Round(vy, wy, uy),)
        notes = (
            f"split V -> {points_of(vx)}×{points_of(vy)}, W -> {points_of(wx)}×{points_of(wy)}",
            f"U = Uˣ×Uʸ = {points_of(ux)}×{points_of(uy)}",
        )
        return (x_rounds, y_rounds), u, notes

    def factor_plays(self, play: Play) -> tuple[Play, Play]:
        x_rounds, y_rounds = self._state(play.rounds)
        return (
            Play(backend=self.x_backend, kind=OD, rounds=x_rounds),
            Play(backend=self.y_backend, kind=OD, rounds=y_rounds),
        )

    def move(self, play: Play, pending: Optional[BetaMove] = None) -> AlphaMove:
        state = self._state(play.rounds)
        _, u, notes = self._step(state, pending.v, pending.w)
        return AlphaMove(u, notes=notes)


def prop8_pair_alpha(
    p: Strategy, q: Strategy, x_space: FiniteSpace, y_space: FiniteSpace
) -> Prop8PairAlpha:
    return Prop8PairAlpha(p, q, x_space, y_space)


# -- subspace lifting ------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddingKind:
    """How Y sits in X: dense Gδ (with its opens), C-dense, or open."""

    kind: str
    g_sequence: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("dense_gdelta", "c_dense", "open"):
            raise ValueError(f"unknown embedding kind {self.kind!r}")


class EmbeddingError(ValueError):
    pass


def validate_embedding(x_space: FiniteSpace, y: int, kind: EmbeddingKind) -> None:
    x_space.check_subset(y)
    if y == 0:
        raise EmbeddingError("empty subspace")
    if kind.kind == "open":
        if not x_space.is_open(y):
            raise EmbeddingError("Y is not open")
    elif kind.kind == "c_dense":
        # C-dense collapses to dense on finite carriers (doc note in README)
        if not x_space.is_dense(y):
            raise EmbeddingError("Y is not dense")
    else:
        if not kind.g_sequence:
            raise EmbeddingError("dense Gδ kind needs its witnessing opens")
        meet = x_space.carrier
        for g in kind.g_sequence:
            if not x_space.is_open(g) or not x_space.is_dense(g):
                raise EmbeddingError("each G_n must be open and dense")
            meet &= g
        if meet != y:
            raise EmbeddingError("Y must equal the intersection of the G_n")


def e_operator(x_space: FiniteSpace, y: int, u_in_y: int) -> int:
    """E(U) = X minus the closure of Y∖U, for U relatively open in Y."""
    return x_space.carrier & ~x_space.closure(y & ~u_in_y)


class SubspaceLift(Strategy):
    """Play a subspace strategy on the ambient space via the E operator.

    β role: shadow α moves are least-bitmask relatively open sets whose
    ambient closure shrinks into the real U (and into G_n for the dense
    Gδ kind); the emitted move is (E(V'), E(W')).  α role: β's moves
    are traced onto Y, the inner reply U' comes back as E(U') ∩ V.
    The open kind passes moves through under the index embedding.
    """

    def __init__(self, t: Strategy, x_space: FiniteSpace, y: int, kind: EmbeddingKind):
        validate_embedding(x_space, y, kind)
        if t.player == ALPHA and kind.kind == "open" and not x_space.is_dense(y):
            raise EmbeddingError("α-role lift over a non-dense open Y is unsupported")
        self.t = t
        self.player = t.player
        self.x_space = x_space
        self.y = y
        self.kind = kind
        self.sub_space, self.points = x_space.subspace(y)
        self.sub_backend = FiniteBackend(self.sub_space)
        self.name = f"subspace-lift({t.name})"
        self.rule = t.rule
        self._memo: dict = {}

    # index plumbing ------------------------------------------------------

    def embed(self, sub_mask: int) -> int:
        return mask_of(self.points[i] for i in bits(sub_mask))

    def restrict(self, x_mask: int) -> int:
        index = {p: i for i, p in enumerate(self.points)}
        return mask_of(index[p] for p in bits(x_mask & self.y))

    def _e(self, sub_mask: int) -> int:
        out = e_operator(self.x_space, self.y, self.embed(sub_mask))
        _require(out & self.y == self.embed(sub_mask), "E(U) ∩ Y = U")
        _require(self.x_space.is_open(out), "E(U) is open")
        return out

    def _lift_beta_set(self, sub_mask: int) -> int:
        return self.embed(sub_mask) if self.kind.kind == "open" else self._e(sub_mask)

    # β role ----------------------------------------------------------------

    def _shrink(self, real_u: int, k: int) -> int:
        """Least relatively open U'_k with ambient closure inside U_k.

        For the dense Gδ kind the target also shrinks into G, cycling
        through the witnessing opens so each recurs along the play.
        """
        target = real_u
        if self.kind.kind == "dense_gdelta":
            gs = self.kind.g_sequence
            target &= gs[k % len(gs)]
        for u in self.sub_space.nonempty_opens():
            if self.x_space.closure(self.embed(u)) | target == target:
                return u
        raise ShrinkFailure(f"no closed-shrunk U' inside {points_of(target)}")

    def _beta_state(self, play: Play) -> tuple:
        """Shadow rounds on Y reconstructed from the ambient history."""
        rounds = play.rounds
        if rounds in self._memo:
            return self._memo[rounds]
        if not rounds:
            state: tuple = ()
        else:
            shadow = self._beta_state(replace(play, rounds=rounds[:-1]))
            rec = rounds[-1]
            k = len(rounds) - 1
            bm = self._beta_derive(play, shadow)
            _require(
                rec.v == self._lift_beta_set(bm.v),
                "recorded β move differs from the lift",
            )
            if self.kind.kind == "open":
                u_prime = self.restrict(rec.u)
            else:
                u_prime = self._shrink(rec.u, k)
            _require(u_prime | bm.v == bm.v, "shadow α move U' inside V'")
            state = shadow + (games.Round(bm.v, bm.w, u_prime),)
        self._memo[rounds] = state
        return state

    def _beta_derive(self, play: Play, shadow_rounds: tuple) -> BetaMove:
        shadow = Play(backend=self.sub_backend, kind=play.kind, rounds=shadow_rounds)
        return self.t.move(shadow)

    # α role ------------------------------------------------------------------

    def _alpha_state(self, play: Play) -> tuple:
        rounds = play.rounds
        if rounds in self._memo:
            return self._memo[rounds]
        if not rounds:
            state: tuple = ()
        else:
            shadow = self._alpha_state(replace(play, rounds=rounds[:-1]))
            rec = rounds[-1]
            w_p = self.restrict(rec.w) if rec.w is not None else None
            state = shadow + (
                games.Round(self.restrict(rec.v), w_p, self.restrict(rec.u)),
            )
        self._memo[rounds] = state
        return state

    def move(self, play: Play, pending: Optional[BetaMove] = None):
        if self.player == BETA:
            shadow_rounds = self._beta_state(play)
            bm = self._beta_derive(play, shadow_rounds)
            v = self._lift_beta_set(bm.v)
            w = self._lift_beta_set(bm.w) if bm.w is not None else None
            if self.kind.kind == "open":
                notes = ("open Y: moves pass through",)
            else:
                notes = (
                    f"V = E(V'), V' = {points_of(self.embed(bm.v))}",
                    "E(V') ∩ Y = V'",
                )
            return BetaMove(v, w, notes=notes)
        # α role
        shadow_rounds = self._alpha_state(play)
        v_p = self.restrict(pending.v)
        w_p = self.restrict(pending.w) if pending.w is not None else None
        _require(v_p != 0, "β's V misses Y (Y not dense?)")
        if pending.w is not None:
            _require(w_p != 0, "β's W misses Y")
        shadow = Play(backend=self.sub_backend, kind=play.kind, rounds=shadow_rounds)
        reply = self.t.move(shadow, pending=BetaMove(v_p, w_p))
        if self.kind.kind == "open":
            u = self.embed(reply.u)
        else:
            u = self._e(reply.u) & pending.v
        _require(u != 0 and self.x_space.is_open(u), "lifted α reply is open nonempty")
        _require(u | pending.v == pending.v, "lifted α reply inside V")
        return AlphaMove(u, notes=(f"U' = {points_of(self.embed(reply.u))}, U = E(U') ∩ V",))


def subspace_lift(t: Strategy, x_space: FiniteSpace, y: int, kind: EmbeddingKind) -> Strategy:
    return SubspaceLift(t, x_space, y, kind)


# -- bounded / convergent family checks -------------------------------------------


@dataclass(frozen=True)
class EventuallyPeriodicFamily:
    """An infinite sequence of subsets: finite prefix, then the cycle repeats."""

    space: FiniteSpace
    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        for s in self.prefix + self.cycle:
            self.space.check_subset(s)


def bounded_family_check(family: EventuallyPeriodicFamily) -> bool:
    """Bounded: every locally finite γ is finitely met by some member.

    On a finite carrier a locally finite sequence has all but finitely
    many members empty (a recurring nonempty value accumulates at its
    own points), so any member of a nonempty family qualifies and the
    quantifier collapses to nonemptiness.
    """
    return bool(family.prefix or family.cycle)


def converges_to_check(family: EventuallyPeriodicFamily, k: int) -> bool:
    """Converges to k: for every open U ⊇ k only finitely many members escape.

    Recurring members must sit inside every open around k, i.e. inside
    the union of minimal neighborhoods over k; the finite prefix never
    matters.
    """
    space = family.space
    space.check_subset(k)
    hull = 0
    for x in bits(k):
        hull |= space.min_nbhd[x]
    return all(c | hull == hull for c in family.cycle)
