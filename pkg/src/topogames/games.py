"""Referee and win-rule evaluation for the BM and OD topological games.

The referee is backend-agnostic: a backend supplies the whole space, the
legality predicates, and closure.  The finite backend wraps a
FiniteSpace (set handles are bitmasks); the Sorgenfrey backend lives in
the sorgenfrey module (handles are half-open rational intervals).

Plays are finite records of infinite games.  On finite backends the
verdicts for rules i, b, k are exact: a decreasing chain of nonempty
opens over a finite carrier stabilizes, and infinitely many nonempty
W_n force a recurring value whose points are accumulation points, so
the α side wins every legal play and the engine emits a re-checkable
certificate exhibiting the pattern on the recorded prefix.  On symbolic
backends a play is Undetermined unless the β strategy attached a
separation certificate (the executable residue of the half-a-proof its
construction carries).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Any, Optional

from .finite_topology import FiniteSpace, bits, points_of

BM = "BM"
OD = "OD"
KINDS = (BM, OD)

RULES = ("i", "b", "k", "i*", "b*", "k*")
BM_RULES = ("i", "i*")
W_RULES = ("b", "k", "b*", "k*")

ALPHA = "alpha"
BETA = "beta"


class IllegalMove(Exception):
    def __init__(self, player: str, round_index: int, reason: str):
        self.player = player
        self.round_index = round_index
        self.reason = reason
        super().__init__(f"illegal {player} move at round {round_index}: {reason}")


class NondeterministicStrategy(Exception):
    pass


class RuleKindError(ValueError):
    pass


class MalformedCertificate(ValueError):
    pass


# -- backends ---------------------------------------------------------------


class Backend:
    """Minimal contract: whole set, legality, subset order, closure."""

    finite = False

    def whole(self) -> Any:
        raise NotImplementedError

    def illegal_reason(self, s: Any) -> Optional[str]:
        """None if s is a playable (nonempty open) set handle."""
        raise NotImplementedError

    def is_subset(self, a: Any, b: Any) -> bool:
        raise NotImplementedError

    def closure(self, s: Any) -> Any:
        raise NotImplementedError

    def encode(self, s: Any) -> str:
        raise NotImplementedError

    def set_to_json(self, s: Any) -> Any:
        raise NotImplementedError

    def random_move_set(self, constraint: Any, rng: random.Random) -> Any:
        raise NotImplementedError


class FiniteBackend(Backend):
    finite = True

    def __init__(self, space: FiniteSpace):
        self.space = space
        self._legal: dict[int, tuple[int, ...]] = {}

    def whole(self) -> int:
        return self.space.carrier

    def illegal_reason(self, s: Any) -> Optional[str]:
        if not isinstance(s, int):
            return "not a point-set handle"
        if s < 0 or s & ~self.space.carrier:
            return "outside the carrier"
        if s == 0:
            return "empty set"
        if not self.space.is_open(s):
            return "not open"
        return None

    def is_subset(self, a: int, b: int) -> bool:
        return a | b == b

    def closure(self, s: int) -> int:
        return self.space.closure(s)

    def encode(self, s: int) -> str:
        return f"{s:x}"

    def set_to_json(self, s: int) -> list[int]:
        return points_of(s)

    def legal_sets(self, constraint: int) -> tuple[int, ...]:
        """All nonempty opens inside the constraint (cached per constraint)."""
        got = self._legal.get(constraint)
        if got is None:
            got = tuple(
                u for u in self.space.nonempty_opens() if u | constraint == constraint
            )
            self._legal[constraint] = got
        return got

    def random_move_set(self, constraint: int, rng: random.Random) -> int:
        choices = self.legal_sets(constraint)
        if not choices:
            raise IllegalMove("?", -1, "no legal move (constraint has no open subset)")
        return choices[rng.randrange(len(choices))]


# -- moves, rounds, plays -----------------------------------------------------


@dataclass(frozen=True)
class BetaMove:
    v: Any
    w: Any = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class AlphaMove:
    u: Any
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Round:
    v: Any
    w: Any
    u: Any
    beta_notes: tuple[str, ...] = ()
    alpha_notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Play:
    backend: Backend
    kind: str
    rounds: tuple[Round, ...] = ()
    beta_name: str = ""
    alpha_name: str = ""
    beta_certificate: Any = None

    def constraint_before(self, k: int) -> Any:
        return self.rounds[k - 1].u if k > 0 else self.backend.whole()

    def validate(self) -> None:
        """Replay every containment/openness/nonemptiness check."""
        be = self.backend
        for k, rnd in enumerate(self.rounds):
            c = self.constraint_before(k)
            for tag, s in (("V", rnd.v), ("W", rnd.w)):
                if tag == "W" and self.kind == BM:
                    if s is not None:
                        raise IllegalMove(BETA, k, "BM round carries a W set")
                    continue
                reason = be.illegal_reason(s)
                if reason:
                    raise IllegalMove(BETA, k, f"{tag}: {reason}")
                if not be.is_subset(s, c):
                    raise IllegalMove(BETA, k, f"{tag} not inside U[{k-1}]")
            reason = be.illegal_reason(rnd.u)
            if reason:
                raise IllegalMove(ALPHA, k, f"U: {reason}")
            if not be.is_subset(rnd.u, rnd.v):
                raise IllegalMove(ALPHA, k, "U not inside V")

    def to_json(self) -> dict:
        be = self.backend
        return {
            "format": 1,
            "kind": self.kind,
            "beta": self.beta_name,
            "alpha": self.alpha_name,
            "rounds": [
                {
                    "v": be.set_to_json(r.v),
                    "w": be.set_to_json(r.w) if r.w is not None else None,
                    "u": be.set_to_json(r.u),
                    "beta_notes": list(r.beta_notes),
                    "alpha_notes": list(r.alpha_notes),
                }
                for r in self.rounds
            ],
        }


class Strategy:
    """Deterministic map from partial plays to the next move.

    β strategies are called with pending=None and return a BetaMove;
    α strategies receive β's pending move and return an AlphaMove.
    """

    name = "strategy"
    player = BETA
    rule: Optional[str] = None  # claimed win rule, metadata only

    def move(self, play: Play, pending: Optional[BetaMove] = None):
        raise NotImplementedError

    def make_certificate(self, play: Play):
        return None


# -- referee ------------------------------------------------------------------


class LivePlay:
    """Incremental referee state: validates each submitted move."""

    def __init__(self, backend: Backend, kind: str, beta_name: str = "", alpha_name: str = ""):
        if kind not in KINDS:
            raise ValueError(f"unknown game kind {kind!r}")
        self.backend = backend
        self.kind = kind
        self.beta_name = beta_name
        self.alpha_name = alpha_name
        self.rounds: list[Round] = []
        self.pending: Optional[BetaMove] = None

    @property
    def round_index(self) -> int:
        return len(self.rounds)

    def constraint(self) -> Any:
        return self.rounds[-1].u if self.rounds else self.backend.whole()

    def snapshot(self) -> Play:
        return Play(
            backend=self.backend,
            kind=self.kind,
            rounds=tuple(self.rounds),
            beta_name=self.beta_name,
            alpha_name=self.alpha_name,
        )

    def submit_beta(self, move: BetaMove) -> None:
        if self.pending is not None:
            raise IllegalMove(BETA, self.round_index, "not beta's turn")
        k = self.round_index
        c = self.constraint()
        be = self.backend
        reason = be.illegal_reason(move.v)
        if reason:
            raise IllegalMove(BETA, k, f"V: {reason}")
        if not be.is_subset(move.v, c):
            raise IllegalMove(BETA, k, f"V not inside U[{k-1}]")
        if self.kind == OD:
            reason = be.illegal_reason(move.w)
            if reason:
                raise IllegalMove(BETA, k, f"W: {reason}")
            if not be.is_subset(move.w, c):
                raise IllegalMove(BETA, k, f"W not inside U[{k-1}]")
        elif move.w is not None:
            raise IllegalMove(BETA, k, "BM move carries a W set")
        self.pending = move

    def submit_alpha(self, move: AlphaMove) -> None:
        if self.pending is None:
            raise IllegalMove(ALPHA, self.round_index, "not alpha's turn")
        k = self.round_index
        be = self.backend
        reason = be.illegal_reason(move.u)
        if reason:
            raise IllegalMove(ALPHA, k, f"U: {reason}")
        if not be.is_subset(move.u, self.pending.v):
            raise IllegalMove(ALPHA, k, "U not inside V")
        self.rounds.append(
            Round(
                v=self.pending.v,
                w=self.pending.w,
                u=move.u,
                beta_notes=self.pending.notes,
                alpha_notes=move.notes,
            )
        )
        self.pending = None


def referee_run(
    backend: Backend,
    kind: str,
    beta: Strategy,
    alpha: Strategy,
    horizon: int,
    verify_determinism: bool = False,
) -> Play:
    """Alternate moves for `horizon` rounds, validating every move."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    live = LivePlay(backend, kind, beta_name=beta.name, alpha_name=alpha.name)
    for _ in range(horizon):
        before = live.snapshot()
        bm = beta.move(before)
        if verify_determinism and beta.move(live.snapshot()) != bm:
            raise NondeterministicStrategy(f"beta strategy {beta.name} is impure")
        live.submit_beta(bm)
        mid = live.snapshot()
        am = alpha.move(mid, pending=bm)
        if verify_determinism and alpha.move(live.snapshot(), pending=bm) != am:
            raise NondeterministicStrategy(f"alpha strategy {alpha.name} is impure")
        live.submit_alpha(am)
    play = live.snapshot()
    cert = beta.make_certificate(play)
    if cert is not None:
        play = replace(play, beta_certificate=cert)
    return play


# -- certificates -------------------------------------------------------------


@dataclass(frozen=True)
class PointCertificate:
    """Rule i: a point of the stabilized intersection of the U_n."""

    point: int

    def verify(self, play: Play) -> bool:
        if not play.backend.finite:
            return False
        bit = 1 << self.point
        return bool(play.rounds) and all(r.u & bit for r in play.rounds)


@dataclass(frozen=True)
class AccumulationCertificate:
    """Rule b: a point whose minimal neighborhood meets the recorded W_n."""

    point: int
    hit_rounds: tuple[int, ...]

    def verify(self, play: Play) -> bool:
        if not play.backend.finite or play.kind != OD:
            return False
        if not self.hit_rounds:
            return False
        space = play.backend.space
        if not 0 <= self.point < space.n:
            return False
        nb = space.min_nbhd[self.point]
        for k in self.hit_rounds:
            if not 0 <= k < len(play.rounds):
                return False
            if play.rounds[k].w & nb == 0:
                return False
        return True


@dataclass(frozen=True)
class CompactCertificate:
    """Rule k: a (finite, hence compact) K met by every recorded W_n."""

    k: int

    def verify(self, play: Play) -> bool:
        if not play.backend.finite or play.kind != OD:
            return False
        if self.k == 0:
            return False
        return all(r.w & self.k for r in play.rounds)


@dataclass(frozen=True)
class SeparationCertificate:
    """Splitting-β data: V_n×W_n misses P and cl(V_n) ⊆ U_{n-1}.

    The two-case locality argument the proof runs on top of this data
    (x outside some V_k is shielded by the complement of cl(V_{k+1});
    x in every V_n is shielded by the row P_x) only needs these
    per-round facts plus replay legality, which verify re-checks.
    """

    p: Any  # carries box_disjoint(v, w)

    def verify(self, play: Play) -> bool:
        if play.kind != OD or not play.rounds:
            return False
        try:
            play.validate()
        except IllegalMove:
            return False
        be = play.backend
        for k, rnd in enumerate(play.rounds):
            if not self.p.box_disjoint(rnd.v, rnd.w):
                return False
            if not be.is_subset(be.closure(rnd.v), play.constraint_before(k)):
                return False
        return True


Certificate = (
    PointCertificate,
    AccumulationCertificate,
    CompactCertificate,
    SeparationCertificate,
)


# -- verdicts -----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    winner: Optional[str]
    rule: str
    certificate: Any = None
    reason: Optional[str] = None

    @staticmethod
    def alpha_wins(rule: str, certificate) -> "Verdict":
        return Verdict(ALPHA, rule, certificate)

    @staticmethod
    def beta_wins(rule: str, certificate) -> "Verdict":
        return Verdict(BETA, rule, certificate)

    @staticmethod
    def undetermined(rule: str, reason: str) -> "Verdict":
        return Verdict(None, rule, None, reason)

    def to_json(self, backend: Optional[Backend] = None) -> dict:
        cert: Any = None
        if isinstance(self.certificate, PointCertificate):
            cert = {"type": "point", "point": self.certificate.point}
        elif isinstance(self.certificate, AccumulationCertificate):
            cert = {
                "type": "accumulation",
                "point": self.certificate.point,
                "hit_rounds": list(self.certificate.hit_rounds),
            }
        elif isinstance(self.certificate, CompactCertificate):
            cert = {"type": "compact", "k": points_of(self.certificate.k)}
        elif isinstance(self.certificate, SeparationCertificate):
            cert = {"type": "separation", "p": str(self.certificate.p)}
        return {
            "winner": self.winner,
            "rule": self.rule,
            "certificate": cert,
            "reason": self.reason,
        }


def check_rule(kind: str, rule: str) -> None:
    if rule not in RULES:
        raise RuleKindError(f"unknown win rule {rule!r}")
    if kind == BM and rule in W_RULES:
        raise RuleKindError(f"rule {rule!r} needs OD's W_n; the play is BM")


def evaluate(play: Play, rule: str) -> Verdict:
    """Exact verdicts on finite backends; certificate-driven otherwise."""
    check_rule(play.kind, rule)
    if not play.rounds:
        return Verdict.undetermined(rule, "no rounds recorded")
    if play.backend.finite:
        return _evaluate_finite(play, rule)
    return _evaluate_symbolic(play, rule)


def _evaluate_finite(play: Play, rule: str) -> Verdict:
    space = play.backend.space
    base = rule.rstrip("*")
    if base == "i":
        # decreasing nonempty opens over a finite carrier stabilize
        last = play.rounds[-1].u
        point = next(bits(last))
        return Verdict.alpha_wins(rule, PointCertificate(point))
    if base == "b":
        best, best_hits = None, ()
        for x in range(space.n):
            nb = space.min_nbhd[x]
            hits = tuple(k for k, r in enumerate(play.rounds) if r.w & nb)
            if len(hits) > len(best_hits):
                best, best_hits = x, hits
        if best is None:
            return Verdict.undetermined(rule, "no W pattern")  # unreachable on legal plays
        return Verdict.alpha_wins(rule, AccumulationCertificate(best, best_hits))
    # base == "k": finite unions of the recorded W values are compact
    k = 0
    for r in play.rounds:
        k |= r.w
    return Verdict.alpha_wins(rule, CompactCertificate(k))


def _evaluate_symbolic(play: Play, rule: str) -> Verdict:
    cert = play.beta_certificate
    if rule == "b" and isinstance(cert, SeparationCertificate):
        if cert.verify(play):
            return Verdict.beta_wins(rule, cert)
        return Verdict.undetermined(rule, "attached separation certificate failed")
    return Verdict.undetermined(
        rule, "symbolic backend: no certificate settles this rule"
    )


def check_certificate(play: Play, rule: str, certificate: Any) -> bool:
    """Re-derive a verdict from the certificate alone."""
    check_rule(play.kind, rule)
    if not isinstance(certificate, Certificate):
        raise MalformedCertificate(f"not a certificate: {certificate!r}")
    base = rule.rstrip("*")
    if isinstance(certificate, PointCertificate):
        return base == "i" and certificate.verify(play)
    if isinstance(certificate, AccumulationCertificate):
        return base == "b" and certificate.verify(play)
    if isinstance(certificate, CompactCertificate):
        return base == "k" and certificate.verify(play)
    # separation: β's claim against rule b exactly
    return rule == "b" and certificate.verify(play)


# -- stock strategies ---------------------------------------------------------


def _history_key(backend: Backend, play: Play, pending: Optional[BetaMove]) -> str:
    parts = []
    for r in play.rounds:
        w = backend.encode(r.w) if r.w is not None else "-"
        parts.append(f"{backend.encode(r.v)},{w},{backend.encode(r.u)}")
    if pending is not None:
        w = backend.encode(pending.w) if pending.w is not None else "-"
        parts.append(f"?{backend.encode(pending.v)},{w}")
    return ";".join(parts)


class RandomStrategy(Strategy):
    """Uniform choice from the backend's legal-move set, seeded and pure.

    Per-move randomness is derived from the seed plus the full encoded
    history, so replays of the same partial play give the same move.
    """

    def __init__(self, backend: Backend, seed: int, player: str, kind: str):
        self.backend = backend
        self.seed = seed
        self.player = player
        self.kind = kind
        self.name = f"random-{player}-{seed}"

    def _rng(self, play: Play, pending) -> random.Random:
        return random.Random(
            f"{self.seed}|{self.player}|{_history_key(self.backend, play, pending)}"
        )

    def move(self, play: Play, pending: Optional[BetaMove] = None):
        rng = self._rng(play, pending)
        if self.player == BETA:
            c = play.constraint_before(len(play.rounds))
            v = self.backend.random_move_set(c, rng)
            if self.kind == OD:
                return BetaMove(v, self.backend.random_move_set(c, rng))
            return BetaMove(v)
        return AlphaMove(self.backend.random_move_set(pending.v, rng))


def random_strategy(backend: Backend, seed: int, player: str, kind: str) -> Strategy:
    return RandomStrategy(backend, seed, player, kind)


class CopyAlpha(Strategy):
    """α replies U = V."""

    name = "copy-alpha"
    player = ALPHA

    def move(self, play: Play, pending: Optional[BetaMove] = None):
        return AlphaMove(pending.v)


class CopyBeta(Strategy):
    """β replays the constraint: V = W = U_{n-1}."""

    name = "copy-beta"
    player = BETA

    def __init__(self, kind: str):
        self.kind = kind

    def move(self, play: Play, pending: Optional[BetaMove] = None):
        c = play.constraint_before(len(play.rounds))
        return BetaMove(c, c if self.kind == OD else None)


class ScriptedStrategy(Strategy):
    """Replays a fixed move list, then falls back to copying the constraint."""

    def __init__(self, moves, player: str, kind: str, name: str = "scripted"):
        self.moves = list(moves)
        self.player = player
        self.kind = kind
        self.name = name

    def move(self, play: Play, pending: Optional[BetaMove] = None):
        k = len(play.rounds)
        if k < len(self.moves):
            m = self.moves[k]
            if self.player == BETA:
                return m if isinstance(m, BetaMove) else BetaMove(*m)
            return m if isinstance(m, AlphaMove) else AlphaMove(m)
        if self.player == BETA:
            c = play.constraint_before(k)
            return BetaMove(c, c if self.kind == OD else None)
        return AlphaMove(pending.v)


def scripted_strategy(moves, player: str, kind: str) -> Strategy:
    return ScriptedStrategy(moves, player, kind)
