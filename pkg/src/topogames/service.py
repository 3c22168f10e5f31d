"""Local HTTP session API for live play and checks (consumed by the UI).

Sessions hold one referee-validated play each; the server is the single
authority on legality, palettes, and verdicts.  Finite-backend moves
reference open sets by their id in the per-space catalog enumeration;
Sorgenfrey moves carry rational endpoints.  Errors mirror IllegalMove
as {code, reason} payloads.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Any, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import games
from .diagonal_relations import (
    delta_baire_witness,
    is_baire,
    is_delta_baire,
    minimal_semi_nbhd,
)
from .finite_topology import CATALOG, FiniteSpace, points_of
from .games import ALPHA, BETA, OD, AlphaMove, BetaMove, FiniteBackend, LivePlay
from .sorgenfrey import SInterval, SorgenfreyBackend, theorem2_beta_strategy_sorgenfrey


class SessionError(Exception):
    def __init__(self, code: str, reason: str, status: int = 400):
        self.code = code
        self.reason = reason
        self.status = status
        super().__init__(reason)


@dataclass
class Session:
    session_id: str
    backend_name: str
    backend: Any
    kind: str
    rule: str
    human_role: str
    engine: games.Strategy
    horizon: int
    live: LivePlay
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_engine_notes: tuple[str, ...] = ()
    verdict: Optional[games.Verdict] = None

    @property
    def engine_role(self) -> str:
        return ALPHA if self.human_role == BETA else BETA

    def finished(self) -> bool:
        return len(self.live.rounds) >= self.horizon


def _engine_strategy(name: str, backend, role: str, kind: str, seed: int) -> games.Strategy:
    if name == "copy":
        return games.CopyAlpha() if role == ALPHA else games.CopyBeta(kind)
    if name == "random":
        return games.random_strategy(backend, seed, role, kind)
    if name == "theorem2":
        if not isinstance(backend, SorgenfreyBackend):
            raise SessionError("input_error", "theorem2 engine plays the Sorgenfrey backend")
        if role != BETA:
            raise SessionError("input_error", "theorem2 is a β strategy")
        return theorem2_beta_strategy_sorgenfrey()
    raise SessionError("input_error", f"unknown engine strategy {name!r}")


def _load_space(spec) -> FiniteSpace:
    if isinstance(spec, str):
        if spec not in CATALOG:
            raise SessionError("input_error", f"unknown catalog space {spec!r}", 404)
        return CATALOG[spec]
    try:
        return FiniteSpace.from_json(spec)
    except (KeyError, TypeError, ValueError) as exc:
        raise SessionError("input_error", f"bad space: {exc}")


def _decode_move_set(session: Session, value) -> Any:
    be = session.backend
    if isinstance(be, FiniteBackend):
        opens = be.space.nonempty_opens()
        if not isinstance(value, int) or not 0 <= value < len(opens):
            raise SessionError("input_error", f"open-set id out of range: {value!r}")
        return opens[value]
    try:
        return SInterval.from_json(value)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SessionError("input_error", f"bad interval: {exc}")


def _palette(session: Session) -> Optional[list[int]]:
    """Ids of the open sets the human may legally pick right now."""
    be = session.backend
    if not isinstance(be, FiniteBackend) or session.finished():
        return None
    live = session.live
    constraint = live.pending.v if live.pending is not None else live.constraint()
    opens = be.space.nonempty_opens()
    legal = be.legal_sets(constraint)
    return [i for i, u in enumerate(opens) if u in set(legal)]


def _set_json(session: Session, s) -> Any:
    return session.backend.set_to_json(s)


def session_state(session: Session) -> dict:
    live = session.live
    pending = None
    if live.pending is not None:
        pending = {
            "v": _set_json(session, live.pending.v),
            "w": _set_json(session, live.pending.w) if live.pending.w is not None else None,
        }
    if session.finished():
        to_move = "done"
    elif live.pending is None:
        to_move = BETA
    else:
        to_move = ALPHA
    return {
        "format": 1,
        "session_id": session.session_id,
        "backend": session.backend_name,
        "kind": session.kind,
        "rule": session.rule,
        "human_role": session.human_role,
        "horizon": session.horizon,
        "round": len(live.rounds),
        "to_move": to_move,
        "pending": pending,
        "constraint": _set_json(session, live.constraint()),
        "palette": _palette(session),
        "rounds": live.snapshot().to_json()["rounds"],
        "annotations": list(session.last_engine_notes),
        "verdict": session.verdict.to_json() if session.verdict else None,
    }


def _engine_move(session: Session) -> None:
    """Let the engine move whenever it is its turn (possibly twice a round)."""
    live = session.live
    while not session.finished():
        to_move = BETA if live.pending is None else ALPHA
        if to_move != session.engine_role:
            return
        play = live.snapshot()
        if to_move == BETA:
            mv = session.engine.move(play)
            live.submit_beta(mv)
            session.last_engine_notes = mv.notes
        else:
            mv = session.engine.move(play, pending=live.pending)
            live.submit_alpha(mv)
            session.last_engine_notes = mv.notes
    _settle(session)


def _settle(session: Session) -> None:
    if session.verdict is not None or not session.finished():
        return
    play = session.live.snapshot()
    if session.engine_role == BETA:
        cert = session.engine.make_certificate(play)
        if cert is not None:
            play = games.Play(
                backend=play.backend,
                kind=play.kind,
                rounds=play.rounds,
                beta_certificate=cert,
            )
    try:
        session.verdict = games.evaluate(play, session.rule)
    except games.RuleKindError as exc:
        session.verdict = games.Verdict.undetermined(session.rule, str(exc))


def create_app(seed: int = 0) -> FastAPI:
    app = FastAPI(title="topogames session API")
    sessions: dict[str, Session] = {}
    app.state.sessions = sessions

    @app.exception_handler(SessionError)
    async def _session_error(_, exc: SessionError):
        return JSONResponse(status_code=exc.status, content={"code": exc.code, "reason": exc.reason})

    def _get(session_id: str) -> Session:
        s = sessions.get(session_id)
        if s is None:
            raise SessionError("not_found", f"no session {session_id}", 404)
        return s

    @app.get("/api/catalog/spaces")
    def catalog_spaces():
        out = []
        for name, space in CATALOG.items():
            out.append(
                {
                    "name": name,
                    "space": space.to_json(),
                    "opens": [
                        {"id": i, "points": points_of(u)}
                        for i, u in enumerate(space.nonempty_opens())
                    ],
                }
            )
        return {"format": 1, "spaces": out}

    @app.post("/api/check/delta-baire")
    def check_delta_baire(body: dict):
        space = _load_space(body.get("space"))
        witness = delta_baire_witness(space, minimal_semi_nbhd(space)) if space.n else None
        return {
            "format": 1,
            "regular": space.is_regular(),
            "baire": is_baire(space),
            "delta_baire": is_delta_baire(space),
            "witness": points_of(witness) if witness else None,
        }

    @app.post("/api/session")
    def create_session(body: dict):
        backend_name = body.get("backend", "finite")
        kind = body.get("kind", OD)
        rule = body.get("rule", "i")
        human_role = body.get("human_role", BETA)
        horizon = int(body.get("horizon", 3))
        session_seed = int(body.get("seed", seed))
        if kind not in games.KINDS:
            raise SessionError("input_error", f"unknown kind {kind!r}")
        if rule not in games.RULES:
            raise SessionError("input_error", f"unknown rule {rule!r}")
        if human_role not in (ALPHA, BETA):
            raise SessionError("input_error", f"human_role must be alpha or beta")
        if horizon < 1:
            raise SessionError("input_error", "horizon must be positive")
        if backend_name == "finite":
            space = _load_space(body.get("space", "sierpinski"))
            backend: Any = FiniteBackend(space)
        elif backend_name == "sorgenfrey":
            backend = SorgenfreyBackend()
        else:
            raise SessionError("input_error", f"unknown backend {backend_name!r}")
        engine_role = ALPHA if human_role == BETA else BETA
        engine = _engine_strategy(
            body.get("engine_strategy", "copy"), backend, engine_role, kind, session_seed
        )
        session = Session(
            session_id=uuid.uuid4().hex[:12],
            backend_name=backend_name,
            backend=backend,
            kind=kind,
            rule=rule,
            human_role=human_role,
            engine=engine,
            horizon=horizon,
            live=LivePlay(backend, kind, beta_name="", alpha_name=""),
        )
        with session.lock:
            _engine_move(session)  # engine opens when the human plays α
        sessions[session.session_id] = session
        return {"session_id": session.session_id, "state": session_state(session)}

    @app.get("/api/session/{session_id}")
    def get_session(session_id: str):
        return session_state(_get(session_id))

    @app.post("/api/session/{session_id}/move")
    def post_move(session_id: str, body: dict):
        session = _get(session_id)
        with session.lock:
            if session.finished():
                raise SessionError("illegal_move", "session is finished")
            move = body.get("move", body)
            live = session.live
            expected = BETA if live.pending is None else ALPHA
            if expected != session.human_role:
                raise SessionError("illegal_move", "not your turn")
            try:
                if session.human_role == BETA:
                    v = _decode_move_set(session, move.get("v"))
                    w = None
                    if session.kind == OD:
                        w = _decode_move_set(session, move.get("w"))
                    live.submit_beta(BetaMove(v, w))
                else:
                    live.submit_alpha(AlphaMove(_decode_move_set(session, move.get("u"))))
            except games.IllegalMove as exc:
                raise SessionError("illegal_move", exc.reason)
            _settle(session)
            _engine_move(session)
            return {"state": session_state(session)}

    return app
