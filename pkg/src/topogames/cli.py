"""Command-line front door: checks, scans, demos, scripted and live play.

Exit codes: 0 success, 1 a scanned property was falsified, 2 input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import games
from .combinators import (
    EmbeddingKind,
    GammaSequence,
    lemma_alpha_strategy,
    prop3_beta_bm,
    prop7_product_alpha,
    prop8_pair_alpha,
    subspace_lift,
    theorem2_beta_strategy,
)
from .diagonal_relations import (
    delta_baire_witness,
    is_baire,
    is_delta_baire,
    minimal_semi_nbhd,
)
from .finite_topology import (
    CATALOG,
    BudgetExceededError,
    FiniteSpace,
    mask_of,
    partition_space,
    points_of,
    sierpinski,
)
from .games import ALPHA, BETA, BM, OD, AlphaMove, BetaMove, FiniteBackend
from .sorgenfrey import (
    P_UNIT,
    SorgenfreyBackend,
    delta_baire_failure_witness,
    interval,
    interval_closure,
    inversion_discontinuity_witness,
    rat_str,
    theorem2_beta_strategy_sorgenfrey,
)
from .topo_groups import FiniteTopoGroup, classify, inverse_continuity_witness, theorem1_harness

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class Config:
    max_order: int = 4
    horizon: int = 5
    seed: int = 0
    output: str = "text"
    port: int = 8723

    def __post_init__(self) -> None:
        if self.max_order < 1 or self.horizon < 1:
            raise ValueError("budgets must be positive")
        if not 1 <= self.port <= 65535:
            raise ValueError("port out of range")


def _load_space_arg(arg: str) -> FiniteSpace:
    if arg in CATALOG:
        return CATALOG[arg]
    with open(arg) as fh:
        return FiniteSpace.from_json(json.load(fh))


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


# -- subcommands ---------------------------------------------------------------


def cmd_space(args) -> int:
    space = _load_space_arg(args.space)
    witness = delta_baire_witness(space, minimal_semi_nbhd(space)) if space.n else None
    payload = {
        "format": 1,
        "points": space.n,
        "regular": space.is_regular(),
        "baire": is_baire(space),
        "delta_baire": is_delta_baire(space),
        "witness": points_of(witness) if witness is not None else None,
    }
    _emit(
        payload,
        args.json,
        [
            f"points:      {space.n}",
            f"regular:     {payload['regular']}",
            f"baire:       {payload['baire']}",
            f"delta_baire: {payload['delta_baire']}",
            f"witness:     {payload['witness']}",
        ],
    )
    return EXIT_OK


def cmd_group_check(args) -> int:
    with open(args.file) as fh:
        group = FiniteTopoGroup.from_json(json.load(fh))
    cls = classify(group)
    payload = {
        "format": 1,
        "order": group.order,
        "semitopological": cls.semitopological,
        "paratopological": cls.paratopological,
        "topological": cls.topological,
        "delta_baire": is_delta_baire(group.space),
        "witnesses": [],
    }
    lines = [
        f"order:           {group.order}",
        f"semitopological: {cls.semitopological}",
        f"paratopological: {cls.paratopological}",
        f"topological:     {cls.topological}",
        f"delta_baire:     {payload['delta_baire']}",
    ]
    if cls.paratopological:
        e = group.identity
        us = (
            [mask_of(args.u)]
            if args.u is not None
            else [u for u in group.space.nonempty_opens() if (u >> e) & 1]
        )
        for u in us:
            wit = inverse_continuity_witness(group, u)
            payload["witnesses"].append(
                {"u": points_of(u), "v": points_of(wit.v), "w": points_of(wit.w), "p": points_of(wit.p)}
            )
            lines.append(f"U={points_of(u)} -> P={points_of(wit.p)} (V={points_of(wit.v)}, W={points_of(wit.w)})")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_group_scan(args) -> int:
    report = theorem1_harness(args.max_order, all_labeled_groups=args.all_labeled)
    payload = report.to_json()
    if args.json_report:
        with open(args.json_report, "w") as fh:
            json.dump(payload, fh, indent=2)
    _emit(
        payload,
        args.json,
        [
            f"instances:       {report.instances}",
            f"semitopological: {report.semitopological}",
            f"paratopological: {report.paratopological}",
            f"topological:     {report.topological}",
            f"witnesses:       {report.witnesses_checked}",
            f"violations:      {len(report.violations)}",
        ],
    )
    return EXIT_OK if not report.violations else EXIT_FALSIFIED


def cmd_sorgenfrey(args) -> int:
    u = interval(0, 1)
    closed, trace = interval_closure(u)
    inv = inversion_discontinuity_witness(u)
    x, y = delta_baire_failure_witness(u)
    strat = theorem2_beta_strategy_sorgenfrey()
    be = SorgenfreyBackend()
    play = games.referee_run(be, OD, strat, games.CopyAlpha(), horizon=args.rounds)
    payload = {
        "format": 1,
        "interval_closure": {"interval": str(closed), "trace": list(trace)},
        "inversion": {
            "u": str(u),
            "counterexamples": [
                {"eps": rat_str(eps), "point": rat_str(inv.counterexample(eps))}
                for eps in (interval(0, 1).b / 2, interval(0, 1).b * 2)
            ],
        },
        "delta_baire_failure": {"w": str(u), "x": rat_str(x), "y": rat_str(y)},
        "theorem2_play": play.to_json(),
    }
    lines = [
        f"closure{u} = {closed}",
        *(f"  {line}" for line in trace),
        f"negation discontinuous into {u}: eps -> eps/2, e.g. eps=1/2 -> 1/4 with -1/4 outside",
        f"delta-Baire failure pair for W={u}: ({rat_str(x)}, {rat_str(y)}), "
        f"difference {rat_str(y - x)} escapes [0, 1]",
        f"theorem-2 splitting play ({args.rounds} rounds):",
        *(
            f"  round {k}: V={be.encode(r.v)} W={be.encode(r.w)} U={be.encode(r.u)}"
            for k, r in enumerate(play.rounds)
        ),
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _strategy_from_spec(spec: dict, backend, player: str, kind: str, seed: int) -> games.Strategy:
    name = spec.get("name", "copy")
    if name == "copy":
        return games.CopyAlpha() if player == ALPHA else games.CopyBeta(kind)
    if name == "random":
        return games.random_strategy(backend, spec.get("seed", seed), player, kind)
    if name == "theorem2":
        return theorem2_beta_strategy_sorgenfrey()
    if name == "human":
        return HumanStrategy(backend, player, kind)
    if name == "scripted":
        moves = []
        for m in spec.get("moves", []):
            if player == BETA:
                v = _decode_set(backend, m["v"])
                w = _decode_set(backend, m["w"]) if "w" in m and m["w"] is not None else None
                moves.append(BetaMove(v, w))
            else:
                moves.append(AlphaMove(_decode_set(backend, m["u"])))
        return games.scripted_strategy(moves, player, kind)
    raise ValueError(f"unknown strategy {name!r}")


def _decode_set(backend, value):
    if isinstance(backend, FiniteBackend):
        return mask_of(value)
    from .sorgenfrey import SInterval

    return SInterval.from_json(value)


class HumanStrategy(games.Strategy):
    """Thin prompt adapter: reads point lists (finite) or endpoints."""

    name = "human"

    def __init__(self, backend, player: str, kind: str):
        self.backend = backend
        self.player = player
        self.kind = kind

    def _ask(self, label: str):
        raw = input(f"{label}> ").strip()
        if isinstance(self.backend, FiniteBackend):
            return mask_of(int(t) for t in raw.replace(",", " ").split())
        a, b = raw.split()
        return interval(a, b)

    def move(self, play, pending=None):
        k = len(play.rounds)
        if self.player == BETA:
            print(f"[round {k}] constraint: {self.backend.encode(play.constraint_before(k))}")
            v = self._ask("V")
            if self.kind == OD:
                return BetaMove(v, self._ask("W"))
            return BetaMove(v)
        print(f"[round {k}] beta played V={self.backend.encode(pending.v)}")
        return AlphaMove(self._ask("U"))


def cmd_game_play(args) -> int:
    with open(args.script) as fh:
        script = json.load(fh)
    kind = script.get("kind", OD)
    seed = script.get("seed", 0)
    if script.get("backend", "finite") == "sorgenfrey":
        backend = SorgenfreyBackend()
    else:
        space = script.get("space", "sierpinski")
        backend = FiniteBackend(
            CATALOG[space] if isinstance(space, str) else FiniteSpace.from_json(space)
        )
    beta = _strategy_from_spec(script.get("beta", {}), backend, BETA, kind, seed)
    alpha = _strategy_from_spec(script.get("alpha", {}), backend, ALPHA, kind, seed)
    try:
        play = games.referee_run(backend, kind, beta, alpha, script.get("horizon", 5))
    except games.IllegalMove as exc:
        print(f"illegal move: {exc}")
        return EXIT_INPUT
    rule = script.get("rule", "i")
    verdict = games.evaluate(play, rule)
    payload = {"play": play.to_json(), "verdict": verdict.to_json()}
    lines = []
    for k, r in enumerate(play.rounds):
        w = f" W={backend.encode(r.w)}" if r.w is not None else ""
        lines.append(f"round {k}: V={backend.encode(r.v)}{w} U={backend.encode(r.u)}")
        for note in r.beta_notes + r.alpha_notes:
            lines.append(f"    {note}")
    lines.append(f"verdict({rule}): {verdict.winner or 'undetermined'}"
                 + (f" [{verdict.reason}]" if verdict.reason else ""))
    _emit(payload, args.json, lines)
    return EXIT_OK


def _demo_play(args):
    construction = args.construction
    sier = sierpinski()
    if construction == "theorem2":
        backend = SorgenfreyBackend()
        beta = theorem2_beta_strategy(backend, P_UNIT)
        alpha = games.CopyAlpha()
        return backend, OD, beta, alpha, "b"
    if construction == "prop3":
        backend = SorgenfreyBackend()
        beta = prop3_beta_bm(theorem2_beta_strategy_sorgenfrey(), games.CopyAlpha())
        return backend, BM, beta, games.CopyAlpha(), "i"
    if construction == "prop7":
        strat = prop7_product_alpha([games.CopyAlpha(), games.CopyAlpha()], [sier, sier])
        return strat.backend, OD, games.random_strategy(strat.backend, args.seed, BETA, OD), strat, "k"
    if construction == "prop8":
        strat = prop8_pair_alpha(games.CopyAlpha(), games.CopyAlpha(), sier, sier)
        return strat.backend, OD, games.random_strategy(strat.backend, args.seed, BETA, OD), strat, "b"
    if construction == "lemma":
        backend = FiniteBackend(sier)
        gammas = GammaSequence(sier, (tuple(set(sier.min_nbhd)),))
        return backend, BM, games.random_strategy(backend, args.seed, BETA, BM), lemma_alpha_strategy(backend, gammas), "i"
    if construction == "subspace":
        part = partition_space([[0, 1], [2]])
        backend = FiniteBackend(part)
        lifted = subspace_lift(
            games.CopyBeta(OD), part, part.carrier, EmbeddingKind("c_dense")
        )
        return backend, OD, lifted, games.random_strategy(backend, args.seed, ALPHA, OD), "k"
    raise ValueError(f"unknown construction {construction!r}")


def cmd_game_demo(args) -> int:
    backend, kind, beta, alpha, rule = _demo_play(args)
    play = games.referee_run(backend, kind, beta, alpha, horizon=args.rounds)
    verdict = games.evaluate(play, rule)
    print(f"construction: {args.construction} ({kind}, rule {rule})")
    for k, r in enumerate(play.rounds):
        w = f" W={backend.encode(r.w)}" if r.w is not None else ""
        print(f"round {k}: V={backend.encode(r.v)}{w} U={backend.encode(r.u)}")
        for note in r.beta_notes + r.alpha_notes:
            print(f"    [{note}]")
    print(f"verdict: {verdict.winner or 'undetermined'}"
          + (f" ({verdict.reason})" if verdict.reason else ""))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(seed=args.seed), host="127.0.0.1", port=args.port)
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topogames")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_space = sub.add_parser("space", help="check a finite space")
    space_sub = p_space.add_subparsers(dest="space_command", required=True)
    p_check = space_sub.add_parser("check")
    p_check.add_argument("space", help="catalog name or JSON file")
    p_check.set_defaults(func=cmd_space)

    p_group = sub.add_parser("group", help="classify groups / run the scan")
    group_sub = p_group.add_subparsers(dest="group_command", required=True)
    g_check = group_sub.add_parser("check")
    g_check.add_argument("file")
    g_check.add_argument("--u", type=int, nargs="+", default=None, help="points of one open U ∋ e")
    g_check.set_defaults(func=cmd_group_check)
    g_scan = group_sub.add_parser("scan")
    g_scan.add_argument("--max-order", type=int, default=4)
    g_scan.add_argument("--all-labeled", action="store_true")
    g_scan.add_argument("--json-report", default=None)
    g_scan.set_defaults(func=cmd_group_scan)

    p_sorg = sub.add_parser("sorgenfrey", help="print the Sorgenfrey witnesses")
    sorg_sub = p_sorg.add_subparsers(dest="sorgenfrey_command", required=True)
    s_demo = sorg_sub.add_parser("demo")
    s_demo.add_argument("--rounds", type=int, default=5)
    s_demo.set_defaults(func=cmd_sorgenfrey)

    p_game = sub.add_parser("game", help="run plays")
    game_sub = p_game.add_subparsers(dest="game_command", required=True)
    g_play = game_sub.add_parser("play")
    g_play.add_argument("--script", required=True)
    g_play.set_defaults(func=cmd_game_play)
    g_demo = game_sub.add_parser("demo")
    g_demo.add_argument(
        "--construction",
        required=True,
        choices=["theorem2", "prop3", "prop7", "prop8", "lemma", "subspace"],
    )
    g_demo.add_argument("--rounds", type=int, default=5)
    g_demo.add_argument("--seed", type=int, default=0)
    g_demo.set_defaults(func=cmd_game_demo)

    p_serve = sub.add_parser("serve", help="start the local session API")
    p_serve.add_argument("--port", type=int, default=8723)
    p_serve.add_argument("--seed", type=int, default=0)
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
