#!/usr/bin/env python3
"""Record golden API transcripts for the frontend test suite.

Runs the real FastAPI app in-process and captures request/response
pairs into frontend/fixtures/, so the vitest suite exercises the client
against genuine server behavior without a running server.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from topogames.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "fixtures"


def record() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    catalog = client.get("/api/catalog/spaces").json()
    (FIXTURES / "catalog.json").write_text(json.dumps(catalog, indent=2))

    # scripted session: human β on Sierpiński vs engine α, 3 rounds, rule i
    create_body = {
        "backend": "finite",
        "space": "sierpinski",
        "kind": "OD",
        "rule": "i",
        "human_role": "beta",
        "engine_strategy": "copy",
        "horizon": 3,
    }
    created = client.post("/api/session", json=create_body).json()
    sid = created["session_id"]
    transcript = {"create": {"request": create_body, "response": created}, "moves": []}
    for k in range(3):
        move = {"move": {"v": 0, "w": 1 if k == 0 else 0}}
        resp = client.post(f"/api/session/{sid}/move", json=move)
        transcript["moves"].append(
            {"request": move, "status": resp.status_code, "response": resp.json()}
        )
    (FIXTURES / "session_beta_rounds.json").write_text(json.dumps(transcript, indent=2))

    # illegal move: second W escapes the shrunken constraint
    created2 = client.post("/api/session", json=create_body).json()
    sid2 = created2["session_id"]
    client.post(f"/api/session/{sid2}/move", json={"move": {"v": 0, "w": 0}})
    bad = client.post(f"/api/session/{sid2}/move", json={"move": {"v": 1, "w": 0}})
    (FIXTURES / "illegal_move.json").write_text(
        json.dumps(
            {
                "request": {"move": {"v": 1, "w": 0}},
                "status": bad.status_code,
                "response": bad.json(),
            },
            indent=2,
        )
    )

    check = client.post("/api/check/delta-baire", json={"space": "sierpinski"}).json()
    (FIXTURES / "delta_baire_check.json").write_text(json.dumps(check, indent=2))
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    record()
