#!/usr/bin/env python3
"""Record a deterministic 600-tick protocol stream into fixtures/.

Drives the engine's live-session server through its real websocket protocol
(step messages enabled) and writes every frame as one JSON line: the hello
frame first, then 600 state frames. The scripted session passes through
skeleton capture, greeting, engagement, disengagement (which drives the
engine through the annoyed sector), an intimate-zone intrusion, recovery,
and a long absence so the idle motive appears.
"""
import json
from pathlib import Path

from starlette.testclient import TestClient

from affectsim.config import load_config
from affectsim.engine import Engine
from affectsim.server import LiveSession, create_app

OUT = Path(__file__).resolve().parent.parent / "fixtures" / "session-600.jsonl"
TICKS = 600


def scripted_percepts(tick):
    if tick == 0:
        return [
            {"kind": "PresenceDetected", "distance_m": 2.0, "partner_id": "p1"},
            {"kind": "FaceDetected"},
        ]
    if tick == 6:
        return [{"kind": "SkeletonAvailable"}]
    if tick == 12:
        return [{"kind": "GreetingBack"}]
    if 13 <= tick <= 60:
        return [{"kind": "LookingForward"}]
    if 61 <= tick <= 150:
        # disengagement: satisfaction falls while stimuli keep arousal high,
        # steering theta through the annoyed sector
        if tick % 2 == 0:
            return [{"kind": "LookingAway", "movement_speed": (tick % 7) / 10.0}]
        return [{"kind": "BodyPosture", "name": "arms-crossed", "base_intensity": (tick % 9) / 10.0}]
    if tick == 170:
        return [{"kind": "PresenceDetected", "distance_m": 0.3}]
    if 171 <= tick <= 200 and tick % 3 == 0:
        return [{"kind": "PresenceDetected"}]
    if tick == 210:
        return [{"kind": "PresenceDetected", "distance_m": 2.2}]
    if 211 <= tick <= 320 and tick % 2 == 1:
        return [{"kind": "LookingForward"}]
    if tick == 330:
        return [{"kind": "Command", "name": "tell-a-story"}]
    # nothing after 330: presence expires, the idle motive takes over
    return []


def main():
    engine = Engine.from_config(load_config(), seed=42)
    session = LiveSession(engine)
    app = create_app(session, auto_tick=False, allow_step_messages=True)
    frames = []
    with TestClient(app) as client:
        with client.websocket_connect("/ws") as ws:
            frames.append(ws.receive_text())
            for tick in range(TICKS):
                for percept in scripted_percepts(tick):
                    ws.send_text(json.dumps({"type": "inject", "percept": percept}))
                ws.send_text(json.dumps({"type": "step"}))
                frames.append(ws.receive_text())

    states = [json.loads(f) for f in frames[1:]]
    emotions = {s["emotion"] for s in states}
    annoyed = [s["tick"] for s in states if s["emotion"] == "annoyed"]
    motives = []
    for s in states:
        if not motives or motives[-1] != s["active_motive"]:
            motives.append(s["active_motive"])
    if not annoyed:
        raise SystemExit("fixture script never passed through the annoyed sector")
    OUT.parent.mkdir(exist_ok=True)
    OUT.write_text("\n".join(frames) + "\n")
    print(f"wrote {OUT} ({len(frames)} frames)")
    print(f"annoyed frames at ticks: {annoyed[:10]}{'...' if len(annoyed) > 10 else ''}")
    print(f"motive arc: {motives}")
    print(f"emotions visited: {sorted(emotions)}")


if __name__ == "__main__":
    main()
