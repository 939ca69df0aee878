"""Live session server: the engine on a wall clock behind a websocket.

One asyncio task owns the engine and advances it at the configured tick rate;
websocket handlers only append inbound percepts to an ordered queue and read
broadcast snapshots, so injection order within a tick is arrival order and the
engine state never crosses a thread boundary.

Protocol (JSON text frames over /ws):
  inbound  {"type": "inject", "percept": {"kind": ..., ...}}
           {"type": "command", "name": "..."}
  outbound {"type": "hello", ...}  once, on connect
           {"type": "state", ...}  every tick, to all clients
           {"type": "error", "detail": "..."}  on a bad inbound frame
"""
from __future__ import annotations

import asyncio
import json
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from . import __version__
from .engine import Engine, TraceRecord, percept_from_dict
from .errors import ScenarioError
from .motivation import MotiveSnapshot
from .percepts import Percept, PerceptKind


class LiveSession:
    """Engine plus the pending-injection queue and the injection log.

    The log keeps the raw (pre-resolution) percepts per tick, so dumping it
    yields a scenario file whose replay reproduces the session trace.
    """

    def __init__(self, engine: Engine):
        self.engine = engine
        self.pending: list[Percept] = []
        self.injection_log: list[dict] = []

    def inject(self, percept: Percept) -> None:
        self.pending.append(percept)

    def tick_once(self) -> tuple[TraceRecord, list[MotiveSnapshot], list[Percept]]:
        batch, self.pending = self.pending, []
        if batch:
            self.injection_log.append(
                {"tick": self.engine.tick, "percepts": [percept_to_dict(p) for p in batch]}
            )
        record = self.engine.step(batch)
        return record, self.engine.motive_snapshots(), batch

    def injection_log_as_scenario(self) -> list[dict]:
        events = [dict(event) for event in self.injection_log]
        # pad with a final empty event so a replay runs through the last tick
        last = self.engine.tick - 1
        if last >= 0 and (not events or events[-1]["tick"] < last):
            events.append({"tick": last, "percepts": []})
        return events


def percept_to_dict(p: Percept) -> dict:
    out: dict = {"kind": p.kind.value}
    if p.name is not None:
        out["name"] = p.name
    if p.base_intensity is not None:
        out["base_intensity"] = p.base_intensity
    if p.movement_speed is not None:
        out["movement_speed"] = p.movement_speed
    if p.distance_m is not None:
        out["distance_m"] = p.distance_m
    if p.partner_id is not None:
        out["partner_id"] = p.partner_id
    return out


def hello_frame(session: LiveSession) -> dict:
    engine = session.engine
    return {
        "type": "hello",
        "engine_version": __version__,
        "tick_hz": engine.config.tick_hz,
        "neutral_radius": engine.config.neutral_radius,
        "sector_table": {
            "version": engine.sectors.version,
            "digest": engine.sectors.digest,
            "words": [{"word": w, "degrees": d} for w, d in engine.sectors.words],
        },
        "percept_catalog": [
            {
                "kind": e.kind.value,
                "name": e.name,
                "base_intensity": e.base_intensity,
                "default_movement_speed": e.default_movement_speed,
            }
            for e in engine.catalog.entries
        ],
        "motives": [m.name for m in engine.bank.motives],
    }


def state_frame(
    record: TraceRecord, snapshots: list[MotiveSnapshot], applied: list[Percept]
) -> dict:
    return {
        "type": "state",
        "tick": record.tick,
        "active_motive": record.active_motive,
        "S": record.satisfaction,
        "A": record.arousal,
        "V": record.valence,
        "theta": record.theta_deg,
        "radius": record.radius,
        "emotion": record.emotion,
        "behavior": record.behavior_id,
        "motives": [
            {"name": s.name, "S": s.satisfaction, "a": s.activity, "inhibited": s.inhibited}
            for s in snapshots
        ],
        "applied_percepts": [percept_to_dict(p) for p in applied],
    }


def parse_client_frame(text: str, session: LiveSession) -> tuple[str | None, dict | None]:
    """Returns (action, error_frame); action is 'tick' for a step request."""
    try:
        msg = json.loads(text)
    except json.JSONDecodeError as exc:
        return None, {"type": "error", "detail": f"invalid JSON: {exc.msg}"}
    if not isinstance(msg, dict) or "type" not in msg:
        return None, {"type": "error", "detail": "expected an object with a 'type' field"}
    kind = msg["type"]
    if kind == "inject":
        try:
            percept = percept_from_dict(msg.get("percept"), "inject")
            if percept.name is not None and percept.kind is not PerceptKind.COMMAND:
                session.engine.catalog.lookup(percept.kind, percept.name)
        except (ScenarioError, KeyError, ValueError) as exc:
            return None, {"type": "error", "detail": str(exc)}
        session.inject(percept)
        return None, None
    if kind == "command":
        name = msg.get("name")
        if not isinstance(name, str) or not name:
            return None, {"type": "error", "detail": "command needs a nonempty 'name'"}
        session.inject(Percept(kind=PerceptKind.COMMAND, name=name))
        return None, None
    if kind == "step":
        return "tick", None
    return None, {"type": "error", "detail": f"unknown message type '{kind}'"}


def create_app(
    session: LiveSession,
    auto_tick: bool = True,
    allow_step_messages: bool = False,
    console_dir: str | Path | None = None,
    injection_log_path: str | Path | None = None,
) -> FastAPI:
    clients: set[WebSocket] = set()

    async def broadcast_tick() -> None:
        record, snapshots, applied = session.tick_once()
        payload = json.dumps(state_frame(record, snapshots, applied))
        for ws in list(clients):
            try:
                await ws.send_text(payload)
            except Exception:
                clients.discard(ws)

    async def tick_loop() -> None:
        period = 1.0 / session.engine.config.tick_hz
        loop = asyncio.get_running_loop()
        while True:
            started = loop.time()
            await broadcast_tick()
            await asyncio.sleep(max(0.0, period - (loop.time() - started)))

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        task = asyncio.create_task(tick_loop()) if auto_tick else None
        yield
        if task is not None:
            task.cancel()
            try:
                await task
            except asyncio.CancelledError:
                pass
        if injection_log_path is not None:
            Path(injection_log_path).write_text(
                json.dumps(session.injection_log_as_scenario(), indent=2)
            )

    app = FastAPI(title="affectsim", version=__version__, lifespan=lifespan)

    @app.get("/")
    async def info():
        return {
            "service": "affectsim",
            "version": __version__,
            "tick": session.engine.tick,
            "tick_hz": session.engine.config.tick_hz,
        }

    @app.get("/catalog")
    async def catalog():
        return hello_frame(session)["percept_catalog"]

    @app.get("/sectors")
    async def sectors():
        return hello_frame(session)["sector_table"]

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket):
        await ws.accept()
        await ws.send_text(json.dumps(hello_frame(session)))
        clients.add(ws)
        try:
            while True:
                text = await ws.receive_text()
                action, error = parse_client_frame(text, session)
                if error is not None:
                    await ws.send_text(json.dumps(error))
                elif action == "tick":
                    if allow_step_messages:
                        await broadcast_tick()
                    else:
                        await ws.send_text(
                            json.dumps({"type": "error", "detail": "step messages disabled"})
                        )
        except WebSocketDisconnect:
            pass
        finally:
            clients.discard(ws)

    if console_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/console", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app


def parse_bind(bind: str) -> tuple[str, int]:
    host, sep, port = bind.rpartition(":")
    if not sep or not host:
        raise ValueError(f"bind address must look like host:port, got '{bind}'")
    return host, int(port)


def serve_session(
    config,
    bind: str,
    seed: int | None = None,
    console_dir: str | Path | None = None,
    injection_log_path: str | Path | None = None,
) -> None:
    """Run the live session until interrupted (blocking)."""
    import uvicorn

    engine = Engine.from_config(config, seed=seed)
    session = LiveSession(engine)
    app = create_app(
        session,
        auto_tick=True,
        console_dir=console_dir,
        injection_log_path=injection_log_path,
    )
    host, port = parse_bind(bind)
    # bound the graceful-shutdown wait so lingering websocket clients cannot
    # keep the lifespan exit (and the injection-log dump) from running
    uvicorn.run(app, host=host, port=port, log_level="info", timeout_graceful_shutdown=5)
