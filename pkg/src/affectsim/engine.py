"""The deterministic tick engine and scenario replay.

Every tick runs the same fixed pipeline: resolve the tick's percepts against
sticky session state (current partner, current distance, presence window),
compute the overall stimulus intensity, update all motives, fuse them, update
arousal then valence, map the point to an emotion label, and let the behavior
selector dispatch. The result is one TraceRecord per tick; identical seeds and
percept sequences produce byte-identical traces.
"""
from __future__ import annotations

import csv
import json
from collections import deque
from dataclasses import dataclass, replace
from pathlib import Path

from . import behavior as behavior_mod
from . import motivation
from .appraisal import AppraisalState, update_arousal, update_valence
from .behavior import BehaviorSelector, load_behavior_catalog
from .circumplex import SectorTable, load_table, map_emotion
from .config import EngineConfig
from .errors import ScenarioError
from .motivation import MotiveBank, TickObservation, load_motive_params
from .percepts import (
    HUMAN_KINDS,
    Percept,
    PerceptCatalog,
    PerceptKind,
    PROXIMITY_SCORES,
    Zone,
    classify_zone,
    default_catalog_path,
    load_percept_catalog,
    overall_intensity,
    visual_arousal_input,
)

TRACE_HEADER = ["tick", "active_motive", "S", "A", "V", "theta", "radius", "emotion", "behavior"]


@dataclass(frozen=True)
class ScenarioEvent:
    tick: int
    percepts: list[Percept]


@dataclass(frozen=True)
class TraceRecord:
    tick: int
    active_motive: str
    satisfaction: float
    arousal: float
    valence: float
    theta_deg: float | None
    radius: float
    emotion: str
    behavior_id: str | None

    def csv_row(self) -> list[str]:
        return [
            str(self.tick),
            self.active_motive,
            repr(self.satisfaction),
            repr(self.arousal),
            repr(self.valence),
            "" if self.theta_deg is None else repr(self.theta_deg),
            repr(self.radius),
            self.emotion,
            self.behavior_id or "",
        ]


class Engine:
    """Single-writer simulation state; step() advances exactly one tick."""

    def __init__(
        self,
        config: EngineConfig,
        catalog: PerceptCatalog,
        motive_params: dict[str, motivation.MotiveParams],
        behavior_catalog: behavior_mod.BehaviorCatalog,
        sectors: SectorTable,
        seed: int | None = None,
    ):
        self.config = config
        self.catalog = catalog
        self.sectors = sectors
        self.wheel = sectors.wheel
        self.seed = config.rng_seed if seed is None else seed
        self.bank = MotiveBank(motive_params)
        self.selector = BehaviorSelector(behavior_catalog, self.seed)
        self.appraisal_state = AppraisalState()
        self.tick = 0
        # sticky session state
        self.current_distance_m = config.default_distance_m
        self.current_partner_id = config.default_partner_id
        self.ticks_without_human = 0
        self.seen_any_human = False
        self.face_known = False
        self.skeleton_known = False
        self.command_queue: deque[str] = deque()
        self.executing_command = False

    @classmethod
    def from_config(cls, config: EngineConfig, seed: int | None = None) -> "Engine":
        catalog = load_percept_catalog(config.percept_catalog_path or default_catalog_path())
        motive_params = load_motive_params(
            config.motive_params_path or motivation.default_params_path()
        )
        sectors = load_table(
            config.sector_table_path, allow_mismatch=config.allow_sector_mismatch
        )
        labels = behavior_mod.emotion_labels([word for word, _ in sectors.words])
        behavior_catalog = load_behavior_catalog(
            config.behavior_catalog_path or behavior_mod.default_catalog_path(), labels
        )
        return cls(config, catalog, motive_params, behavior_catalog, sectors, seed)

    # -- percept resolution -------------------------------------------------

    def resolve(self, percept: Percept) -> Percept:
        """Fill unset fields from the catalog and the sticky session state."""
        if (
            percept.kind is PerceptKind.COMMAND
            and percept.name is not None
            and percept.name not in self.catalog.by_name
        ):
            # command names are free-form verbs, not catalog entries
            entry = self.catalog.default_for_kind[PerceptKind.COMMAND]
            name = percept.name
        else:
            entry = self.catalog.lookup(percept.kind, percept.name)
            name = entry.name
        return replace(
            percept,
            name=name,
            base_intensity=(
                entry.base_intensity if percept.base_intensity is None else percept.base_intensity
            ),
            movement_speed=(
                entry.default_movement_speed
                if percept.movement_speed is None
                else percept.movement_speed
            ),
            distance_m=(
                self.current_distance_m if percept.distance_m is None else percept.distance_m
            ),
            partner_id=(
                self.current_partner_id if percept.partner_id is None else percept.partner_id
            ),
            tick=self.tick,
        )

    def _percept_intensity(self, percept: Percept) -> float:
        zone = classify_zone(percept.distance_m, self.config.zone_cutoffs)
        if self.config.arousal_composer == "weighted_features":
            return visual_arousal_input(
                percept.base_intensity,
                PROXIMITY_SCORES[zone.zone],
                percept.movement_speed,
                self.config.arousal_weights,
            )
        return overall_intensity(percept.base_intensity, zone)

    # -- the tick pipeline ---------------------------------------------------

    def step(self, tick_percepts: list[Percept]) -> TraceRecord:
        completed = self.selector.begin_tick(self.tick)
        command_completed = False
        if completed is not None and completed[0] == motivation.OBEY_HUMANS:
            if self.executing_command:
                self.command_queue.popleft()
                self.executing_command = False
                command_completed = True

        resolved = [self.resolve(p) for p in tick_percepts]
        obs = self._ingest(resolved, command_completed)
        intensity = self._tick_intensity(resolved)

        fused = self.bank.update(obs)

        state = update_arousal(self.appraisal_state, intensity, self.config.appraisal)
        state = update_valence(state, fused.satisfaction, self.config.appraisal)
        self.appraisal_state = replace(state, tick=self.tick)

        label = map_emotion(
            state.valence, state.arousal, self.wheel, self.config.neutral_radius
        )

        active = None if fused.active_motive == motivation.NO_ACTIVE_MOTIVE else fused.active_motive
        token = self.bank[active].activation_count if active is not None else None
        dispatched = self.selector.dispatch(self.tick, label.label, active, token)
        if dispatched is not None and active == motivation.OBEY_HUMANS:
            self.executing_command = True

        record = TraceRecord(
            tick=self.tick,
            active_motive=fused.active_motive,
            satisfaction=fused.satisfaction,
            arousal=state.arousal,
            valence=state.valence,
            theta_deg=label.theta_deg,
            radius=label.radius,
            emotion=label.label,
            behavior_id=dispatched.behavior_id if dispatched else None,
        )
        self.tick += 1
        return record

    def _ingest(self, resolved: list[Percept], command_completed: bool) -> TickObservation:
        human_seen = False
        looking_forward = False
        looking_away = False
        greeting_back = False
        for p in resolved:
            if p.kind is PerceptKind.NO_STIMULUS:
                continue
            if p.kind is PerceptKind.COMMAND:
                self.command_queue.append(p.name or "command")
                continue
            # human-related visual percept
            human_seen = True
            if p.partner_id != self.current_partner_id:
                # a different person: their face/skeleton are unknown
                self.current_partner_id = p.partner_id
                self.face_known = False
                self.skeleton_known = False
            self.current_distance_m = p.distance_m
            if p.kind is PerceptKind.FACE_DETECTED:
                self.face_known = True
            elif p.kind is PerceptKind.SKELETON_AVAILABLE:
                self.skeleton_known = True
            elif p.kind is PerceptKind.LOOKING_FORWARD:
                looking_forward = True
            elif p.kind is PerceptKind.LOOKING_AWAY:
                looking_away = True
            elif p.kind is PerceptKind.GREETING_BACK:
                greeting_back = True

        if human_seen:
            self.seen_any_human = True
            self.ticks_without_human = 0
        else:
            self.ticks_without_human += 1
        starved = self.ticks_without_human >= self.config.absence_ticks
        present = self.seen_any_human and not starved
        if not present:
            self.face_known = False
            self.skeleton_known = False

        zone = classify_zone(self.current_distance_m, self.config.zone_cutoffs)
        return TickObservation(
            tick=self.tick,
            human_present=present,
            human_seen_this_tick=human_seen,
            partner_id=self.current_partner_id,
            in_intimate_zone=zone.zone is Zone.INTIMATE,
            looking_forward=looking_forward,
            looking_away=looking_away,
            greeting_back=greeting_back,
            face_known=self.face_known,
            skeleton_known=self.skeleton_known,
            command_pending=bool(self.command_queue),
            command_completed=command_completed,
            stimulus_starved=starved,
        )

    def _tick_intensity(self, resolved: list[Percept]) -> float:
        # the most salient visual stimulus drives arousal this tick
        values = [self._percept_intensity(p) for p in resolved if p.kind in HUMAN_KINDS]
        return max(values) if values else 0.0

    def motive_snapshots(self) -> list[motivation.MotiveSnapshot]:
        return self.bank.snapshots()

    def run(self, events: list[ScenarioEvent]) -> list[TraceRecord]:
        """Replay a validated scenario: one step per tick through the last event."""
        if not events:
            return []
        by_tick = {event.tick: event.percepts for event in events}
        records = []
        for tick in range(max(by_tick) + 1):
            records.append(self.step(by_tick.get(tick, [])))
        return records


# -- scenario files ---------------------------------------------------------

_PERCEPT_FIELDS = {"kind", "name", "base_intensity", "movement_speed", "distance_m", "partner_id"}


def percept_from_dict(raw: dict, where: str) -> Percept:
    if not isinstance(raw, dict):
        raise ScenarioError(f"{where}: percept must be an object")
    unknown = set(raw) - _PERCEPT_FIELDS
    if unknown:
        raise ScenarioError(f"{where}: unknown percept field(s) {', '.join(sorted(unknown))}")
    if "kind" not in raw:
        raise ScenarioError(f"{where}: percept is missing 'kind'")
    try:
        kind = PerceptKind(raw["kind"])
    except ValueError:
        valid = ", ".join(k.value for k in PerceptKind)
        raise ScenarioError(
            f"{where}: unknown percept kind '{raw['kind']}' (valid kinds: {valid})"
        ) from None
    try:
        return Percept(
            kind=kind,
            name=raw.get("name"),
            base_intensity=None if raw.get("base_intensity") is None else float(raw["base_intensity"]),
            movement_speed=None if raw.get("movement_speed") is None else float(raw["movement_speed"]),
            distance_m=None if raw.get("distance_m") is None else float(raw["distance_m"]),
            partner_id=None if raw.get("partner_id") is None else str(raw["partner_id"]),
        )
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"{where}: {exc}") from exc


def load_scenario(path: str | Path, catalog: PerceptCatalog | None = None) -> list[ScenarioEvent]:
    """Load and validate a scenario file (a JSON array of tick events)."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario {path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(raw, list):
        raise ScenarioError(f"scenario {path}: expected a JSON array of events")
    events = []
    last_tick = -1
    for i, item in enumerate(raw):
        where = f"scenario {path}: event {i}"
        if not isinstance(item, dict) or "tick" not in item or "percepts" not in item:
            raise ScenarioError(f"{where}: expected an object with 'tick' and 'percepts'")
        try:
            tick = int(item["tick"])
        except (TypeError, ValueError) as exc:
            raise ScenarioError(f"{where}: tick: {exc}") from exc
        if tick < 0:
            raise ScenarioError(f"{where}: tick must be >= 0, got {tick}")
        if tick <= last_tick:
            raise ScenarioError(f"{where}: ticks must be strictly increasing (tick {tick})")
        last_tick = tick
        if not isinstance(item["percepts"], list):
            raise ScenarioError(f"{where}: 'percepts' must be an array")
        event_percepts = []
        for j, praw in enumerate(item["percepts"]):
            percept = percept_from_dict(praw, f"{where}, percept {j} (tick {tick})")
            if (
                catalog is not None
                and percept.name is not None
                and percept.kind is not PerceptKind.COMMAND
            ):
                try:
                    catalog.lookup(percept.kind, percept.name)
                except (KeyError, ValueError) as exc:
                    raise ScenarioError(f"{where}, percept {j} (tick {tick}): {exc}") from exc
            event_percepts.append(percept)
        events.append(ScenarioEvent(tick, event_percepts))
    return events


def write_trace(records: list[TraceRecord], out_path: str | Path) -> None:
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_HEADER)
        for record in records:
            writer.writerow(record.csv_row())


def run_scenario(
    scenario_path: str | Path,
    config: EngineConfig,
    out_path: str | Path,
    seed: int | None = None,
) -> list[TraceRecord]:
    """Replay a scenario file through a fresh engine and write the CSV trace."""
    engine = Engine.from_config(config, seed=seed)
    events = load_scenario(scenario_path, engine.catalog)
    records = engine.run(events)
    write_trace(records, out_path)
    return records


def bundled_scenario_path(name: str) -> Path:
    return Path(__file__).parent / "data" / "scenarios" / f"{name}.json"
