"""Emotion- and motive-driven behavior selection.

A behavior is a synchronized triple of gesture, facial expression, and
utterance with a duration in ticks. Selection maps the current emotion label
to one of its catalog entries (seeded uniform choice); motive overrides take
precedence so that, e.g., a newly active greeting motive always greets.

Dispatch is fire-on-change with duration gating: while a triple is playing,
nothing new is dispatched unless the active motive changes, which preempts
immediately. An emotion change within the same motive waits for the running
triple to finish.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .circumplex import NEUTRAL
from .errors import ConfigError
from .motivation import MOTIVE_NAMES


@dataclass(frozen=True)
class BehaviorTriple:
    behavior_id: str
    gesture_id: str
    facial_expression_id: str
    utterance: str
    duration_ticks: int


class BehaviorCatalog:
    def __init__(
        self,
        by_label: dict[str, list[BehaviorTriple]],
        motive_overrides: dict[str, list[BehaviorTriple]],
    ):
        self.by_label = by_label
        self.motive_overrides = motive_overrides

    def validate(self, labels: list[str]) -> None:
        """Every emotion label needs at least one entry; overrides must name
        real motives."""
        for label in labels:
            if not self.by_label.get(label):
                raise ConfigError(f"behavior catalog: no behaviors for emotion label '{label}'")
        for motive in self.motive_overrides:
            if motive not in MOTIVE_NAMES:
                raise ConfigError(f"behavior catalog: motive_overrides names unknown motive '{motive}'")


def select_behavior(
    label: str,
    active_motive: str | None,
    catalog: BehaviorCatalog,
    rng: random.Random,
) -> BehaviorTriple:
    """Pick the triple for this emotion/motive; deterministic given the rng state."""
    if active_motive is not None and active_motive in catalog.motive_overrides:
        candidates = catalog.motive_overrides[active_motive]
    else:
        candidates = catalog.by_label[label]
    if len(candidates) == 1:
        return candidates[0]
    return rng.choice(candidates)


class BehaviorSelector:
    """Owns the seeded choice state and the running-behavior gate.

    Call begin_tick() first each tick (it reports a triple that just finished,
    which the engine uses to acknowledge command execution), then dispatch()
    after the emotion label is known.

    A motive override fires at most once per motive activation (the engine
    passes each motive's activation count as the token), so an interrupted
    greeting is not re-emitted when the greeting motive wins fusion again.
    Label-driven behaviors re-fire after completion only when the selection
    context (motive, emotion label) actually changed.
    """

    def __init__(self, catalog: BehaviorCatalog, seed: int):
        self.catalog = catalog
        self._rng = random.Random(seed)
        self._running: BehaviorTriple | None = None
        self._running_motive: str | None = None
        self._ends_at_tick = 0
        self._last_context: tuple | None = None
        self._fired_overrides: dict[str, int | None] = {}

    @property
    def running(self) -> BehaviorTriple | None:
        return self._running

    def begin_tick(self, tick: int) -> tuple[str | None, BehaviorTriple] | None:
        """Clear a behavior whose duration has elapsed; returns (motive, triple)."""
        if self._running is not None and tick >= self._ends_at_tick:
            completed = (self._running_motive, self._running)
            self._running = None
            self._running_motive = None
            return completed
        return None

    def dispatch(
        self,
        tick: int,
        label: str,
        active_motive: str | None,
        activation_token: int | None = None,
    ) -> BehaviorTriple | None:
        """Dispatch a new triple if the gate allows it; None means keep going."""
        overridden = active_motive is not None and active_motive in self.catalog.motive_overrides
        context = (active_motive,) if overridden else (active_motive, label)
        if self._running is not None:
            if active_motive == self._running_motive:
                return None  # let the current behavior play out
            self._running = None  # motive switch preempts immediately
        if overridden:
            if self._fired_overrides.get(active_motive) == activation_token:
                return None  # already performed for this activation
        elif context == self._last_context:
            return None  # nothing selection-relevant changed
        triple = select_behavior(label, active_motive, self.catalog, self._rng)
        self._running = triple
        self._running_motive = active_motive
        self._ends_at_tick = tick + triple.duration_ticks
        self._last_context = context
        if overridden:
            self._fired_overrides[active_motive] = activation_token
        return triple


def _parse_triples(path, source_key: str, items) -> list[BehaviorTriple]:
    if not isinstance(items, list) or not items:
        raise ConfigError(f"behavior catalog {path}: '{source_key}' must be a nonempty array")
    triples = []
    for i, item in enumerate(items):
        where = f"behavior catalog {path}: '{source_key}' entry {i}"
        if not isinstance(item, dict):
            raise ConfigError(f"{where}: expected an object")
        missing = [
            f for f in ("gesture_id", "facial_expression_id", "utterance", "duration_ticks")
            if f not in item
        ]
        if missing:
            raise ConfigError(f"{where}: missing field(s) {', '.join(missing)}")
        try:
            duration = int(item["duration_ticks"])
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{where}: duration_ticks: {exc}") from exc
        if duration < 1:
            raise ConfigError(f"{where}: duration_ticks must be >= 1, got {duration}")
        triples.append(
            BehaviorTriple(
                behavior_id=f"{source_key}/{i}",
                gesture_id=str(item["gesture_id"]),
                facial_expression_id=str(item["facial_expression_id"]),
                utterance=str(item["utterance"]),
                duration_ticks=duration,
            )
        )
    return triples


def load_behavior_catalog(path: str | Path, labels: list[str]) -> BehaviorCatalog:
    """Load and validate the catalog; labels is the full emotion vocabulary
    (28 words plus neutral)."""
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"behavior catalog {path}: invalid JSON ({exc})") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"behavior catalog {path}: expected a JSON object")
    raw = dict(raw)
    overrides_raw = raw.pop("motive_overrides", {})
    if not isinstance(overrides_raw, dict):
        raise ConfigError(f"behavior catalog {path}: 'motive_overrides' must be an object")
    known = set(labels)
    for key in raw:
        if key not in known:
            raise ConfigError(f"behavior catalog {path}: unknown emotion label '{key}'")
    by_label = {key: _parse_triples(path, key, items) for key, items in raw.items()}
    overrides = {key: _parse_triples(path, key, items) for key, items in overrides_raw.items()}
    catalog = BehaviorCatalog(by_label, overrides)
    catalog.validate(labels)
    return catalog


def default_catalog_path() -> Path:
    return Path(__file__).parent / "data" / "behavior_catalog.json"


def emotion_labels(words: list[str]) -> list[str]:
    return list(words) + [NEUTRAL]
