"""Symbolic percepts, proxemic zones, and stimulus-intensity composition.

Percepts are pre-symbolized stimuli (no vision pipeline here): a kind, an
empirical base intensity in [0,1], a movement speed in [0,1], and the
interlocutor distance. The distance maps onto one of Hall's four proxemic
zones, which blend the stimulus intensity with a fixed zone intensity to
produce the overall intensity consumed by the arousal update.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError


class PerceptKind(enum.Enum):
    FACIAL_EXPRESSION = "FacialExpression"
    HAND_GESTURE = "HandGesture"
    HEAD_GESTURE = "HeadGesture"
    BODY_POSTURE = "BodyPosture"
    PRESENCE_DETECTED = "PresenceDetected"
    FACE_DETECTED = "FaceDetected"
    SKELETON_AVAILABLE = "SkeletonAvailable"
    GREETING_BACK = "GreetingBack"
    LOOKING_FORWARD = "LookingForward"
    LOOKING_AWAY = "LookingAway"
    COMMAND = "Command"
    NO_STIMULUS = "NoStimulus"


# Kinds that indicate a visible human. Commands may arrive from a remote
# operator and NoStimulus is an explicit "nothing", so neither counts as a
# visual stimulus or as evidence of presence.
HUMAN_KINDS = frozenset(
    k for k in PerceptKind if k not in (PerceptKind.COMMAND, PerceptKind.NO_STIMULUS)
)


@dataclass(frozen=True)
class Percept:
    """One timestamped symbolic stimulus.

    Fields left as None are resolved by the engine at ingest time: intensity
    and speed fall back to the percept catalog, distance and partner to the
    sticky per-session values.
    """

    kind: PerceptKind
    name: str | None = None
    base_intensity: float | None = None
    movement_speed: float | None = None
    distance_m: float | None = None
    partner_id: str | None = None
    tick: int = 0

    def __post_init__(self):
        if self.base_intensity is not None and not 0.0 <= self.base_intensity <= 1.0:
            raise ValueError(f"base_intensity must be in [0,1], got {self.base_intensity}")
        if self.movement_speed is not None and not 0.0 <= self.movement_speed <= 1.0:
            raise ValueError(f"movement_speed must be in [0,1], got {self.movement_speed}")
        if self.distance_m is not None and self.distance_m < 0.0:
            raise ValueError(f"distance_m must be >= 0, got {self.distance_m}")
        if self.tick < 0:
            raise ValueError(f"tick must be >= 0, got {self.tick}")


class Zone(enum.Enum):
    INTIMATE = "Intimate"
    PERSONAL = "Personal"
    SOCIAL = "Social"
    PUBLIC = "Public"


@dataclass(frozen=True)
class ProxemicZone:
    """A zone plus its intensity-blend weights.

    In the social zone the stimulus intensity passes through unchanged; the
    personal zone blends stimulus and zone intensity 50/50; the intimate zone
    is pure zone intensity; the public zone keeps 25% of the stimulus and
    zeroes the zone intensity.
    """

    zone: Zone
    stimulus_weight: float
    zone_intensity_weight: float
    zone_intensity: float


_ZONE_BLENDS = {
    Zone.INTIMATE: ProxemicZone(Zone.INTIMATE, 0.0, 1.0, 1.0),
    Zone.PERSONAL: ProxemicZone(Zone.PERSONAL, 0.5, 0.5, 1.0),
    Zone.SOCIAL: ProxemicZone(Zone.SOCIAL, 1.0, 0.0, 1.0),
    Zone.PUBLIC: ProxemicZone(Zone.PUBLIC, 0.25, 0.0, 0.0),
}

# Per-zone proximity score used by the weighted-features arousal composer.
PROXIMITY_SCORES = {
    Zone.INTIMATE: 1.0,
    Zone.PERSONAL: 0.66,
    Zone.SOCIAL: 0.33,
    Zone.PUBLIC: 0.0,
}


@dataclass(frozen=True)
class ZoneCutoffs:
    """Hall's interpersonal distance boundaries in meters (half-open bands)."""

    intimate_max: float = 0.45
    personal_max: float = 1.2
    social_max: float = 3.6

    def __post_init__(self):
        if not 0.0 < self.intimate_max < self.personal_max < self.social_max:
            raise ValueError(
                "zone cutoffs must satisfy 0 < intimate < personal < social, "
                f"got {self.intimate_max}, {self.personal_max}, {self.social_max}"
            )


DEFAULT_CUTOFFS = ZoneCutoffs()


def classify_zone(distance_m: float, cutoffs: ZoneCutoffs = DEFAULT_CUTOFFS) -> ProxemicZone:
    """Map a distance to exactly one proxemic zone (bands are [lo, hi))."""
    if distance_m < 0.0:
        raise ValueError(f"distance_m must be >= 0, got {distance_m}")
    if distance_m < cutoffs.intimate_max:
        zone = Zone.INTIMATE
    elif distance_m < cutoffs.personal_max:
        zone = Zone.PERSONAL
    elif distance_m < cutoffs.social_max:
        zone = Zone.SOCIAL
    else:
        zone = Zone.PUBLIC
    return _ZONE_BLENDS[zone]


def overall_intensity(base_intensity: float, zone: ProxemicZone) -> float:
    """Blend stimulus intensity with the zone intensity, clamped to [0,1]."""
    value = zone.stimulus_weight * base_intensity + zone.zone_intensity_weight * zone.zone_intensity
    return min(1.0, max(0.0, value))


@dataclass(frozen=True)
class ArousalWeights:
    """Weights of the recognised-features/proximity/movement arousal blend.

    Must be nonnegative and sum to 1 so the blend of [0,1] inputs stays in
    [0,1].
    """

    w1: float = 1.0 / 3.0
    w2: float = 1.0 / 3.0
    w3: float = 1.0 / 3.0

    def __post_init__(self):
        if min(self.w1, self.w2, self.w3) < 0.0:
            raise ValueError(f"arousal weights must be nonnegative, got {self}")
        total = self.w1 + self.w2 + self.w3
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"arousal weights must sum to 1, got {total}")


def visual_arousal_input(rf: float, pr: float, sm: float, weights: ArousalWeights) -> float:
    """Weighted blend of recognised features, proximity, and movement speed."""
    return weights.w1 * rf + weights.w2 * pr + weights.w3 * sm


@dataclass(frozen=True)
class CatalogEntry:
    kind: PerceptKind
    name: str
    base_intensity: float
    default_movement_speed: float


class PerceptCatalog:
    """Named percepts with their empirical intensity tags.

    The first entry of each kind doubles as the default used when a scenario
    or injection names only the kind.
    """

    def __init__(self, entries: list[CatalogEntry]):
        self.entries = list(entries)
        self.by_name: dict[str, CatalogEntry] = {}
        self.default_for_kind: dict[PerceptKind, CatalogEntry] = {}
        for entry in self.entries:
            if entry.name in self.by_name:
                raise ConfigError(f"percept catalog: duplicate percept name '{entry.name}'")
            self.by_name[entry.name] = entry
            self.default_for_kind.setdefault(entry.kind, entry)
        missing = [k.value for k in PerceptKind if k not in self.default_for_kind]
        if missing:
            raise ConfigError(f"percept catalog: no entry for kinds {', '.join(missing)}")

    def lookup(self, kind: PerceptKind, name: str | None) -> CatalogEntry:
        if name is None:
            return self.default_for_kind[kind]
        entry = self.by_name.get(name)
        if entry is None:
            raise KeyError(f"unknown percept name '{name}'")
        if entry.kind is not kind:
            raise ValueError(f"percept '{name}' is a {entry.kind.value}, not a {kind.value}")
        return entry


def load_percept_catalog(path: str | Path) -> PerceptCatalog:
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"percept catalog {path}: invalid JSON ({exc})") from exc
    if not isinstance(raw, list):
        raise ConfigError(f"percept catalog {path}: expected a JSON array")
    entries = []
    for i, item in enumerate(raw):
        try:
            kind = PerceptKind(item["kind"])
            entry = CatalogEntry(
                kind=kind,
                name=str(item["name"]),
                base_intensity=float(item["base_intensity"]),
                default_movement_speed=float(item["default_movement_speed"]),
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise ConfigError(f"percept catalog {path}: entry {i}: {exc}") from exc
        if not 0.0 <= entry.base_intensity <= 1.0:
            raise ConfigError(
                f"percept catalog {path}: entry {i} ('{entry.name}'): "
                f"base_intensity {entry.base_intensity} not in [0,1]"
            )
        if not 0.0 <= entry.default_movement_speed <= 1.0:
            raise ConfigError(
                f"percept catalog {path}: entry {i} ('{entry.name}'): "
                f"default_movement_speed {entry.default_movement_speed} not in [0,1]"
            )
        entries.append(entry)
    return PerceptCatalog(entries)


def default_catalog_path() -> Path:
    return Path(__file__).parent / "data" / "percept_catalog.json"
