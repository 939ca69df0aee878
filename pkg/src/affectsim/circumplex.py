"""The 28-word circumplex wheel: angular sectors over valence/arousal space.

Each emotion word sits at a fixed angle; its sector runs from the circular
midpoint with its lower neighbour to the circular midpoint with its upper
neighbour (half-open, so the wheel partitions [0, 360) with no gaps or
overlaps). Points inside the neutral core disk map to the neutral state
regardless of angle.

The word/angle table ships as a versioned data file; loading verifies its
sha256 digest so a silently edited table cannot drift away from the engine
without an explicit override.
"""
from __future__ import annotations

import hashlib
import json
import math
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError

NEUTRAL = "neutral"

# sha256 of the packaged emotion_words.json
EXPECTED_TABLE_DIGEST = "605de46ad9163767395b179de1d722c72a5cb3cc3ea86c3e4d25d42f6ecb6852"


@dataclass(frozen=True)
class EmotionSector:
    word: str
    center_deg: float
    arc_start_deg: float
    arc_end_deg: float

    def contains(self, theta_deg: float) -> bool:
        """Half-open arc membership, handling the wrap across 0 degrees."""
        theta = theta_deg % 360.0
        if self.arc_start_deg <= self.arc_end_deg:
            return self.arc_start_deg <= theta < self.arc_end_deg
        return theta >= self.arc_start_deg or theta < self.arc_end_deg

    @property
    def arc_length_deg(self) -> float:
        return (self.arc_end_deg - self.arc_start_deg) % 360.0


@dataclass(frozen=True)
class EmotionLabel:
    label: str
    theta_deg: float | None
    radius: float
    # 1 at the sector center falling to 0 at its boundary; None for neutral.
    # Reported for observability, nothing downstream consumes it.
    membership: float | None = None


def build_sectors(words_with_degrees: list[tuple[str, float]]) -> list[EmotionSector]:
    """Build the sector partition from (word, center angle) pairs.

    Sectors are returned sorted by center angle. Boundaries are circular
    midpoints of adjacent centers; the wrap boundary between the last and
    first word is the midpoint across 0 degrees.
    """
    if len(set(deg for _, deg in words_with_degrees)) != len(words_with_degrees):
        raise ValueError("emotion word table contains duplicate degree values")
    for word, deg in words_with_degrees:
        if not 0.0 <= deg < 360.0:
            raise ValueError(f"degree value for '{word}' must be in [0,360), got {deg}")
    ordered = sorted(words_with_degrees, key=lambda pair: pair[1])
    n = len(ordered)
    sectors = []
    for i, (word, center) in enumerate(ordered):
        lo_word, lo_center = ordered[(i - 1) % n]
        hi_word, hi_center = ordered[(i + 1) % n]
        if lo_center > center:  # wrap below
            start = ((lo_center + center + 360.0) / 2.0) % 360.0
        else:
            start = (lo_center + center) / 2.0
        if hi_center < center:  # wrap above
            end = ((center + hi_center + 360.0) / 2.0) % 360.0
        else:
            end = (center + hi_center) / 2.0
        sectors.append(EmotionSector(word, center, start, end))
    return sectors


class SectorWheel:
    """Immutable lookup table over a sector partition."""

    def __init__(self, sectors: list[EmotionSector]):
        # order by arc start; the final sector wraps across 0
        self.sectors = sorted(sectors, key=lambda s: s.arc_start_deg)
        self._starts = [s.arc_start_deg for s in self.sectors]

    def locate(self, theta_deg: float) -> EmotionSector:
        theta = theta_deg % 360.0
        i = bisect_right(self._starts, theta) - 1
        return self.sectors[i]  # i == -1 falls into the wrap sector

    def __iter__(self):
        return iter(self.sectors)

    def __len__(self):
        return len(self.sectors)


def theta(valence: float, arousal: float) -> float:
    """Four-quadrant angle of an (valence, arousal) point, in [0, 360)."""
    if valence == 0.0 and arousal == 0.0:
        raise ValueError("theta is undefined at the origin")
    return math.degrees(math.atan2(arousal, valence)) % 360.0


def map_emotion(
    valence: float, arousal: float, wheel: SectorWheel, neutral_radius: float
) -> EmotionLabel:
    """Label a valence/arousal point with its circumplex emotion word."""
    radius = math.hypot(valence, arousal)
    if radius < neutral_radius:
        angle = None if radius == 0.0 else theta(valence, arousal)
        return EmotionLabel(NEUTRAL, angle, radius)
    angle = theta(valence, arousal)
    sector = wheel.locate(angle)
    # signed offset from the center; sectors are not symmetric around it,
    # so normalize against the boundary on the side the point sits on
    delta = (angle - sector.center_deg + 180.0) % 360.0 - 180.0
    if delta >= 0.0:
        span = (sector.arc_end_deg - sector.center_deg) % 360.0
    else:
        span = (sector.center_deg - sector.arc_start_deg) % 360.0
    membership = max(0.0, 1.0 - abs(delta) / span) if span > 0.0 else 1.0
    return EmotionLabel(sector.word, angle, radius, membership)


def load_sector_table(
    path: str | Path | None = None, allow_mismatch: bool = False
) -> tuple[list[tuple[str, float]], str, str]:
    """Load the (word, degrees) table; returns (pairs, version, digest).

    Refuses a table whose digest differs from the packaged one unless
    allow_mismatch is set.
    """
    if path is None:
        path = default_table_path()
    data = Path(path).read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != EXPECTED_TABLE_DIGEST and not allow_mismatch:
        raise ConfigError(
            f"emotion word table {path} has digest {digest[:12]}..., expected "
            f"{EXPECTED_TABLE_DIGEST[:12]}...; pass the mismatch override to use it anyway"
        )
    try:
        raw = json.loads(data)
        version = str(raw["version"])
        pairs = [(str(item["word"]), float(item["degrees"])) for item in raw["words"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"emotion word table {path}: malformed ({exc})") from exc
    if len(pairs) != 28:
        raise ConfigError(f"emotion word table {path}: expected 28 words, got {len(pairs)}")
    return pairs, version, digest


def default_table_path() -> Path:
    return Path(__file__).parent / "data" / "emotion_words.json"


@dataclass(frozen=True)
class SectorTable:
    """A loaded word table plus its ready-to-query wheel."""

    words: tuple[tuple[str, float], ...]
    version: str
    digest: str
    wheel: SectorWheel


def load_table(path: str | Path | None = None, allow_mismatch: bool = False) -> SectorTable:
    pairs, version, digest = load_sector_table(path, allow_mismatch)
    return SectorTable(tuple(pairs), version, digest, SectorWheel(build_sectors(pairs)))


def default_wheel() -> SectorWheel:
    pairs, _, _ = load_sector_table()
    return SectorWheel(build_sectors(pairs))
