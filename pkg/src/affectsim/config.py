"""Engine configuration: one JSON file naming every tunable and data file.

Path fields resolve relative to the config file's directory; a null path
means the packaged default. Everything is validated at load time so the tick
loop never has to raise.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .appraisal import AppraisalParams
from .errors import ConfigError
from .percepts import ArousalWeights, ZoneCutoffs

COMPOSERS = ("zone_blend", "weighted_features")


@dataclass(frozen=True)
class EngineConfig:
    tick_hz: float = 10.0
    rng_seed: int = 0
    neutral_radius: float = 0.15
    absence_ticks: int = 50
    default_distance_m: float = 2.0
    default_partner_id: str = "p1"
    zone_cutoffs: ZoneCutoffs = field(default_factory=ZoneCutoffs)
    arousal_composer: str = "zone_blend"
    arousal_weights: ArousalWeights = field(default_factory=ArousalWeights)
    appraisal: AppraisalParams = field(default_factory=AppraisalParams)
    percept_catalog_path: Path | None = None
    motive_params_path: Path | None = None
    behavior_catalog_path: Path | None = None
    sector_table_path: Path | None = None
    allow_sector_mismatch: bool = False

    def __post_init__(self):
        if self.tick_hz <= 0.0:
            raise ConfigError(f"tick_hz must be > 0, got {self.tick_hz}")
        if self.neutral_radius < 0.0:
            raise ConfigError(f"neutral_radius must be >= 0, got {self.neutral_radius}")
        if self.absence_ticks < 1:
            raise ConfigError(f"absence_ticks must be >= 1, got {self.absence_ticks}")
        if self.default_distance_m < 0.0:
            raise ConfigError(f"default_distance_m must be >= 0, got {self.default_distance_m}")
        if self.arousal_composer not in COMPOSERS:
            raise ConfigError(
                f"arousal_input.composer must be one of {COMPOSERS}, got '{self.arousal_composer}'"
            )


def _resolve_path(base: Path, value) -> Path | None:
    if value is None:
        return None
    path = Path(value)
    if not path.is_absolute():
        path = base / path
    if not path.exists():
        raise ConfigError(f"referenced file does not exist: {path}")
    return path


def config_from_dict(raw: dict, base_dir: Path) -> EngineConfig:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    try:
        cutoffs_raw = raw.get("zone_cutoffs_m", {})
        cutoffs = ZoneCutoffs(
            intimate_max=float(cutoffs_raw.get("intimate", 0.45)),
            personal_max=float(cutoffs_raw.get("personal", 1.2)),
            social_max=float(cutoffs_raw.get("social", 3.6)),
        )
    except ValueError as exc:
        raise ConfigError(f"zone_cutoffs_m: {exc}") from exc
    arousal_raw = raw.get("arousal_input", {})
    try:
        weights = ArousalWeights(
            w1=float(arousal_raw.get("w1", 1.0 / 3.0)),
            w2=float(arousal_raw.get("w2", 1.0 / 3.0)),
            w3=float(arousal_raw.get("w3", 1.0 / 3.0)),
        )
    except ValueError as exc:
        raise ConfigError(f"arousal_input: {exc}") from exc
    appraisal_raw = raw.get("appraisal", {})
    try:
        appraisal = AppraisalParams(
            arousal_step=float(appraisal_raw.get("arousal_step", 0.25)),
            arousal_weight=float(appraisal_raw.get("arousal_weight", 1.0)),
            valence_weight=float(appraisal_raw.get("valence_weight", 0.05)),
            intensity_tolerance=float(appraisal_raw.get("intensity_tolerance", 1e-9)),
        )
    except ValueError as exc:
        raise ConfigError(f"appraisal: {exc}") from exc
    try:
        return EngineConfig(
            tick_hz=float(raw.get("tick_hz", 10.0)),
            rng_seed=int(raw.get("rng_seed", 0)),
            neutral_radius=float(raw.get("neutral_radius", 0.15)),
            absence_ticks=int(raw.get("absence_ticks", 50)),
            default_distance_m=float(raw.get("default_distance_m", 2.0)),
            default_partner_id=str(raw.get("default_partner_id", "p1")),
            zone_cutoffs=cutoffs,
            arousal_composer=str(arousal_raw.get("composer", "zone_blend")),
            arousal_weights=weights,
            appraisal=appraisal,
            percept_catalog_path=_resolve_path(base_dir, raw.get("percept_catalog")),
            motive_params_path=_resolve_path(base_dir, raw.get("motive_params")),
            behavior_catalog_path=_resolve_path(base_dir, raw.get("behavior_catalog")),
            sector_table_path=_resolve_path(base_dir, raw.get("sector_table")),
            allow_sector_mismatch=bool(raw.get("allow_sector_mismatch", False)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str | Path | None = None) -> EngineConfig:
    """Load a config file, or the packaged default when path is None."""
    if path is None:
        path = default_config_path()
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path}: invalid JSON ({exc})") from exc
    return config_from_dict(raw, path.parent)


def default_config_path() -> Path:
    return Path(__file__).parent / "data" / "default_config.json"
