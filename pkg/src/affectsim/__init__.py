"""affectsim: a deterministic emotion-appraisal engine for human-robot interaction.

Symbolic percepts drive a hierarchical motive bank; the fused satisfaction and
the stimulus intensity drive a two-dimensional arousal/valence appraisal; the
resulting point maps onto a 28-word circumplex wheel and selects a behavior
triple. Runs as a library, a scenario-replay CLI, and a live session server.
"""

__version__ = "0.1.0"

from .appraisal import AppraisalParams, AppraisalState, update_arousal, update_valence
from .circumplex import EmotionLabel, EmotionSector, build_sectors, map_emotion, theta
from .config import EngineConfig, load_config
from .engine import Engine, ScenarioEvent, TraceRecord, load_scenario, run_scenario
from .errors import ConfigError, ScenarioError
from .motivation import FusionOutput, MotiveBank, MotiveParams, activity, fuse
from .percepts import (
    ArousalWeights,
    Percept,
    PerceptKind,
    ProxemicZone,
    Zone,
    ZoneCutoffs,
    classify_zone,
    overall_intensity,
    visual_arousal_input,
)

__all__ = [
    "__version__",
    "AppraisalParams",
    "AppraisalState",
    "ArousalWeights",
    "ConfigError",
    "EmotionLabel",
    "EmotionSector",
    "Engine",
    "EngineConfig",
    "FusionOutput",
    "MotiveBank",
    "MotiveParams",
    "Percept",
    "PerceptKind",
    "ProxemicZone",
    "ScenarioError",
    "ScenarioEvent",
    "TraceRecord",
    "Zone",
    "ZoneCutoffs",
    "activity",
    "build_sectors",
    "classify_zone",
    "fuse",
    "load_config",
    "load_scenario",
    "map_emotion",
    "overall_intensity",
    "run_scenario",
    "theta",
    "update_arousal",
    "update_valence",
    "visual_arousal_input",
]
