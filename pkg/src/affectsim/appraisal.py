"""Per-tick arousal and valence updates.

Arousal follows the stimulus: while the overall intensity keeps changing,
arousal equals weight * intensity; once the stimulus goes static, arousal
decays by a fixed step per tick. Valence chases the active motive's
satisfaction with a rate-capped step and lands on it exactly (no overshoot).
Both values are clamped to [-1, 1] after every update.
"""
from __future__ import annotations

from dataclasses import dataclass, replace


def _clamp(x: float) -> float:
    return max(-1.0, min(1.0, x))


@dataclass(frozen=True)
class AppraisalParams:
    arousal_step: float = 0.25
    arousal_weight: float = 1.0
    valence_weight: float = 0.05
    # two intensities closer than this count as "unchanged"
    intensity_tolerance: float = 1e-9

    def __post_init__(self):
        for field in ("arousal_step", "arousal_weight", "valence_weight"):
            if getattr(self, field) <= 0.0:
                raise ValueError(f"{field} must be > 0, got {getattr(self, field)}")
        if self.intensity_tolerance < 0.0:
            raise ValueError(f"intensity_tolerance must be >= 0, got {self.intensity_tolerance}")


@dataclass(frozen=True)
class AppraisalState:
    arousal: float = 0.0
    valence: float = 0.0
    last_overall_intensity: float = 0.0
    tick: int = 0


def update_arousal(
    state: AppraisalState, intensity: float, params: AppraisalParams
) -> AppraisalState:
    """Advance arousal for one tick of overall stimulus intensity."""
    if abs(intensity - state.last_overall_intensity) <= params.intensity_tolerance:
        arousal = state.arousal - params.arousal_step
    else:
        arousal = params.arousal_weight * intensity
    return replace(state, arousal=_clamp(arousal), last_overall_intensity=intensity)


def update_valence(
    state: AppraisalState, satisfaction: float, params: AppraisalParams
) -> AppraisalState:
    """Move valence one rate-capped step toward the fused satisfaction.

    When the remaining gap is within the rate cap the step equals the gap, so
    valence lands exactly on the satisfaction value rather than oscillating
    around it.
    """
    gap = abs(satisfaction - state.valence)
    if gap <= params.valence_weight:
        valence = satisfaction
    elif satisfaction > state.valence:
        valence = state.valence + params.valence_weight
    else:
        valence = state.valence - params.valence_weight
    return replace(state, valence=_clamp(valence))
