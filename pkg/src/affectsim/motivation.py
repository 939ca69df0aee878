"""Hierarchical motive bank: satisfaction dynamics, activity gating, fusion.

Six event-based motives run every tick, ordered by priority (lower number
wins). A motive is *active* when its triggering condition holds and its
satisfaction lies strictly between its thresholds. Fusion is winner-takes-all:
the highest-priority active motive inhibits every active motive below it, and
only the winner's satisfaction value reaches the appraisal stage. When nothing
is active, fusion reports a sentinel and holds the last winner's satisfaction
so valence does not snap to an arbitrary zero.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError

NO_ACTIVE_MOTIVE = "NoActiveMotive"

OBEY_HUMANS = "ObeyHumans"
SELF_PRESERVATION = "SelfPreservation"
CAPTURE_SKELETON = "CaptureSkeleton"
GREETING = "Greeting"
INTERACT = "Interact"
SELF_ENTERTAINMENT = "SelfEntertainment"

MOTIVE_NAMES = (
    OBEY_HUMANS,
    SELF_PRESERVATION,
    CAPTURE_SKELETON,
    GREETING,
    INTERACT,
    SELF_ENTERTAINMENT,
)


@dataclass(frozen=True)
class MotiveParams:
    name: str
    priority: int
    motive_type: str = "EventBased"
    s_max: float | None = None
    s_min: float | None = None
    pos_step: float = 0.003
    neg_step: float = -0.02
    unsatisfied_s: float = -0.5
    satisfied_s: float = 1.0

    def __post_init__(self):
        if self.motive_type != "EventBased":
            raise ValueError(f"motive {self.name}: unsupported motive_type '{self.motive_type}'")
        if self.pos_step <= 0.0:
            raise ValueError(f"motive {self.name}: pos_step must be > 0, got {self.pos_step}")
        if self.neg_step >= 0.0:
            raise ValueError(f"motive {self.name}: neg_step must be < 0, got {self.neg_step}")
        if self.s_max is not None and self.s_min is not None and self.s_min >= self.s_max:
            raise ValueError(
                f"motive {self.name}: s_min ({self.s_min}) must be < s_max ({self.s_max})"
            )


def activity(satisfaction: float, params: MotiveParams, triggered: bool) -> int:
    """Binary activity gate: 1 iff triggered and s_min < S < s_max.

    Missing thresholds are unbounded; the boundaries themselves are exclusive,
    so a motive deactivates the very tick its satisfaction reaches a
    threshold.
    """
    if not triggered:
        return 0
    lo = params.s_min if params.s_min is not None else float("-inf")
    hi = params.s_max if params.s_max is not None else float("inf")
    return 1 if lo < satisfaction < hi else 0


@dataclass
class TickObservation:
    """Percept-derived signals the motives consume each tick.

    Built by the engine from the tick's percepts plus its sticky session
    state (current partner, distance, presence window).
    """

    tick: int = 0
    human_present: bool = False
    human_seen_this_tick: bool = False
    partner_id: str | None = None
    in_intimate_zone: bool = False
    looking_forward: bool = False
    looking_away: bool = False
    greeting_back: bool = False
    face_known: bool = False
    skeleton_known: bool = False
    command_pending: bool = False
    command_completed: bool = False
    # true once the configured number of consecutive ticks has passed with no
    # human-related percept (also counts from session start)
    stimulus_starved: bool = False


@dataclass(frozen=True)
class MotiveSnapshot:
    name: str
    satisfaction: float
    activity: int
    inhibited: bool
    target_rating: float


@dataclass(frozen=True)
class FusionOutput:
    active_motive: str  # a motive name, or NO_ACTIVE_MOTIVE
    satisfaction: float


def _snap(value: float) -> float:
    # keep repeated step sums on their decimal grid (0.003 * 300 == 0.9 exactly)
    return round(value, 12)


def _clamp(value: float) -> float:
    return max(-1.0, min(1.0, value))


class Motive:
    """Base event-based motive: holds satisfaction, trigger latch, and gate."""

    def __init__(self, params: MotiveParams):
        self.params = params
        self.satisfaction = 0.0
        self.triggered = False
        self.active = 0
        self.inhibited = False
        self.activation_count = 0

    @property
    def name(self) -> str:
        return self.params.name

    @property
    def priority(self) -> int:
        return self.params.priority

    def update(self, obs: TickObservation) -> None:
        raise NotImplementedError

    def _trigger(self) -> None:
        if not self.triggered:
            self.triggered = True
            self.activation_count += 1

    def _set_satisfaction(self, value: float) -> None:
        self.satisfaction = _clamp(_snap(value))

    def _refresh_activity(self) -> None:
        self.active = activity(self.satisfaction, self.params, self.triggered)

    def target_rating(self) -> float:
        """Normalized distance of S from the satisfaction ceiling (plumbing)."""
        hi = self.params.s_max if self.params.s_max is not None else 1.0
        lo = self.params.s_min if self.params.s_min is not None else -1.0
        span = hi - lo
        if span <= 0.0:
            return 0.0
        return max(0.0, min(1.0, (hi - self.satisfaction) / span))

    def snapshot(self) -> MotiveSnapshot:
        reported = 0 if self.inhibited else self.active
        return MotiveSnapshot(self.name, self.satisfaction, reported, self.inhibited, self.target_rating())


class ObeyHumansMotive(Motive):
    """Obey every issued command; unsatisfied until the command executes."""

    def update(self, obs: TickObservation) -> None:
        if obs.command_completed:
            self._set_satisfaction(self.params.satisfied_s)
            self.triggered = False
        elif obs.command_pending and not self.triggered:
            self._trigger()
            self._set_satisfaction(self.params.unsatisfied_s)
        elif not obs.command_pending:
            self.triggered = False
        self._refresh_activity()


class SelfPreservationMotive(Motive):
    """Distress while the partner stands inside the intimate zone."""

    def update(self, obs: TickObservation) -> None:
        if obs.human_present and obs.in_intimate_zone:
            self._trigger()
            self._set_satisfaction(self.params.unsatisfied_s)
        elif self.triggered:
            # partner moved to a safe distance (or left entirely)
            self.triggered = False
            self._set_satisfaction(self.params.satisfied_s)
        self._refresh_activity()


class CaptureSkeletonMotive(Motive):
    """Guide the partner until skeleton information becomes available."""

    def update(self, obs: TickObservation) -> None:
        needs_skeleton = obs.human_present and obs.face_known and not obs.skeleton_known
        if needs_skeleton and not self.triggered:
            self._trigger()
            self._set_satisfaction(self.params.unsatisfied_s)
        elif self.triggered and not needs_skeleton:
            if obs.skeleton_known:
                self._set_satisfaction(self.params.satisfied_s)
            self.triggered = False
        self._refresh_activity()


class GreetingMotive(Motive):
    """Greet each partner exactly once per session.

    The first-time flag is burned the moment the motive first activates for a
    partner, so no percept sequence can make the robot greet the same person
    twice -- even if they never greet back.
    """

    def __init__(self, params: MotiveParams):
        super().__init__(params)
        self.first_time_flags: dict[str, bool] = {}
        self.greeting_partner: str | None = None

    def update(self, obs: TickObservation) -> None:
        partner = obs.partner_id
        if (
            not self.triggered
            and obs.human_present
            and partner is not None
            and not self.first_time_flags.get(partner, False)
        ):
            self._trigger()
            self.first_time_flags[partner] = True
            self.greeting_partner = partner
            self._set_satisfaction(self.params.unsatisfied_s)
        elif self.triggered:
            if obs.greeting_back:
                self.first_time_flags[self.greeting_partner or ""] = True
                self._set_satisfaction(self.params.satisfied_s)
                self.triggered = False
            elif not obs.human_present or partner != self.greeting_partner:
                self.triggered = False
        self._refresh_activity()


class InteractMotive(Motive):
    """Engage an attentive partner; satisfaction tracks their attention.

    Satisfaction steps up on looking-forward percepts and down on
    looking-away percepts while a human is present. Once satisfaction reaches
    the ceiling the motive goes dormant and stays inactive until presence
    re-occurs, even if satisfaction later drifts back inside the band.
    """

    def __init__(self, params: MotiveParams):
        super().__init__(params)
        self.dormant = False
        self._was_present = False

    def update(self, obs: TickObservation) -> None:
        if obs.human_present and not self._was_present:
            self._trigger()
            self.dormant = False
            self._set_satisfaction(self.params.unsatisfied_s)
        elif not obs.human_present:
            self.triggered = False
        self._was_present = obs.human_present

        if self.triggered:
            if obs.looking_forward:
                self._set_satisfaction(self.satisfaction + self.params.pos_step)
            if obs.looking_away:
                self._set_satisfaction(self.satisfaction + self.params.neg_step)
            if self.params.s_max is not None and self.satisfaction >= self.params.s_max:
                self.dormant = True
        self._refresh_activity()
        if self.dormant:
            self.active = 0


class SelfEntertainmentMotive(Motive):
    """Idle activities once the world has been empty long enough."""

    def update(self, obs: TickObservation) -> None:
        if self.triggered and obs.human_seen_this_tick:
            # full satisfaction the tick a human shows up
            self._set_satisfaction(self.params.satisfied_s)
            self.triggered = False
        elif obs.stimulus_starved and not self.triggered:
            self._trigger()
            self._set_satisfaction(self.params.unsatisfied_s)
        self._refresh_activity()


_MOTIVE_CLASSES = {
    OBEY_HUMANS: ObeyHumansMotive,
    SELF_PRESERVATION: SelfPreservationMotive,
    CAPTURE_SKELETON: CaptureSkeletonMotive,
    GREETING: GreetingMotive,
    INTERACT: InteractMotive,
    SELF_ENTERTAINMENT: SelfEntertainmentMotive,
}


def fuse(motives: list[Motive]) -> Motive | None:
    """Winner-takes-all fusion; marks losers inhibited as a side effect.

    Returns the highest-priority active motive, or None. Every active motive
    with lower priority than the winner is flagged inhibited (its reported
    activity drops to 0); inactive motives are never inhibited.
    """
    winner = None
    for motive in sorted(motives, key=lambda m: m.priority):
        if motive.active and winner is None:
            winner = motive
            motive.inhibited = False
        else:
            motive.inhibited = bool(motive.active and winner is not None)
    return winner


class MotiveBank:
    """The six motives plus fusion state, advanced once per tick."""

    def __init__(self, params_by_name: dict[str, MotiveParams]):
        missing = [name for name in MOTIVE_NAMES if name not in params_by_name]
        if missing:
            raise ConfigError(f"motive parameters missing for: {', '.join(missing)}")
        self.motives = [
            _MOTIVE_CLASSES[name](params_by_name[name]) for name in MOTIVE_NAMES
        ]
        self.motives.sort(key=lambda m: m.priority)
        self._last_satisfaction = 0.0

    def update(self, obs: TickObservation) -> FusionOutput:
        for motive in self.motives:
            motive.update(obs)
        winner = fuse(self.motives)
        if winner is None:
            return FusionOutput(NO_ACTIVE_MOTIVE, self._last_satisfaction)
        self._last_satisfaction = winner.satisfaction
        return FusionOutput(winner.name, winner.satisfaction)

    def snapshots(self) -> list[MotiveSnapshot]:
        return [m.snapshot() for m in self.motives]

    def __getitem__(self, name: str) -> Motive:
        for motive in self.motives:
            if motive.name == name:
                return motive
        raise KeyError(name)


def load_motive_params(path: str | Path) -> dict[str, MotiveParams]:
    """Read the per-motive parameter table, aborting on invalid combinations."""
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"motive parameter file {path}: invalid JSON ({exc})") from exc
    if not isinstance(raw, dict) or not isinstance(raw.get("motives"), list):
        raise ConfigError(f"motive parameter file {path}: expected {{'motives': [...]}}")
    params: dict[str, MotiveParams] = {}
    priorities: dict[int, str] = {}
    for item in raw["motives"]:
        name = item.get("name", "<unnamed>")
        if name not in MOTIVE_NAMES:
            raise ConfigError(f"motive parameter file {path}: unknown motive '{name}'")
        try:
            p = MotiveParams(
                name=name,
                priority=int(item["priority"]),
                motive_type=str(item.get("motive_type", "EventBased")),
                s_max=None if item.get("s_max") is None else float(item["s_max"]),
                s_min=None if item.get("s_min") is None else float(item["s_min"]),
                pos_step=float(item.get("pos_step", 0.003)),
                neg_step=float(item.get("neg_step", -0.02)),
                unsatisfied_s=float(item.get("unsatisfied_s", -0.5)),
                satisfied_s=float(item.get("satisfied_s", 1.0)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"motive '{name}': {exc}") from exc
        if name in params:
            raise ConfigError(f"motive parameter file {path}: duplicate motive '{name}'")
        if p.priority in priorities:
            raise ConfigError(
                f"motive '{name}': priority {p.priority} already used by '{priorities[p.priority]}'"
            )
        priorities[p.priority] = name
        params[name] = p
    return params


def default_params_path() -> Path:
    return Path(__file__).parent / "data" / "motive_params.json"
