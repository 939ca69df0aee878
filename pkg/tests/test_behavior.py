import json
import random

import pytest

from affectsim.behavior import (
    BehaviorSelector,
    default_catalog_path,
    emotion_labels,
    load_behavior_catalog,
    select_behavior,
)
from affectsim.circumplex import load_sector_table
from affectsim.errors import ConfigError
from affectsim.motivation import GREETING, INTERACT, OBEY_HUMANS, SELF_PRESERVATION

LABELS = emotion_labels([w for w, _ in load_sector_table()[0]])
CATALOG = load_behavior_catalog(default_catalog_path(), LABELS)


class TestCatalog:
    def test_every_label_covered(self):
        for label in LABELS:
            assert CATALOG.by_label[label], label

    def test_behavior_ids_are_stable_keys(self):
        assert CATALOG.by_label["happy"][0].behavior_id == "happy/0"
        assert CATALOG.motive_overrides[GREETING][0].behavior_id == "Greeting/0"

    def test_durations_positive(self):
        for triples in CATALOG.by_label.values():
            for t in triples:
                assert t.duration_ticks >= 1

    def test_missing_label_rejected(self, tmp_path):
        raw = json.loads(default_catalog_path().read_text())
        del raw["annoyed"]
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ConfigError, match="annoyed"):
            load_behavior_catalog(path, LABELS)

    def test_unknown_label_rejected(self, tmp_path):
        raw = json.loads(default_catalog_path().read_text())
        raw["euphoric"] = raw["happy"]
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ConfigError, match="euphoric"):
            load_behavior_catalog(path, LABELS)

    def test_unknown_override_motive_rejected(self, tmp_path):
        raw = json.loads(default_catalog_path().read_text())
        raw["motive_overrides"]["Daydream"] = raw["motive_overrides"][GREETING]
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ConfigError, match="Daydream"):
            load_behavior_catalog(path, LABELS)

    def test_error_names_entry_and_field(self, tmp_path):
        raw = json.loads(default_catalog_path().read_text())
        del raw["happy"][1]["utterance"]
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ConfigError, match="'happy' entry 1.*utterance"):
            load_behavior_catalog(path, LABELS)

    def test_nonpositive_duration_rejected(self, tmp_path):
        raw = json.loads(default_catalog_path().read_text())
        raw["sad"][0]["duration_ticks"] = 0
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ConfigError, match="duration_ticks"):
            load_behavior_catalog(path, LABELS)


class TestSelectBehavior:
    def test_golden_choice_seed_42(self):
        triple = select_behavior("annoyed", INTERACT, CATALOG, random.Random(42))
        assert triple.behavior_id == "annoyed/2"

    def test_greeting_override_takes_precedence(self):
        for label in ("happy", "sad", "neutral"):
            triple = select_behavior(label, GREETING, CATALOG, random.Random(0))
            assert triple.behavior_id == "Greeting/0"

    def test_single_entry_ignores_seed(self):
        for seed in range(20):
            triple = select_behavior("neutral", SELF_PRESERVATION, CATALOG, random.Random(seed))
            assert triple.behavior_id == "SelfPreservation/0"

    def test_deterministic_for_fixed_seed(self):
        picks1 = [select_behavior("annoyed", None, CATALOG, rng).behavior_id
                  for rng in [random.Random(9)] for _ in range(5)]
        rng = random.Random(9)
        picks2 = [select_behavior("annoyed", None, CATALOG, rng).behavior_id for _ in range(5)]
        assert picks1 == picks2

    def test_coverage_over_all_labels(self):
        rng = random.Random(3)
        for label in LABELS:
            triple = select_behavior(label, None, CATALOG, rng)
            assert triple.duration_ticks >= 1


class TestSelectorGating:
    def test_no_new_dispatch_while_running(self):
        sel = BehaviorSelector(CATALOG, seed=1)
        first = sel.dispatch(0, "happy", INTERACT, activation_token=1)
        assert first is not None
        # same motive, new label, still running: nothing dispatched
        assert sel.begin_tick(1) is None
        assert sel.dispatch(1, "sad", INTERACT, activation_token=1) is None

    def test_motive_switch_preempts(self):
        sel = BehaviorSelector(CATALOG, seed=1)
        sel.dispatch(0, "happy", INTERACT, activation_token=1)
        sel.begin_tick(1)
        preempting = sel.dispatch(1, "happy", SELF_PRESERVATION, activation_token=1)
        assert preempting is not None
        assert preempting.behavior_id == "SelfPreservation/0"

    def test_label_change_waits_for_completion(self):
        sel = BehaviorSelector(CATALOG, seed=1)
        first = sel.dispatch(0, "happy", None)
        duration = first.duration_ticks
        for tick in range(1, duration):
            assert sel.begin_tick(tick) is None
            assert sel.dispatch(tick, "sad", None) is None
        completed = sel.begin_tick(duration)
        assert completed == (None, first)
        follow_up = sel.dispatch(duration, "sad", None)
        assert follow_up is not None
        assert follow_up.behavior_id.startswith("sad/")

    def test_no_refire_when_nothing_changed(self):
        sel = BehaviorSelector(CATALOG, seed=1)
        first = sel.dispatch(0, "bored", None)
        tick = first.duration_ticks
        sel.begin_tick(tick)
        assert sel.dispatch(tick, "bored", None) is None

    def test_override_fires_once_per_activation(self):
        sel = BehaviorSelector(CATALOG, seed=1)
        assert sel.dispatch(0, "happy", GREETING, activation_token=1) is not None
        sel.begin_tick(1)
        # interrupted by a higher-priority motive...
        assert sel.dispatch(1, "afraid", SELF_PRESERVATION, activation_token=1) is not None
        sel.begin_tick(2)
        # ...and back: same greeting activation must not greet again
        assert sel.dispatch(2, "happy", GREETING, activation_token=1) is None
        # a new activation (new partner) may
        sel.begin_tick(3)
        assert sel.dispatch(3, "happy", GREETING, activation_token=2) is not None

    def test_command_execution_completion_reported(self):
        sel = BehaviorSelector(CATALOG, seed=1)
        triple = sel.dispatch(0, "neutral", OBEY_HUMANS, activation_token=1)
        assert triple.behavior_id == "ObeyHumans/0"
        for tick in range(1, triple.duration_ticks):
            assert sel.begin_tick(tick) is None
        motive, done = sel.begin_tick(triple.duration_ticks)
        assert motive == OBEY_HUMANS
        assert done == triple
