import json
import math

import pytest
from hypothesis import given, strategies as st

from affectsim.circumplex import (
    EXPECTED_TABLE_DIGEST,
    NEUTRAL,
    SectorWheel,
    build_sectors,
    default_table_path,
    load_sector_table,
    load_table,
    map_emotion,
    theta,
)
from affectsim.errors import ConfigError

WORDS = load_sector_table()[0]
WHEEL = SectorWheel(build_sectors(WORDS))


def circular_distance(a, b):
    return abs((a - b + 180.0) % 360.0 - 180.0)


def nearest_center(theta_deg):
    """Independent ownership oracle: the closest word center wins; a tie on a
    boundary goes to the counterclockwise-next center."""
    return min(
        WORDS,
        key=lambda pair: (circular_distance(theta_deg, pair[1]), (pair[1] - theta_deg) % 360.0),
    )[0]


class TestSectorGeometry:
    def test_happy_arc_endpoints(self):
        happy = next(s for s in WHEEL if s.word == "happy")
        assert happy.arc_start_deg == pytest.approx(0.5, abs=1e-9)
        assert happy.arc_end_deg == pytest.approx(16.35, abs=1e-9)

    def test_wrap_boundary_is_circular_midpoint(self):
        pleased = next(s for s in WHEEL if s.word == "pleased")
        assert pleased.arc_end_deg == pytest.approx(0.5, abs=1e-9)
        assert pleased.arc_start_deg == pytest.approx((349.0 + 353.2) / 2.0, abs=1e-9)

    def test_delighted_excited_boundary(self):
        delighted = next(s for s in WHEEL if s.word == "delighted")
        assert delighted.arc_end_deg == pytest.approx(36.75, abs=1e-9)

    def test_partition_sums_to_full_circle(self):
        assert sum(s.arc_length_deg for s in WHEEL) == pytest.approx(360.0, abs=1e-9)

    def test_sweep_hits_exactly_one_sector(self):
        for i in range(36000):
            angle = i * 0.01
            owners = [s for s in WHEEL if s.contains(angle)]
            assert len(owners) == 1, f"theta={angle} owned by {[s.word for s in owners]}"

    def test_lookup_matches_nearest_center_oracle(self):
        for i in range(0, 36000, 7):
            angle = i * 0.01
            assert WHEEL.locate(angle).word == nearest_center(angle)

    def test_centers_inside_own_arcs(self):
        for sector in WHEEL:
            assert sector.contains(sector.center_deg)

    def test_duplicate_degrees_rejected(self):
        pairs = list(WORDS)
        pairs[1] = ("delighted", pairs[0][1])
        with pytest.raises(ValueError, match="duplicate"):
            build_sectors(pairs)

    def test_order_independent(self):
        shuffled = list(reversed(WORDS))
        assert build_sectors(shuffled) == build_sectors(list(WORDS))


class TestTheta:
    @pytest.mark.parametrize(
        "v,a,expected",
        [(1.0, 0.0, 0.0), (0.0, 1.0, 90.0), (-1.0, 0.0, 180.0), (0.0, -1.0, 270.0)],
    )
    def test_axes(self, v, a, expected):
        assert theta(v, a) == pytest.approx(expected)

    def test_origin_undefined(self):
        with pytest.raises(ValueError):
            theta(0.0, 0.0)

    def test_range(self):
        for deg in range(0, 360, 5):
            v = math.cos(math.radians(deg))
            a = math.sin(math.radians(deg))
            assert 0.0 <= theta(v, a) < 360.0


def point_at(angle_deg, radius):
    return (
        radius * math.cos(math.radians(angle_deg)),
        radius * math.sin(math.radians(angle_deg)),
    )


class TestMapEmotion:
    def test_annoyance_anchor(self):
        v, a = point_at(127.52, 0.6)
        assert map_emotion(v, a, WHEEL, 0.15).label == "annoyed"

    def test_every_center_maps_to_its_word(self):
        for word, degrees in WORDS:
            v, a = point_at(degrees, 0.8)
            assert map_emotion(v, a, WHEEL, 0.15).label == word

    def test_forty_five_degrees_is_excited(self):
        v, a = point_at(45.0, 0.5)
        assert map_emotion(v, a, WHEEL, 0.15).label == "excited"

    def test_neutral_core(self):
        result = map_emotion(0.01, 0.01, WHEEL, 0.15)
        assert result.label == NEUTRAL
        assert result.radius < 0.15
        assert result.theta_deg is not None  # off-origin neutral still has an angle

    def test_origin_has_no_angle(self):
        result = map_emotion(0.0, 0.0, WHEEL, 0.15)
        assert result.label == NEUTRAL
        assert result.theta_deg is None

    def test_corner_points_outside_unit_disk_still_labeled(self):
        result = map_emotion(1.0, 1.0, WHEEL, 0.15)
        assert result.label == "excited"  # 45 degrees
        assert result.radius == pytest.approx(math.sqrt(2.0))

    @given(
        st.floats(min_value=0.0, max_value=359.99),
        st.floats(min_value=0.16, max_value=1.4),
        st.floats(min_value=0.16, max_value=1.4),
    )
    def test_label_invariant_under_radial_scaling(self, angle, r1, r2):
        v1, a1 = point_at(angle, r1)
        v2, a2 = point_at(angle, r2)
        label1 = map_emotion(v1, a1, WHEEL, 0.15).label
        label2 = map_emotion(v2, a2, WHEEL, 0.15).label
        assert label1 == label2

    def test_angle_representation_invariance(self):
        for sector in WHEEL:
            assert sector.contains(sector.center_deg + 360.0)
            assert sector.contains(sector.center_deg - 360.0)

    def test_membership_peaks_at_center(self):
        happy = next(s for s in WHEEL if s.word == "happy")
        v, a = point_at(happy.center_deg, 0.9)
        assert map_emotion(v, a, WHEEL, 0.15).membership == pytest.approx(1.0, abs=1e-6)
        v, a = point_at(happy.arc_start_deg + 1e-6, 0.9)
        assert map_emotion(v, a, WHEEL, 0.15).membership == pytest.approx(0.0, abs=1e-3)


class TestTableFile:
    def test_packaged_table_digest(self):
        _, version, digest = load_sector_table()
        assert digest == EXPECTED_TABLE_DIGEST
        assert version == "1.0"

    def test_word_count(self):
        assert len(WORDS) == 28

    def test_tampered_table_rejected(self, tmp_path):
        raw = json.loads(default_table_path().read_text())
        raw["words"][0]["degrees"] = 9.9
        path = tmp_path / "words.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ConfigError, match="digest"):
            load_sector_table(path)

    def test_tampered_table_allowed_with_override(self, tmp_path):
        raw = json.loads(default_table_path().read_text())
        raw["words"][0]["degrees"] = 9.9
        path = tmp_path / "words.json"
        path.write_text(json.dumps(raw))
        pairs, _, digest = load_sector_table(path, allow_mismatch=True)
        assert digest != EXPECTED_TABLE_DIGEST
        assert ("happy", 9.9) in pairs

    def test_wrong_word_count_rejected(self, tmp_path):
        raw = json.loads(default_table_path().read_text())
        raw["words"] = raw["words"][:27]
        path = tmp_path / "words.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ConfigError, match="28"):
            load_sector_table(path, allow_mismatch=True)

    def test_load_table_bundles_wheel(self):
        table = load_table()
        assert len(table.wheel) == 28
        assert table.digest == EXPECTED_TABLE_DIGEST
