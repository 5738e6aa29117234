"""Radio map file format."""
import numpy as np
import pytest

from errors import ParseError
from logger import Logger
from map_format import load_radio_map, parse_radio_map, save_radio_map, serialize_radio_map
from models import AccessPoint, Fingerprint, MapEntry, RadioMap
from propagation import PathLossModel
from simulator import build_radio_map
from site_model import uq_centre_preset

SMALL_MAP = """RADIOMAP v1 spacing=5.0
# roster
AP 0 02:00:00:00:00:01 UQC-1 7.625 13.0 10.75
AP 1 02:00:00:00:00:02 UQC-2 22.875 13.0 10.75
PT 0.0 0.0 -71.25 -83.10
PT 0.0 5.0 -69.80 -82.44
"""


def test_parse_small_map():
    radio_map = parse_radio_map(SMALL_MAP)
    assert radio_map.spacing == 5.0
    assert [ap.essid for ap in radio_map.roster] == ["UQC-1", "UQC-2"]
    assert len(radio_map) == 2
    assert radio_map.entries[1].pos == (0.0, 5.0)
    assert radio_map.entries[0].fp.rssi == (-71.25, -83.10)


def test_serialize_small_map_is_stable():
    assert serialize_radio_map(parse_radio_map(SMALL_MAP)) == SMALL_MAP.replace("# roster\n", "")


def test_saved_map_reloads_to_two_decimals(tmp_path):
    radio_map = build_radio_map(uq_centre_preset(), 5, PathLossModel())
    path = tmp_path / "uq.map"
    lines = []
    logger = Logger()
    logger.info = lines.append
    save_radio_map(radio_map, path, logger)
    assert any("Radio map saved to:" in line for line in lines)

    loaded = load_radio_map(path)
    assert len(loaded) == 77
    assert loaded.roster == radio_map.roster
    assert [e.pos for e in loaded.entries] == [e.pos for e in radio_map.entries]
    for got, want in zip(loaded.entries, radio_map.entries):
        assert got.fp.rssi == pytest.approx(want.fp.rssi, abs=0.005)
    assert serialize_radio_map(loaded) == path.read_text(encoding="utf-8")


def test_file_has_one_pt_line_per_grid_point():
    text = serialize_radio_map(build_radio_map(uq_centre_preset(), 5, PathLossModel()))
    assert sum(line.startswith("PT ") for line in text.splitlines()) == 77
    assert "\r" not in text


HEADER = "RADIOMAP v1 spacing=5\nAP 0 02:00:00:00:00:01 a 0 0 3\n"


@pytest.mark.parametrize("text, line", [
    ("AP 0 02:00:00:00:00:01 a 0 0 3\n", 1),
    ("RADIOMAP v2 spacing=5\n", 1),
    ("RADIOMAP v1 spacing=0\n", 1),
    (HEADER + "PT 0 0 -50 -60\n", 3),
    (HEADER + "PT 0 0\n", 3),
    (HEADER + "PT 0 0 -50\nPT 0 0 -55\n", 4),
    (HEADER + "PT 0 0 -50\nAP 1 02:00:00:00:00:02 b 0 0 3\n", 4),
    (HEADER + "AP 2 02:00:00:00:00:02 b 0 0 3\n", 3),
    (HEADER + "AP 1 02:00:00:00:00:01 b 0 0 3\n", 3),
    (HEADER + "PT 0 0 -5\n", 3),
    (HEADER + "XX 1 2\n", 3),
    (HEADER, 2),
    ("RADIOMAP v1 spacing=5\nPT 0 0\n", 2),
])
def test_malformed_maps(text, line):
    with pytest.raises(ParseError) as info:
        parse_radio_map(text)
    assert info.value.line_no == line


def test_random_maps_reload_identically():
    rng = np.random.default_rng(31)
    for _ in range(200):
        dim = int(rng.integers(1, 9))
        roster = tuple(
            AccessPoint(mac=f"02:00:00:00:01:{i:02X}", essid=f"ap-{i}", pos=tuple(rng.uniform(0, 50, 3)))
            for i in range(dim)
        )
        cells = rng.choice(400, size=int(rng.integers(1, 40)), replace=False)
        spacing = float(rng.uniform(0.5, 10))
        entries = tuple(
            MapEntry(pos=(float(c % 20) * spacing, float(c // 20) * spacing),
                     fp=Fingerprint(tuple(rng.uniform(-100, -10, dim))))
            for c in cells
        )
        radio_map = RadioMap(roster=roster, spacing=spacing, entries=entries)
        text = serialize_radio_map(radio_map)
        loaded = parse_radio_map(text)
        assert serialize_radio_map(loaded) == text
        assert loaded.roster == roster
        assert [e.pos for e in loaded.entries] == [e.pos for e in entries]
        assert loaded.fingerprints == pytest.approx(radio_map.fingerprints, abs=0.005)
