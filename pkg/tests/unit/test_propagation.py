"""Log-distance path loss."""
import math

import pytest

from errors import InvalidInputError
from models import AccessPoint
from propagation import PathLossModel, path_loss_rssi

AP = AccessPoint(mac="02:00:00:00:00:01", essid="UQC-1", pos=(0.0, 0.0, 10.75))
FREE_SPACE = PathLossModel(p0_dbm=-40.0, d0_m=1.0, exponent=2.0, shadowing_sigma_db=0.0)


def test_reference_distance_gives_p0():
    ap = AccessPoint(mac="02:00:00:00:00:01", essid="x", pos=(0, 0, 1))
    assert path_loss_rssi(ap, (1, 0, 1), FREE_SPACE) == -40.0


def test_ten_metres_free_space():
    ap = AccessPoint(mac="02:00:00:00:00:01", essid="x", pos=(0, 0, 1))
    assert path_loss_rssi(ap, (10, 0, 1), FREE_SPACE) == pytest.approx(-60.0, abs=1e-12)


def test_ceiling_ap_over_client():
    rssi = path_loss_rssi(AP, (0.0, 0.0, 1.0), FREE_SPACE)
    assert rssi == pytest.approx(-40.0 - 20.0 * math.log10(9.75), abs=1e-12)
    assert rssi == pytest.approx(-59.78, abs=0.005)


def test_zero_distance_is_an_error():
    with pytest.raises(InvalidInputError):
        path_loss_rssi(AP, AP.pos, FREE_SPACE)


def test_result_is_clamped():
    far = PathLossModel(p0_dbm=-40.0, exponent=6.0, shadowing_sigma_db=0.0)
    assert path_loss_rssi(AP, (1000.0, 0.0, 1.0), far) == -100.0
    hot = PathLossModel(p0_dbm=0.0, exponent=2.0, shadowing_sigma_db=0.0)
    assert path_loss_rssi(AP, (0.0, 0.0, 10.0), hot) == -10.0


def test_rssi_is_non_increasing_with_distance():
    model = PathLossModel()
    previous = path_loss_rssi(AP, (0.0, 0.0, 1.0), model)
    for step in range(1, 200):
        current = path_loss_rssi(AP, (step * 0.5, 0.0, 1.0), model)
        assert current <= previous
        previous = current


@pytest.mark.parametrize("kwargs", [{"exponent": 0}, {"d0_m": 0}, {"shadowing_sigma_db": -1}])
def test_model_rejects_bad_parameters(kwargs):
    with pytest.raises(InvalidInputError):
        PathLossModel(**kwargs)


def test_with_sigma_keeps_other_parameters():
    model = PathLossModel(p0_dbm=-45.0).with_sigma(0.0)
    assert model.p0_dbm == -45.0
    assert model.shadowing_sigma_db == 0.0
