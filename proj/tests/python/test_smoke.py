# Copyright 2026 The hapsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import hapsim


def test_fspl_matches_closed_form():
    d, f = 46519.35, 3.65e9
    expected = 20 * math.log10(4 * math.pi * d * f / 299792458.0)
    assert hapsim.fspl_db(f, d) == pytest.approx(expected, abs=1e-9)


def test_feeder_loss_center():
    assert hapsim.feeder_loss_db((0, 0, 20000), (45000, 0, 0)) == pytest.approx(137.54075794039568, abs=1e-9)


def test_cascade_and_noise():
    nf = hapsim.cascade_noise_figure_db([(20.0, 1.0), (0.0, 10.0)])
    expected = 10 * math.log10(10 ** 0.1 + (10 - 1) / 100)
    assert nf == pytest.approx(expected, abs=1e-12)
    assert hapsim.thermal_noise_dbm(1e6) == pytest.approx(-114.0, abs=1e-9)


def test_link_abstraction():
    assert hapsim.sinr_to_se(-20.0) == 0.0
    assert hapsim.sinr_to_se(60.0) == 4.4
    assert hapsim.sinr_to_se(60.0, attenuation=0.4, se_max=2.0) == 2.0


def test_aggregate_counts_outages():
    stats = hapsim.aggregate([0.0, 1.0, 2.0, 3.0])
    assert stats["mean_se"] == pytest.approx(1.5)
    assert stats["cell_edge_se"] == 0.0
    assert stats["outage_count"] == 1


def test_power_efficiency_single_stage():
    assert hapsim.power_efficiency_factor([(1000.0, 0.4)]) == 0.4
    assert hapsim.power_efficiency_factor([(10.0, 0.5), (1.0, 0.5)]) == pytest.approx(0.47619047619047616)


def test_scenario_round_trip():
    s = hapsim.Scenario.from_preset("single-cell-rg")
    again = hapsim.Scenario.from_text(s.to_text())
    assert again.to_text() == s.to_text()
    assert again.architecture == "rg"


def test_bad_config_raises():
    with pytest.raises(hapsim.ConfigError):
        hapsim.Scenario.from_text("terminal_count = -1\n")
    with pytest.raises(hapsim.ConfigError):
        hapsim.Scenario.from_preset("nope")


def test_campaign_is_deterministic():
    s = hapsim.Scenario.from_preset("single-cell-bp")
    s.threads = 2
    a = hapsim.run_campaign(s)
    s.threads = 1
    b = hapsim.run_campaign(s)
    assert a == b
    assert len(a["users"]) == 20
    assert 0.0 < a["dl"]["mean_se"] <= 4.4


def test_run_writes_files(tmp_path):
    out = hapsim.run(hapsim.Scenario.from_preset("single-cell-rg"), str(tmp_path))
    for path in out["files"].values():
        assert (tmp_path / path.split("/")[-1]).exists()


def test_consumption_rows():
    res = hapsim.consumption(hapsim.Scenario.from_preset("single-cell-bp"))
    # mixer {1, 0.5} then amplifier {1000, 0.4}: 0.5 / (1 + 0.5 * 1.5)
    assert res["h_relay"] == pytest.approx(0.5 / 1.75)
    assert res["rows"]
    assert all(r["verdict"] in ("relay_preferred", "direct_preferred") for r in res["rows"])
