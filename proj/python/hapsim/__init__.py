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
"""Python access to the hapsim simulator core."""

from hapsim._core import (
    ConfigError,
    CoverageError,
    DomainError,
    GeometryError,
    ParseError,
    Scenario,
    SchedulingError,
    aggregate,
    cascade_noise_figure_db,
    consumption,
    element_gain,
    feeder_loss_db,
    fspl_db,
    power_efficiency_factor,
    preset_names,
    relay_advantage,
    repeater_noise_at_ue_dbm,
    run,
    run_campaign,
    sinr_to_se,
    thermal_noise_dbm,
)

__all__ = [
    "ConfigError",
    "CoverageError",
    "DomainError",
    "GeometryError",
    "ParseError",
    "Scenario",
    "SchedulingError",
    "aggregate",
    "cascade_noise_figure_db",
    "consumption",
    "element_gain",
    "feeder_loss_db",
    "fspl_db",
    "power_efficiency_factor",
    "preset_names",
    "relay_advantage",
    "repeater_noise_at_ue_dbm",
    "run",
    "run_campaign",
    "sinr_to_se",
    "thermal_noise_dbm",
]
