// Copyright 2026 The hapsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HAPSIM_CONFIG_HPP
#define HAPSIM_CONFIG_HPP

#include "hapsim/scenario.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hapsim
{
    // Scenario files are `key = value` lines; `#` starts a comment. `layout` selects the
    // layout-dependent defaults (terminal count, LOS target, radius) and may appear anywhere.
    // Unknown and repeated keys are rejected. Missing keys keep their defaults.
    ScenarioConfig parse_config(std::istream &in, const std::string &source = "<stream>");
    ScenarioConfig parse_config_string(const std::string &text);
    ScenarioConfig load_config(const std::string &path);

    // Canonical form: every key once, in a fixed order, numbers in shortest round-trip form.
    std::string dump_config(const ScenarioConfig &cfg);

    // Keys accepted by parse_config, in canonical order.
    std::vector<std::string> config_keys();
}

#endif
