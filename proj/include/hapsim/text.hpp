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

#ifndef HAPSIM_TEXT_HPP
#define HAPSIM_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the config, table and CSV readers.
namespace hapsim::text
{
    std::string_view trim(std::string_view s);
    std::vector<std::string_view> split(std::string_view s, char sep);

    // Full-string parses; return false on trailing garbage or out-of-range values.
    bool parse_double(std::string_view s, double &out);
    bool parse_int64(std::string_view s, long long &out);
    bool parse_uint64(std::string_view s, unsigned long long &out);

    // Shortest representation that round-trips exactly (locale independent).
    std::string format_double(double v);

    // Fixed-point with `digits` decimals.
    std::string format_fixed(double v, int digits);
}

#endif
