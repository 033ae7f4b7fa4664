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

#ifndef HAPSIM_ERROR_HPP
#define HAPSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hapsim
{
    // Invalid or inconsistent scenario / model parameters.
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Mathematical precondition violated (non-positive distance, empty chain, ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Coincident endpoints or other geometry that has no defined angles.
    class GeometryError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A steering target lies behind a panel.
    class CoverageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Link evaluated for a terminal that is not attached / scheduled.
    class SchedulingError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Malformed text input. Carries the 1-based line and column of the offending token.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string &what, int line, int column)
            : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
              line_(line), column_(column) {}

        int line() const { return line_; }
        int column() const { return column_; }

    private:
        int line_;
        int column_;
    };
}

#endif
