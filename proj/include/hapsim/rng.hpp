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

#ifndef HAPSIM_RNG_HPP
#define HAPSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace hapsim
{
    /// Seeded random source for drop generation.
    ///
    /// The engine is std::mt19937_64, whose output sequence is fixed by the standard. The
    /// uniform and normal transforms are implemented here rather than taken from <random>
    /// distributions, whose algorithms differ between standard libraries, so a seed yields
    /// the same drop on every toolchain.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next_u64() { return engine_(); }

        // Uniform in [0, 1) with 53 bits of resolution.
        double uniform()
        {
            return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        }

        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

        bool bernoulli(double p) { return uniform() < p; }

        // Box-Muller, one variate per call (the second is discarded so the stream position
        // depends only on the number of calls).
        double normal(double mean, double stddev);

    private:
        std::mt19937_64 engine_;
    };
}

#endif
