// SPDX-License-Identifier: Apache-2.0
//
// rydradar - Rydberg atomic receiver radar simulation toolkit
// Copyright (C) 2026 The rydradar Authors
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

#include "rydradar/random_stream.hpp"
#include "rydradar/constants.hpp"

#include <cmath>

namespace rydradar
{
    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts)
    {
        std::uint64_t h = 0x6A09E667F3BCC909ULL;
        for (std::uint64_t p : parts)
            h = splitmix64(h ^ splitmix64(p));
        return h;
    }

    double GaussianStream::uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double GaussianStream::normal()
    {
        if (spare_)
        {
            const double z = *spare_;
            spare_.reset();
            return z;
        }
        const double radius = std::sqrt(-2.0 * std::log(uniform_open_low()));
        const double angle = kTwoPi * uniform();
        spare_ = radius * std::sin(angle);
        return radius * std::cos(angle);
    }

} // namespace rydradar
