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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>

namespace rydradar
{
    /// SplitMix64 finalizer.
    std::uint64_t splitmix64(std::uint64_t x);

    /// Folds an ordered tuple of identifiers into one 64-bit seed, e.g.
    /// (master_seed, receiver_id, range_index, trial_index). Order matters.
    std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

    // Reproducible stream of uniform and standard normal deviates. The engine is
    // std::mt19937_64, whose output sequence is fixed by the standard; uniforms
    // take the top 53 bits and normals use the Box-Muller transform, so a seed
    // yields the same numbers on every conforming platform.
    class GaussianStream
    {
    public:
        explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

        /// Uniform on [0, 1).
        double uniform();

        /// Uniform on (0, 1].
        double uniform_open_low() { return 1.0 - uniform(); }

        double normal();

    private:
        std::mt19937_64 engine_;
        std::optional<double> spare_;
    };

} // namespace rydradar
