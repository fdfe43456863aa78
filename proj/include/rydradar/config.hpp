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

#include "rydradar/atomic_response.hpp"
#include "rydradar/radar_link.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace rydradar
{
    enum class PhaseMode
    {
        uniform,      // phi ~ U[0, 2 pi) per trial
        deterministic // phi = 2 pi f2 tau_d mod 2 pi from the row's range
    };

    struct SweepSettings
    {
        double r_min_m = 100.0;
        double r_max_m = 10000.0;
        std::size_t points = 40;
        bool log_spacing = true;
    };

    struct MonteCarloSettings
    {
        std::size_t trials = 500;
        std::uint64_t master_seed = 1;
        double target_velocity = 100.0; // m/s
        double sample_rate = 60000.0;   // Hz
        std::size_t num_samples = 2048;
        PhaseMode phase_mode = PhaseMode::uniform;
        double guard_fraction = 0.02;
        bool noiseless = false; // debug: force sigma_z = 0 for both receivers
    };

    struct OutputSettings
    {
        std::string path = "-"; // "-" is stdout
        std::string format = "csv";
    };

    struct ExperimentConfig
    {
        AtomicSystem atomic;
        RadarLink link;
        ReceiverNoise noise;
        ClassicalReceiver classical;
        SweepSettings sweep;
        MonteCarloSettings montecarlo;
        OutputSettings output;

        /// Throws ConfigError naming the offending field.
        void validate(const PhysicalConstants &k = kCodata) const;
    };

    /// Nominal Cs / 29.539 GHz operating point.
    ExperimentConfig default_config(const PhysicalConstants &k = kCodata);

    // Flat sectioned key = value document:
    //
    //   # comment
    //   [atomic]
    //   omega_p_mhz_times_2pi = 4.75
    //
    // Keys absent from the document keep their defaults. Unknown sections or keys,
    // duplicates, malformed values and failed validation raise ConfigError with
    // the line number where one applies.
    ExperimentConfig parse_config(std::string_view text, const PhysicalConstants &k = kCodata);

    /// Reads and parses a file. I/O failures raise std::ios_base::failure.
    ExperimentConfig load_config(const std::filesystem::path &path, const PhysicalConstants &k = kCodata);

    /// Renders every key with its current value in the parse_config format.
    std::string render_config(const ExperimentConfig &cfg, const PhysicalConstants &k = kCodata);

} // namespace rydradar
