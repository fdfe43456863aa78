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

#include "rydradar/config.hpp"
#include "rydradar/signal_synthesis.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rydradar
{
    enum class Receiver : std::uint64_t
    {
        quantum = 0,
        classical = 1
    };

    struct SweepRow
    {
        double range_m = 0.0;
        double snr_quantum_linear = 0.0;
        double snr_quantum_db = 0.0;
        double snr_classical_linear = 0.0;
        double snr_classical_db = 0.0;
        std::optional<double> rmse_quantum_mps;
        std::optional<double> rmse_classical_mps;
        std::optional<double> acrb_rms_quantum_mps;
        std::optional<double> acrb_rms_classical_mps;
        std::size_t trials_used = 0;
    };

    struct SweepResult
    {
        std::vector<SweepRow> rows;
    };

    inline constexpr const char *kCsvHeader =
        "range_m,snr_quantum_db,snr_classical_db,rmse_quantum_mps,rmse_classical_mps,"
        "acrb_rms_quantum_mps,acrb_rms_classical_mps";

    /// Strictly increasing range grid, log or linear, endpoints included.
    std::vector<double> sweep_ranges(const SweepSettings &sweep);

    /// LO field amplitude A1 at the cell implied by the configured LO Rabi frequency.
    double lo_field_amplitude(const ExperimentConfig &cfg, const PhysicalConstants &k = kCodata);

    /// Noise-free trial setup for one receiver at one range.
    struct TrialModel
    {
        double snr;          // per-sample SNR gamma
        double amplitude;    // alpha (A) for the quantum receiver, 1 for the classical one
        double sigma;        // noise standard deviation
        double beat_freq;    // Hz
        double echo_amplitude; // A2 at the cell, V/m (quantum only)
    };

    TrialModel trial_model(const ExperimentConfig &cfg, Receiver receiver, double range_m,
                           const PhysicalConstants &k = kCodata);

    /// Seeded record for (receiver, range index, trial index). Noise stream and
    /// phase stream derive from (master_seed, receiver, range_index, trial_index).
    SampledWaveform synthesize_trial(const ExperimentConfig &cfg, Receiver receiver, std::size_t range_index,
                                     double range_m, std::size_t trial_index, const PhysicalConstants &k = kCodata);

    SweepResult run_snr_sweep(const ExperimentConfig &cfg, const PhysicalConstants &k = kCodata);

    SweepResult run_rmse_sweep(const ExperimentConfig &cfg, const PhysicalConstants &k = kCodata);

    /// sqrt(mean(x^2)) with Neumaier-compensated accumulation.
    double root_mean_square(std::span<const double> errors);

    void write_csv(const SweepResult &result, std::ostream &out);

    /// Multi-line report of every intermediate of the optical gain chain; the
    /// last line carries C.
    std::string compute_c_report(const ExperimentConfig &cfg, const PhysicalConstants &k = kCodata);

    /// First range at which RMSE / sqrt(ACRB) leaves [1/factor, factor]; empty if
    /// every row tracks the bound. Requires RMSE columns.
    std::optional<double> departure_range(const SweepResult &result, Receiver receiver, double factor = 2.0);

} // namespace rydradar
