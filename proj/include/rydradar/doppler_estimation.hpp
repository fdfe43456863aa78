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

#include "rydradar/constants.hpp"
#include "rydradar/signal_synthesis.hpp"

#include <cstddef>
#include <memory>
#include <span>

namespace rydradar
{
    struct EstimatorOptions
    {
        double guard_fraction = 0.02;     // excluded fraction of (0, pi) at each edge
        std::size_t zero_pad_factor = 4;  // coarse FFT length = factor * N
        int max_refinements = 8;          // Newton iterations on the least-squares objective
        double tolerance = 1e-10;         // rad/sample
    };

    struct FrequencyEstimate
    {
        double omega_hat = 0.0;    // rad/sample, inside (0, pi)
        double velocity_hat = 0.0; // m/s, only filled by estimate_velocity
        std::size_t coarse_bin = 0;
        int refinement_iterations = 0;
        bool boundary_warning = false; // peak within one DFT bin of a guard-band edge
    };

    // Single real-tone frequency estimator:
    //  1. zero-padded FFT power spectrum, argmax inside the guard band;
    //  2. three-point quadratic interpolation of the magnitude peak;
    //  3. Newton refinement of the exact least-squares objective
    //     J(w) = y' H (H'H)^-1 H' y, H = [cos(w n), sin(w n)],
    //     which has no negative-frequency image bias.
    // Holds an FFT plan and work buffers, so one instance per thread.
    class FrequencyEstimator
    {
    public:
        explicit FrequencyEstimator(std::size_t num_samples, EstimatorOptions options = {});
        ~FrequencyEstimator();
        FrequencyEstimator(FrequencyEstimator &&) noexcept;
        FrequencyEstimator &operator=(FrequencyEstimator &&) noexcept;

        /// Throws NoSignalError on an all-zero record.
        FrequencyEstimate estimate(std::span<const double> samples);

        std::size_t num_samples() const;
        const EstimatorOptions &options() const;

    private:
        struct Impl;
        std::unique_ptr<Impl> impl_;
    };

    FrequencyEstimate estimate_frequency(const SampledWaveform &record, double guard_fraction = 0.02);

    /// estimate_frequency plus the velocity implied by the carrier frequency.
    FrequencyEstimate estimate_velocity(const SampledWaveform &record, double carrier_f1,
                                        double guard_fraction = 0.02, const PhysicalConstants &k = kCodata);

    /// Least-squares single-tone objective and its first two derivatives in omega.
    struct ObjectiveValue
    {
        double value;
        double slope;
        double curvature;
    };

    ObjectiveValue least_squares_objective(std::span<const double> samples, double omega);

    struct ToneFit
    {
        double amplitude;
        double phase; // [0, 2 pi), for y[n] = A cos(omega n + phase), n = 1..N
    };

    /// Linear least-squares amplitude and phase at a known frequency.
    ToneFit fit_tone(std::span<const double> samples, double omega);

    /// v = omega f_s c / (4 pi f1).
    double omega_to_velocity(double omega_hat, double sample_rate, double carrier_f1,
                             const PhysicalConstants &k = kCodata);

    double velocity_to_omega(double velocity, double sample_rate, double carrier_f1,
                             const PhysicalConstants &k = kCodata);

    /// 12 / (snr (N^2 - 1) N), rad^2/sample^2.
    double acrb_omega(double snr, std::size_t n);

    /// 3 f_s^2 c^2 / (4 pi^2 snr (N^2 - 1) N f1^2), (m/s)^2.
    double acrb_velocity(double snr, std::size_t n, double sample_rate, double carrier_f1,
                         const PhysicalConstants &k = kCodata);

} // namespace rydradar
