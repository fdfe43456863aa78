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

#include "rydradar/radar_link.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace rydradar
{
    // Superheterodyne readout of one echo: LO amplitude A1 and echo amplitude A2
    // at the vapor cell, the beat they produce, and the sampling of the APD current.
    struct WaveformParams
    {
        double lo_amplitude;     // A1, V/m
        double echo_amplitude;   // A2, V/m
        double beat_freq;        // delta f, Hz
        double phase;            // phi, rad in [0, 2 pi)
        double sample_rate;      // f_s, Hz
        std::size_t num_samples; // N
        double signal_amplitude; // alpha = M R C A2, A

        /// Linearization (A2 <= 0.1 A1), Nyquist, N >= 8 and phase range checks.
        void validate() const;

        /// Normalized beat frequency 2 pi delta_f / f_s in rad/sample.
        double omega() const;
    };

    /// Builds WaveformParams with alpha = M R C A2 taken from the receiver chain.
    WaveformParams make_waveform_params(const ReceiverNoise &rx, double c_gain, double lo_amplitude,
                                        double echo_amplitude, double beat_freq, double phase, double sample_rate,
                                        std::size_t num_samples);

    struct SampledWaveform
    {
        std::vector<double> samples; // y[1..N], stored 0-based
        double sample_rate = 0.0;
        std::uint64_t seed = 0;
        double beat_freq = 0.0;
        double phase = 0.0;
        double sigma_z = 0.0;
        double signal_amplitude = 0.0;

        std::size_t size() const { return samples.size(); }
    };

    /// Slow envelope sqrt(A1^2 + A2^2 + 2 A1 A2 cos(2 pi df t + phi)) of the LO + echo field.
    double beat_envelope_exact(double a1, double a2, double delta_f, double phi, double t);

    /// Strong-LO approximation A1 + A2 cos(2 pi df t + phi); requires A2 <= 0.1 A1.
    double beat_envelope_linearized(double a1, double a2, double delta_f, double phi, double t);

    /// P(t) = P0 + C A2 cos(2 pi df t + phi). Throws ModelValidityError if C A2 >= P0.
    double probe_power_waveform(double p0, double c_gain, double a2, double delta_f, double phi, double t);

    /// y[n] = amplitude cos(omega n + phi) + z[n], n = 1..N, z ~ N(0, sigma^2) i.i.d.
    SampledWaveform synthesize_tone(double amplitude, double beat_freq, double phase, double sample_rate,
                                    std::size_t num_samples, double sigma, std::uint64_t seed);

    /// APD current record for a validated superheterodyne configuration.
    SampledWaveform synthesize_apd_record(const WaveformParams &params, double sigma_z, std::uint64_t seed);

    /// Writes `n,t_seconds,y_amperes` with t = n / f_s.
    void write_waveform_csv(const SampledWaveform &record, std::ostream &out);

} // namespace rydradar
