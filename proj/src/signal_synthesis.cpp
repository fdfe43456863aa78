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

#include "rydradar/signal_synthesis.hpp"
#include "rydradar/errors.hpp"
#include "rydradar/format.hpp"
#include "rydradar/random_stream.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace rydradar
{
    using detail::require;

    namespace
    {
        constexpr double kLinearizationLimit = 0.1;
        constexpr std::size_t kMinSamples = 8;

        void check_sampling(double beat_freq, double phase, double sample_rate, std::size_t num_samples)
        {
            require(sample_rate > 0.0, "sample rate must be > 0");
            require(std::isfinite(beat_freq), "beat frequency must be finite");
            require(sample_rate > 2.0 * std::abs(beat_freq), "Nyquist violated: f_s must exceed 2 |delta f|");
            require(num_samples >= kMinSamples, "at least 8 samples are required");
            require(phase >= 0.0 && phase < kTwoPi, "phase must lie in [0, 2 pi)");
        }
    } // namespace

    void WaveformParams::validate() const
    {
        require(lo_amplitude > 0.0, "WaveformParams: LO amplitude must be > 0");
        require(echo_amplitude >= 0.0, "WaveformParams: echo amplitude must be >= 0");
        if (echo_amplitude > kLinearizationLimit * lo_amplitude)
            throw ModelValidityError("WaveformParams: echo amplitude exceeds 0.1 x LO amplitude");
        require(signal_amplitude >= 0.0, "WaveformParams: signal amplitude must be >= 0");
        check_sampling(beat_freq, phase, sample_rate, num_samples);
    }

    double WaveformParams::omega() const { return kTwoPi * beat_freq / sample_rate; }

    WaveformParams make_waveform_params(const ReceiverNoise &rx, double c_gain, double lo_amplitude,
                                        double echo_amplitude, double beat_freq, double phase, double sample_rate,
                                        std::size_t num_samples)
    {
        WaveformParams p{lo_amplitude, echo_amplitude, beat_freq, phase, sample_rate, num_samples,
                         rx.apd_gain * rx.responsivity * c_gain * echo_amplitude};
        p.validate();
        return p;
    }

    double beat_envelope_exact(double a1, double a2, double delta_f, double phi, double t)
    {
        require(a1 >= 0.0 && a2 >= 0.0, "beat_envelope_exact: amplitudes must be >= 0");
        const double arg = a1 * a1 + a2 * a2 + 2.0 * a1 * a2 * std::cos(kTwoPi * delta_f * t + phi);
        // Cancellation can push the argument a few ulps below zero when A1 == A2.
        return std::sqrt(std::max(arg, 0.0));
    }

    double beat_envelope_linearized(double a1, double a2, double delta_f, double phi, double t)
    {
        require(a1 > 0.0 && a2 >= 0.0, "beat_envelope_linearized: amplitudes must be positive");
        if (a2 > kLinearizationLimit * a1)
            throw ModelValidityError("beat_envelope_linearized: requires A2 <= 0.1 A1");
        return a1 + a2 * std::cos(kTwoPi * delta_f * t + phi);
    }

    double probe_power_waveform(double p0, double c_gain, double a2, double delta_f, double phi, double t)
    {
        require(p0 > 0.0, "probe_power_waveform: DC power must be > 0");
        require(c_gain >= 0.0 && a2 >= 0.0, "probe_power_waveform: gain and amplitude must be >= 0");
        if (c_gain * a2 >= p0)
            throw ModelValidityError("probe_power_waveform: modulation depth C A2 reaches the DC power");
        return p0 + c_gain * a2 * std::cos(kTwoPi * delta_f * t + phi);
    }

    SampledWaveform synthesize_tone(double amplitude, double beat_freq, double phase, double sample_rate,
                                    std::size_t num_samples, double sigma, std::uint64_t seed)
    {
        check_sampling(beat_freq, phase, sample_rate, num_samples);
        require(sigma >= 0.0 && std::isfinite(sigma), "synthesize: noise standard deviation must be >= 0");
        require(std::isfinite(amplitude), "synthesize: amplitude must be finite");

        SampledWaveform rec;
        rec.sample_rate = sample_rate;
        rec.seed = seed;
        rec.beat_freq = beat_freq;
        rec.phase = phase;
        rec.sigma_z = sigma;
        rec.signal_amplitude = amplitude;
        rec.samples.resize(num_samples);

        const double omega = kTwoPi * beat_freq / sample_rate;
        GaussianStream noise(seed);
        for (std::size_t i = 0; i < num_samples; ++i)
        {
            const double n = static_cast<double>(i + 1);
            double y = amplitude * std::cos(omega * n + phase);
            if (sigma > 0.0)
                y += sigma * noise.normal();
            rec.samples[i] = y;
        }
        return rec;
    }

    SampledWaveform synthesize_apd_record(const WaveformParams &params, double sigma_z, std::uint64_t seed)
    {
        params.validate();
        return synthesize_tone(params.signal_amplitude, params.beat_freq, params.phase, params.sample_rate,
                               params.num_samples, sigma_z, seed);
    }

    void write_waveform_csv(const SampledWaveform &record, std::ostream &out)
    {
        out << "n,t_seconds,y_amperes\n";
        for (std::size_t i = 0; i < record.samples.size(); ++i)
        {
            const std::size_t n = i + 1;
            out << n << ',' << shortest_decimal(static_cast<double>(n) / record.sample_rate) << ','
                << shortest_decimal(record.samples[i]) << '\n';
        }
    }

} // namespace rydradar
