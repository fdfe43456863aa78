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

#include <catch_amalgamated.hpp>

#include "rydradar/doppler_estimation.hpp"
#include "rydradar/errors.hpp"
#include "rydradar/radar_link.hpp"
#include "rydradar/signal_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace rydradar;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    // Tone with unit amplitude at angular frequency omega (rad/sample); fs = 1 keeps
    // beat_freq = omega / 2 pi.
    SampledWaveform tone(double omega, double phase, std::size_t n, double snr, std::uint64_t seed)
    {
        const double sigma = snr > 0.0 ? 1.0 / std::sqrt(2.0 * snr) : 0.0;
        return synthesize_tone(1.0, omega / kTwoPi, phase, 1.0, n, sigma, seed);
    }

    double rmse_ratio(double omega, std::size_t n, double snr, int trials, std::uint64_t seed0)
    {
        FrequencyEstimator est(n);
        double acc = 0.0;
        for (int t = 0; t < trials; ++t)
        {
            const double phase = kTwoPi * (t * 0.6180339887498949 - std::floor(t * 0.6180339887498949));
            const SampledWaveform rec = tone(omega, phase, n, snr, seed0 + t);
            const double e = est.estimate(rec.samples).omega_hat - omega;
            acc += e * e;
        }
        return std::sqrt(acc / trials) / std::sqrt(acrb_omega(snr, n));
    }
} // namespace

TEST_CASE("noiseless tone is recovered")
{
    const SampledWaveform rec = tone(0.3, 1.0, 2048, 0.0, 0);
    const FrequencyEstimate e = estimate_frequency(rec);
    CHECK_THAT(e.omega_hat, WithinAbs(0.3, 1e-6));
    CHECK_FALSE(e.boundary_warning);
    CHECK(e.refinement_iterations <= 8);

    // Exactly on the zero-padded FFT grid.
    const double on_grid = kTwoPi * 1000.0 / (4.0 * 2048.0);
    CHECK_THAT(estimate_frequency(tone(on_grid, 0.4, 2048, 0.0, 0)).omega_hat, WithinAbs(on_grid, 1e-9));
}

TEST_CASE("noiseless accuracy over a frequency and phase grid")
{
    FrequencyEstimator est(1024);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i)
    {
        const double omega = kPi * (0.05 + 0.9 * i / 49.0);
        for (int j = 0; j < 8; ++j)
        {
            const double phase = kTwoPi * j / 8.0;
            const SampledWaveform rec = tone(omega, phase, 1024, 0.0, 0);
            worst = std::max(worst, std::abs(est.estimate(rec.samples).omega_hat - omega));
        }
    }
    INFO("worst error " << worst);
    CHECK(worst < 1e-6);
}

TEST_CASE("efficiency at 10 dB")
{
    const double ratio = rmse_ratio(0.7, 2048, 10.0, 500, 1000);
    INFO("RMSE / sqrt(ACRB) = " << ratio);
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 2.0);
}

TEST_CASE("threshold: low SNR departs from the bound, high SNR stays on it")
{
    const std::size_t n = 512;
    const double high = rmse_ratio(1.1, n, from_db(10.0), 200, 7);
    const double mid = rmse_ratio(1.1, n, from_db(-10.0), 200, 7);
    const double low = rmse_ratio(1.1, n, from_db(-25.0), 200, 7);
    INFO("ratios " << high << " " << mid << " " << low);
    CHECK(high <= 2.0);
    CHECK(low > 2.0);
    CHECK(low > mid);
}

TEST_CASE("estimate is invariant to amplitude scaling")
{
    const SampledWaveform rec = tone(0.9, 0.2, 1024, 3.0, 77);
    FrequencyEstimator est(1024);
    const double base = est.estimate(rec.samples).omega_hat;
    for (double s : {0.25, 2.0, 1024.0, std::ldexp(1.0, -40)})
    {
        std::vector<double> y = rec.samples;
        for (double &v : y)
            v *= s;
        CHECK(est.estimate(y).omega_hat == base);
    }
    for (double s : {3.7e-9, 0.3, 1.7e5})
    {
        std::vector<double> y = rec.samples;
        for (double &v : y)
            v *= s;
        CHECK_THAT(est.estimate(y).omega_hat, WithinRel(base, 1e-12));
    }
}

TEST_CASE("input errors")
{
    FrequencyEstimator est(64);
    std::vector<double> zeros(64, 0.0);
    CHECK_THROWS_AS(est.estimate(zeros), NoSignalError);
    std::vector<double> shorter(63, 1.0);
    CHECK_THROWS_AS(est.estimate(shorter), DomainError);
    std::vector<double> bad = tone(0.5, 0.0, 64, 0.0, 0).samples;
    bad[10] = std::nan("");
    CHECK_THROWS_AS(est.estimate(bad), DomainError);
    CHECK_THROWS_AS(FrequencyEstimator(4), DomainError);
}

TEST_CASE("boundary warning near the guard band")
{
    const double inside = estimate_frequency(tone(1.5, 0.3, 1024, 0.0, 0)).omega_hat;
    CHECK_THAT(inside, WithinAbs(1.5, 1e-6));
    CHECK_FALSE(estimate_frequency(tone(1.5, 0.3, 1024, 0.0, 0)).boundary_warning);
    CHECK(estimate_frequency(tone(0.01 * kPi, 0.3, 1024, 0.0, 0)).boundary_warning);
    CHECK(estimate_frequency(tone(0.995 * kPi, 0.3, 1024, 0.0, 0)).boundary_warning);
}

TEST_CASE("bounds and velocity mapping")
{
    const double fs = 60000.0, f1 = 29.539e9;
    CHECK_THAT(acrb_omega(1.0, 2048), WithinRel(1.3969841949902046e-9, 1e-13));
    CHECK_THAT(acrb_velocity(1.0, 2048, fs, f1), WithinRel(3.2803795334072408e-6, 1e-13));
    const double scale = fs * kCodata.light_speed / (4.0 * kPi * f1);
    for (double snr : {1e-3, 0.5, 17.0, 1e4})
        CHECK_THAT(acrb_velocity(snr, 777, fs, f1), WithinRel(acrb_omega(snr, 777) * scale * scale, 1e-13));
    CHECK_THAT(acrb_omega(4.0, 100), WithinRel(acrb_omega(1.0, 100) / 4.0, 1e-15));

    CHECK_THAT(velocity_to_omega(100.0, fs, f1), WithinRel(2.0636388701143576, 1e-14));
    CHECK_THAT(omega_to_velocity(velocity_to_omega(-37.5, fs, f1), fs, f1), WithinRel(-37.5, 1e-14));

    CHECK_THROWS_AS(acrb_omega(0.0, 100), DomainError);
    CHECK_THROWS_AS(acrb_omega(1.0, 1), DomainError);

    const SampledWaveform rec = synthesize_tone(1.0, 2.0 * 100.0 * f1 / kCodata.light_speed, 0.5, fs, 2048, 0.0, 0);
    CHECK_THAT(estimate_velocity(rec, f1).velocity_hat, WithinAbs(100.0, 1e-4));
}

TEST_CASE("least-squares objective derivatives")
{
    const SampledWaveform rec = tone(0.8, 1.3, 256, 5.0, 3);
    for (double w : {0.3, 0.79, 0.8, 1.9})
    {
        const double h = 1e-5;
        const ObjectiveValue c = least_squares_objective(rec.samples, w);
        const ObjectiveValue p = least_squares_objective(rec.samples, w + h);
        const ObjectiveValue m = least_squares_objective(rec.samples, w - h);
        const double slope_fd = (p.value - m.value) / (2.0 * h);
        const double curv_fd = (p.slope - m.slope) / (2.0 * h);
        const double scale_s = std::max(std::abs(c.slope), 1e-3 * std::abs(c.value) * 256);
        const double scale_c = std::max(std::abs(c.curvature), 1e-3 * std::abs(c.value) * 256 * 256);
        INFO("omega " << w);
        CHECK(std::abs(slope_fd - c.slope) < 1e-5 * scale_s);
        CHECK(std::abs(curv_fd - c.curvature) < 1e-5 * scale_c);
    }
}

TEST_CASE("fit_tone recovers amplitude and phase")
{
    const SampledWaveform rec = synthesize_tone(3.5, 0.123, 2.2, 1.0, 300, 0.0, 0);
    const ToneFit fit = fit_tone(rec.samples, kTwoPi * 0.123);
    CHECK_THAT(fit.amplitude, WithinRel(3.5, 1e-10));
    CHECK_THAT(fit.phase, WithinAbs(2.2, 1e-10));
}
