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

#include "rydradar/doppler_estimation.hpp"
#include "rydradar/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <vector>

namespace rydradar
{
    using detail::require;

    namespace
    {
        // FFTW planning is not thread-safe; execution on distinct plans is.
        std::mutex &planner_mutex()
        {
            static std::mutex m;
            return m;
        }

        struct Mat2
        {
            double a, b, c, d; // [[a, b], [c, d]]

            Mat2 operator*(const Mat2 &o) const
            {
                return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
            }
            Mat2 operator-(const Mat2 &o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
            Mat2 scaled(double s) const { return {a * s, b * s, c * s, d * s}; }
        };

        struct Vec2
        {
            double x, y;
        };

        double form(const Vec2 &u, const Mat2 &m, const Vec2 &v)
        {
            return u.x * (m.a * v.x + m.b * v.y) + u.y * (m.c * v.x + m.d * v.y);
        }

        // cos/sin of omega * m for m = m0, m0 + 1, ... by complex rotation,
        // re-seeded from libm every kResync steps to bound drift.
        class Rotor
        {
        public:
            Rotor(double omega, double m0) : omega_(omega), m_(m0), step_(std::polar(1.0, omega)) { reseed(); }

            std::complex<double> value() const { return z_; }

            void advance()
            {
                m_ += 1.0;
                if (++count_ == kResync)
                {
                    count_ = 0;
                    reseed();
                }
                else
                {
                    z_ *= step_;
                }
            }

        private:
            static constexpr int kResync = 64;

            void reseed() { z_ = std::polar(1.0, omega_ * m_); }

            double omega_;
            double m_;
            std::complex<double> step_;
            std::complex<double> z_;
            int count_ = 0;
        };

        double wrap_phase(double phi)
        {
            phi = std::fmod(phi, kTwoPi);
            if (phi < 0.0)
                phi += kTwoPi;
            if (phi >= kTwoPi)
                phi = 0.0;
            return phi;
        }
    } // namespace

    ObjectiveValue least_squares_objective(std::span<const double> samples, double omega)
    {
        const std::size_t n = samples.size();
        require(n >= 2, "least_squares_objective: need at least two samples");

        // Centered time index keeps the derivative sums well scaled; the
        // objective is invariant to the shift.
        const double center = 0.5 * static_cast<double>(n + 1);
        Rotor once(omega, 1.0 - center);
        Rotor twice(2.0 * omega, 1.0 - center);

        double yc0 = 0, ys0 = 0, yc1 = 0, ys1 = 0, yc2 = 0, ys2 = 0;
        double c20 = 0, s20 = 0, c21 = 0, s21 = 0, c22 = 0, s22 = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double m = static_cast<double>(i + 1) - center;
            const double m2 = m * m;
            const std::complex<double> z1 = once.value();
            const std::complex<double> z2 = twice.value();
            const double yc = samples[i] * z1.real();
            const double ys = samples[i] * z1.imag();
            yc0 += yc;
            ys0 += ys;
            yc1 += m * yc;
            ys1 += m * ys;
            yc2 += m2 * yc;
            ys2 += m2 * ys;
            c20 += z2.real();
            s20 += z2.imag();
            c21 += m * z2.real();
            s21 += m * z2.imag();
            c22 += m2 * z2.real();
            s22 += m2 * z2.imag();
            once.advance();
            twice.advance();
        }

        const double nd = static_cast<double>(n);
        const Mat2 gram{0.5 * (nd + c20), 0.5 * s20, 0.5 * s20, 0.5 * (nd - c20)};
        const Mat2 dgram{-s21, c21, c21, s21};
        const Mat2 ddgram{-2.0 * c22, -2.0 * s22, -2.0 * s22, 2.0 * c22};

        const double det = gram.a * gram.d - gram.b * gram.c;
        require(det > 0.0, "least_squares_objective: singular basis (omega at 0 or pi)");
        const Mat2 k = Mat2{gram.d, -gram.b, -gram.c, gram.a}.scaled(1.0 / det);
        const Mat2 kdk = k * dgram * k;
        const Mat2 dk = kdk.scaled(-1.0);
        const Mat2 ddk = (kdk * dgram * k).scaled(2.0) - k * ddgram * k;

        const Vec2 b{yc0, ys0};
        const Vec2 db{-ys1, yc1};
        const Vec2 ddb{-yc2, -ys2};

        ObjectiveValue out{};
        out.value = form(b, k, b);
        out.slope = 2.0 * form(db, k, b) + form(b, dk, b);
        out.curvature = 2.0 * form(ddb, k, b) + 2.0 * form(db, k, db) + 4.0 * form(db, dk, b) + form(b, ddk, b);
        return out;
    }

    ToneFit fit_tone(std::span<const double> samples, double omega)
    {
        require(samples.size() >= 2, "fit_tone: need at least two samples");
        double cc = 0, ss = 0, cs = 0, yc = 0, ys = 0;
        for (std::size_t i = 0; i < samples.size(); ++i)
        {
            const double arg = omega * static_cast<double>(i + 1);
            const double c = std::cos(arg);
            const double s = std::sin(arg);
            cc += c * c;
            ss += s * s;
            cs += c * s;
            yc += samples[i] * c;
            ys += samples[i] * s;
        }
        const double det = cc * ss - cs * cs;
        require(det > 0.0, "fit_tone: singular basis (omega at 0 or pi)");
        const double a_cos = (ss * yc - cs * ys) / det;
        const double a_sin = (cc * ys - cs * yc) / det;
        // a_cos cos + a_sin sin = A cos(w n + phi) with A cos(phi) = a_cos, A sin(phi) = -a_sin
        return {std::hypot(a_cos, a_sin), wrap_phase(std::atan2(-a_sin, a_cos))};
    }

    struct FrequencyEstimator::Impl
    {
        std::size_t n;
        std::size_t padded;
        EstimatorOptions options;
        double *in = nullptr;
        fftw_complex *out = nullptr;
        fftw_plan plan = nullptr;

        Impl(std::size_t num_samples, EstimatorOptions opts) : n(num_samples), options(opts)
        {
            require(num_samples >= 8, "FrequencyEstimator: at least 8 samples are required");
            require(opts.guard_fraction >= 0.0 && opts.guard_fraction < 0.5,
                    "FrequencyEstimator: guard fraction must lie in [0, 0.5)");
            require(opts.zero_pad_factor >= 1, "FrequencyEstimator: zero-pad factor must be >= 1");
            require(opts.max_refinements >= 0, "FrequencyEstimator: refinement count must be >= 0");
            require(opts.tolerance > 0.0, "FrequencyEstimator: tolerance must be > 0");
            padded = n * opts.zero_pad_factor;

            std::lock_guard lock(planner_mutex());
            in = fftw_alloc_real(padded);
            out = fftw_alloc_complex(padded / 2 + 1);
            plan = fftw_plan_dft_r2c_1d(static_cast<int>(padded), in, out, FFTW_ESTIMATE);
            if (!plan || !in || !out)
            {
                release();
                throw std::runtime_error("FrequencyEstimator: FFT plan creation failed");
            }
        }

        ~Impl() { release(); }

        void release()
        {
            std::lock_guard lock(planner_mutex());
            if (plan)
                fftw_destroy_plan(plan);
            fftw_free(in);
            fftw_free(out);
            plan = nullptr;
            in = nullptr;
            out = nullptr;
        }

        double magnitude(std::size_t k) const { return std::hypot(out[k][0], out[k][1]); }
    };

    FrequencyEstimator::FrequencyEstimator(std::size_t num_samples, EstimatorOptions options)
        : impl_(std::make_unique<Impl>(num_samples, options)) {}

    FrequencyEstimator::~FrequencyEstimator() = default;
    FrequencyEstimator::FrequencyEstimator(FrequencyEstimator &&) noexcept = default;
    FrequencyEstimator &FrequencyEstimator::operator=(FrequencyEstimator &&) noexcept = default;

    std::size_t FrequencyEstimator::num_samples() const { return impl_->n; }
    const EstimatorOptions &FrequencyEstimator::options() const { return impl_->options; }

    FrequencyEstimate FrequencyEstimator::estimate(std::span<const double> samples)
    {
        Impl &s = *impl_;
        if (samples.size() != s.n)
            throw DomainError("FrequencyEstimator: record length does not match the planned length");

        bool any_signal = false;
        for (double v : samples)
        {
            require(std::isfinite(v), "FrequencyEstimator: record contains non-finite samples");
            any_signal = any_signal || v != 0.0;
        }
        if (!any_signal)
            throw NoSignalError("FrequencyEstimator: record is identically zero");

        std::copy(samples.begin(), samples.end(), s.in);
        std::fill(s.in + s.n, s.in + s.padded, 0.0);
        fftw_execute(s.plan);

        // Bins strictly inside (g pi, (1 - g) pi); bin k sits at 2 pi k / padded.
        const double half = 0.5 * static_cast<double>(s.padded);
        const double g = s.options.guard_fraction;
        std::size_t k_lo = static_cast<std::size_t>(std::floor(g * half)) + 1;
        std::size_t k_hi = static_cast<std::size_t>(std::ceil((1.0 - g) * half)) - 1;
        k_lo = std::max<std::size_t>(k_lo, 1);
        k_hi = std::min(k_hi, s.padded / 2 - 1);
        require(k_lo <= k_hi, "FrequencyEstimator: guard band leaves no bins");

        std::size_t peak = k_lo;
        double peak_mag = s.magnitude(k_lo);
        for (std::size_t k = k_lo + 1; k <= k_hi; ++k)
        {
            const double m = s.magnitude(k);
            if (m > peak_mag)
            {
                peak_mag = m;
                peak = k;
            }
        }

        FrequencyEstimate est;
        est.coarse_bin = peak;
        // Within one unpadded DFT bin of a guard edge: the in-band maximum may be
        // a sidelobe of a tone that lies inside the guard band.
        const std::size_t edge = s.options.zero_pad_factor;
        est.boundary_warning = peak < k_lo + edge || peak + edge > k_hi;

        const double bin = kTwoPi / static_cast<double>(s.padded);
        double offset = 0.0;
        {
            const double left = s.magnitude(peak - 1);
            const double right = s.magnitude(peak + 1);
            const double denom = left - 2.0 * peak_mag + right;
            if (denom < 0.0)
                offset = std::clamp(0.5 * (left - right) / denom, -0.5, 0.5);
        }

        const double band_lo = std::max(g * kPi, bin);
        const double band_hi = std::min((1.0 - g) * kPi, kPi - bin);
        double omega = std::clamp((static_cast<double>(peak) + offset) * bin, band_lo, band_hi);

        ObjectiveValue current = least_squares_objective(samples, omega);
        for (int it = 0; it < s.options.max_refinements; ++it)
        {
            double step;
            if (current.curvature < 0.0)
                step = -current.slope / current.curvature;
            else
                step = std::copysign(0.25 * bin, current.slope);
            step = std::clamp(step, -bin, bin);

            // Backtrack while a step larger than the tolerance goes downhill.
            double candidate = std::clamp(omega + step, band_lo, band_hi);
            ObjectiveValue next = least_squares_objective(samples, candidate);
            while (next.value < current.value && std::abs(step) > s.options.tolerance)
            {
                step *= 0.5;
                candidate = std::clamp(omega + step, band_lo, band_hi);
                next = least_squares_objective(samples, candidate);
            }

            ++est.refinement_iterations;
            const double moved = std::abs(candidate - omega);
            omega = candidate;
            current = next;
            if (moved < s.options.tolerance)
                break;
        }

        est.omega_hat = omega;
        est.boundary_warning = est.boundary_warning || omega == band_lo || omega == band_hi;
        return est;
    }

    FrequencyEstimate estimate_frequency(const SampledWaveform &record, double guard_fraction)
    {
        EstimatorOptions opts;
        opts.guard_fraction = guard_fraction;
        FrequencyEstimator estimator(record.size(), opts);
        return estimator.estimate(record.samples);
    }

    FrequencyEstimate estimate_velocity(const SampledWaveform &record, double carrier_f1, double guard_fraction,
                                        const PhysicalConstants &k)
    {
        FrequencyEstimate est = estimate_frequency(record, guard_fraction);
        est.velocity_hat = omega_to_velocity(est.omega_hat, record.sample_rate, carrier_f1, k);
        return est;
    }

    double omega_to_velocity(double omega_hat, double sample_rate, double carrier_f1, const PhysicalConstants &k)
    {
        require(std::isfinite(omega_hat), "omega_to_velocity: omega must be finite");
        require(sample_rate > 0.0 && carrier_f1 > 0.0, "omega_to_velocity: rates must be > 0");
        return omega_hat * sample_rate * k.light_speed / (4.0 * kPi * carrier_f1);
    }

    double velocity_to_omega(double velocity, double sample_rate, double carrier_f1, const PhysicalConstants &k)
    {
        require(sample_rate > 0.0 && carrier_f1 > 0.0, "velocity_to_omega: rates must be > 0");
        return 4.0 * kPi * carrier_f1 * velocity / (sample_rate * k.light_speed);
    }

    double acrb_omega(double snr, std::size_t n)
    {
        require(snr > 0.0, "acrb_omega: SNR must be > 0");
        require(n >= 2, "acrb_omega: need at least two samples");
        const double nd = static_cast<double>(n);
        return 12.0 / (snr * (nd * nd - 1.0) * nd);
    }

    double acrb_velocity(double snr, std::size_t n, double sample_rate, double carrier_f1,
                         const PhysicalConstants &k)
    {
        require(snr > 0.0, "acrb_velocity: SNR must be > 0");
        require(n >= 2, "acrb_velocity: need at least two samples");
        require(sample_rate > 0.0 && carrier_f1 > 0.0, "acrb_velocity: rates must be > 0");
        const double nd = static_cast<double>(n);
        const double fc = sample_rate * k.light_speed;
        return 3.0 * fc * fc / (4.0 * kPi * kPi * snr * (nd * nd - 1.0) * nd * carrier_f1 * carrier_f1);
    }

} // namespace rydradar
