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

#include "rydradar/experiment.hpp"
#include "rydradar/doppler_estimation.hpp"
#include "rydradar/errors.hpp"
#include "rydradar/format.hpp"
#include "rydradar/random_stream.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rydradar
{
    namespace
    {
        // Stream selector appended to the seed tuple.
        constexpr std::uint64_t kNoiseStream = 0;
        constexpr std::uint64_t kPhaseStream = 1;

        double trial_phase(const ExperimentConfig &cfg, Receiver receiver, std::size_t range_index, double range_m,
                           std::size_t trial_index, const PhysicalConstants &k)
        {
            if (cfg.montecarlo.phase_mode == PhaseMode::deterministic)
            {
                const double beat = doppler_shift(cfg.montecarlo.target_velocity, cfg.link.carrier_f1, k);
                const double f2 = cfg.link.carrier_f1 - beat;
                const double cycles = f2 * round_trip_delay(range_m, k);
                double phi = kTwoPi * (cycles - std::floor(cycles));
                return phi >= kTwoPi ? 0.0 : phi;
            }
            GaussianStream stream(derive_seed({cfg.montecarlo.master_seed, static_cast<std::uint64_t>(receiver),
                                               range_index, trial_index, kPhaseStream}));
            return kTwoPi * stream.uniform();
        }

        std::string sci(double v)
        {
            std::ostringstream os;
            os << std::scientific << std::setprecision(6) << v;
            return os.str();
        }
    } // namespace

    std::vector<double> sweep_ranges(const SweepSettings &sweep)
    {
        if (!(sweep.r_min_m > 0.0 && sweep.r_min_m < sweep.r_max_m) || sweep.points < 2)
            throw DomainError("sweep_ranges: need 0 < r_min < r_max and at least 2 points");
        std::vector<double> r(sweep.points);
        const double last = static_cast<double>(sweep.points - 1);
        for (std::size_t i = 0; i < sweep.points; ++i)
        {
            const double u = static_cast<double>(i) / last;
            r[i] = sweep.log_spacing ? sweep.r_min_m * std::pow(sweep.r_max_m / sweep.r_min_m, u)
                                     : sweep.r_min_m + (sweep.r_max_m - sweep.r_min_m) * u;
        }
        r.front() = sweep.r_min_m;
        r.back() = sweep.r_max_m;
        return r;
    }

    double lo_field_amplitude(const ExperimentConfig &cfg, const PhysicalConstants &k)
    {
        return field_from_rabi(cfg.atomic.dipole_rf, cfg.atomic.omega_lo, k);
    }

    TrialModel trial_model(const ExperimentConfig &cfg, Receiver receiver, double range_m, const PhysicalConstants &k)
    {
        TrialModel m{};
        m.beat_freq = doppler_shift(cfg.montecarlo.target_velocity, cfg.link.carrier_f1, k);
        if (receiver == Receiver::quantum)
        {
            const double c_gain = optical_gain_c(cfg.atomic, k);
            m.snr = quantum_snr(cfg.link, cfg.noise, c_gain, range_m, k);
            m.echo_amplitude = echo_field_amplitude(received_power(cfg.link, range_m), cfg.link.sensor_area, k);
            m.amplitude = cfg.noise.apd_gain * cfg.noise.responsivity * c_gain * m.echo_amplitude;
            m.sigma = std::sqrt(noise_variance(cfg.noise, k));
        }
        else
        {
            // Classical receiver after conventional mixing: unit tone, noise set so
            // the per-sample SNR equals gamma_s.
            m.snr = classical_snr(cfg.link, cfg.classical, cfg.noise.bandwidth, range_m, k);
            m.amplitude = 1.0;
            m.sigma = std::sqrt(1.0 / (2.0 * m.snr));
        }
        if (cfg.montecarlo.noiseless)
            m.sigma = 0.0;
        return m;
    }

    SampledWaveform synthesize_trial(const ExperimentConfig &cfg, Receiver receiver, std::size_t range_index,
                                     double range_m, std::size_t trial_index, const PhysicalConstants &k)
    {
        const TrialModel m = trial_model(cfg, receiver, range_m, k);
        const double phi = trial_phase(cfg, receiver, range_index, range_m, trial_index, k);
        const std::uint64_t seed = derive_seed(
            {cfg.montecarlo.master_seed, static_cast<std::uint64_t>(receiver), range_index, trial_index, kNoiseStream});

        if (receiver == Receiver::quantum)
        {
            const double c_gain = optical_gain_c(cfg.atomic, k);
            // Model validity: the probe modulation must stay below its DC level.
            probe_power_waveform(cfg.atomic.probe_dc_power, c_gain, m.echo_amplitude, m.beat_freq, phi, 0.0);
            const WaveformParams params =
                make_waveform_params(cfg.noise, c_gain, lo_field_amplitude(cfg, k), m.echo_amplitude, m.beat_freq,
                                     phi, cfg.montecarlo.sample_rate, cfg.montecarlo.num_samples);
            return synthesize_apd_record(params, m.sigma, seed);
        }
        return synthesize_tone(m.amplitude, m.beat_freq, phi, cfg.montecarlo.sample_rate, cfg.montecarlo.num_samples,
                               m.sigma, seed);
    }

    SweepResult run_snr_sweep(const ExperimentConfig &cfg, const PhysicalConstants &k)
    {
        cfg.validate(k);
        const double c_gain = optical_gain_c(cfg.atomic, k);
        SweepResult out;
        for (double r : sweep_ranges(cfg.sweep))
        {
            SweepRow row;
            row.range_m = r;
            row.snr_quantum_linear = quantum_snr(cfg.link, cfg.noise, c_gain, r, k);
            row.snr_classical_linear = classical_snr(cfg.link, cfg.classical, cfg.noise.bandwidth, r, k);
            row.snr_quantum_db = to_db(row.snr_quantum_linear);
            row.snr_classical_db = to_db(row.snr_classical_linear);
            out.rows.push_back(row);
        }
        return out;
    }

    SweepResult run_rmse_sweep(const ExperimentConfig &cfg, const PhysicalConstants &k)
    {
        SweepResult out = run_snr_sweep(cfg, k);
        const auto &mc = cfg.montecarlo;
        const double v_true = mc.target_velocity;

        EstimatorOptions opts;
        opts.guard_fraction = mc.guard_fraction;
        FrequencyEstimator estimator(mc.num_samples, opts);

        std::vector<double> errors(mc.trials);
        for (std::size_t ri = 0; ri < out.rows.size(); ++ri)
        {
            SweepRow &row = out.rows[ri];
            for (Receiver rx : {Receiver::quantum, Receiver::classical})
            {
                for (std::size_t t = 0; t < mc.trials; ++t)
                {
                    const SampledWaveform rec = synthesize_trial(cfg, rx, ri, row.range_m, t, k);
                    const FrequencyEstimate est = estimator.estimate(rec.samples);
                    // The real tone only reveals |delta f|, so compare speeds.
                    const double v_hat = omega_to_velocity(est.omega_hat, mc.sample_rate, cfg.link.carrier_f1, k);
                    errors[t] = v_hat - std::abs(v_true);
                }
                const double rmse = root_mean_square(errors);
                const double snr = rx == Receiver::quantum ? row.snr_quantum_linear : row.snr_classical_linear;
                const double bound =
                    std::sqrt(acrb_velocity(snr, mc.num_samples, mc.sample_rate, cfg.link.carrier_f1, k));
                if (rx == Receiver::quantum)
                {
                    row.rmse_quantum_mps = rmse;
                    row.acrb_rms_quantum_mps = bound;
                }
                else
                {
                    row.rmse_classical_mps = rmse;
                    row.acrb_rms_classical_mps = bound;
                }
            }
            row.trials_used = mc.trials;
        }
        return out;
    }

    double root_mean_square(std::span<const double> errors)
    {
        if (errors.empty())
            throw DomainError("root_mean_square: no samples");
        double sum = 0.0;
        double carry = 0.0;
        for (double e : errors)
        {
            const double x = e * e;
            const double t = sum + x;
            if (std::abs(sum) >= std::abs(x))
                carry += (sum - t) + x;
            else
                carry += (x - t) + sum;
            sum = t;
        }
        return std::sqrt((sum + carry) / static_cast<double>(errors.size()));
    }

    void write_csv(const SweepResult &result, std::ostream &out)
    {
        const auto opt = [](const std::optional<double> &v) { return v ? shortest_decimal(*v) : std::string{}; };
        out << kCsvHeader << '\n';
        for (const SweepRow &r : result.rows)
        {
            out << shortest_decimal(r.range_m) << ',' << shortest_decimal(r.snr_quantum_db) << ','
                << shortest_decimal(r.snr_classical_db) << ',' << opt(r.rmse_quantum_mps) << ','
                << opt(r.rmse_classical_mps) << ',' << opt(r.acrb_rms_quantum_mps) << ','
                << opt(r.acrb_rms_classical_mps) << '\n';
        }
        if (!out)
            throw std::ios_base::failure("write_csv: output stream failed");
    }

    std::string compute_c_report(const ExperimentConfig &cfg, const PhysicalConstants &k)
    {
        const AtomicSystem &a = cfg.atomic;
        const OpticalGainChain chain = optical_gain_chain(a, k);
        const double mhz = kTwoPi * 1e6;
        const double ea0 = k.dipole_from_ea0(1.0);

        std::ostringstream os;
        os << "Optical gain chain for the LO-dressed Rydberg receiver\n";
        os << "Rabi convention: Omega = dipole * E / hbar (angular, rad/s)\n";
        os << "inputs:\n";
        os << "  Omega_p   = " << sci(a.omega_p) << " rad/s (2pi x " << a.omega_p / mhz << " MHz)\n";
        os << "  Omega_c   = " << sci(a.omega_c) << " rad/s (2pi x " << a.omega_c / mhz << " MHz)\n";
        os << "  Omega_LO  = " << sci(a.omega_lo) << " rad/s (2pi x " << a.omega_lo / mhz << " MHz)\n";
        os << "  gamma_2   = " << sci(a.gamma2) << " rad/s (2pi x " << a.gamma2 / mhz << " MHz)\n";
        os << "  d_12      = " << sci(a.dipole_12) << " C m (" << a.dipole_12 / ea0 << " e a0)\n";
        os << "  d_RF      = " << sci(a.dipole_rf) << " C m (" << a.dipole_rf / ea0 << " e a0)\n";
        os << "  N0        = " << sci(a.density_n0) << " m^-3\n";
        os << "  L         = " << sci(a.cell_length) << " m\n";
        os << "  lambda_p  = " << sci(a.probe_wavelength) << " m\n";
        os << "  P0_bar    = " << sci(a.probe_dc_power) << " W\n";
        os << "intermediates:\n";
        os << "  C0        = " << sci(chain.c0) << " (dimensionless, -2 N0 d12^2 / (eps0 hbar Omega_p))\n";
        os << "  A_bar     = " << sci(chain.abar) << " (dimensionless)\n";
        os << "  Gamma     = " << sci(chain.gamma_eit) << " rad/s\n";
        os << "  Lambda    = " << sci(chain.lambda) << " (dimensionless, at Omega_LO)\n";
        os << "  kappa_p   = " << sci(chain.kappa_p) << " s/rad\n";
        os << "  k_p       = " << sci(chain.wavenumber) << " rad/m\n";
        os << "  alpha     = " << sci(chain.alpha) << " (dimensionless)\n";
        os << "  kappa     = " << sci(chain.kappa) << " W s/rad\n";
        os << "  C_signed  = " << sci(chain.c_signed) << " W/(V/m)\n";
        os << "  A1 (LO)   = " << sci(lo_field_amplitude(cfg, k)) << " V/m\n";
        os << "C = " << shortest_decimal(chain.c_magnitude()) << " W/(V/m)\n";
        return os.str();
    }

    std::optional<double> departure_range(const SweepResult &result, Receiver receiver, double factor)
    {
        for (const SweepRow &r : result.rows)
        {
            const auto &rmse = receiver == Receiver::quantum ? r.rmse_quantum_mps : r.rmse_classical_mps;
            const auto &bound = receiver == Receiver::quantum ? r.acrb_rms_quantum_mps : r.acrb_rms_classical_mps;
            if (!rmse || !bound)
                throw DomainError("departure_range: sweep has no RMSE columns");
            const double ratio = *rmse / *bound;
            if (!(ratio <= factor && ratio >= 1.0 / factor))
                return r.range_m;
        }
        return std::nullopt;
    }

} // namespace rydradar
