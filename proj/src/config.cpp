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

#include "rydradar/config.hpp"
#include "rydradar/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

namespace rydradar
{
    namespace
    {
        constexpr double kMhzAngular = kTwoPi * 1e6;

        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        double parse_double(std::string_view text, const std::string &field, std::size_t line)
        {
            if (!text.empty() && text.front() == '+')
                text.remove_prefix(1);
            double v = 0.0;
            const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v))
                throw ConfigError(field, line, "expected a finite number, got '" + std::string(text) + "'");
            return v;
        }

        std::uint64_t parse_unsigned(std::string_view text, const std::string &field, std::size_t line)
        {
            std::uint64_t v = 0;
            const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || end != text.data() + text.size())
                throw ConfigError(field, line, "expected a non-negative integer, got '" + std::string(text) + "'");
            return v;
        }

        bool parse_bool(std::string_view text, const std::string &field, std::size_t line)
        {
            if (text == "true" || text == "1" || text == "yes")
                return true;
            if (text == "false" || text == "0" || text == "no")
                return false;
            throw ConfigError(field, line, "expected true or false, got '" + std::string(text) + "'");
        }

        std::string number(double v)
        {
            std::ostringstream os;
            os << std::setprecision(12) << v;
            return os.str();
        }

        using Setter = std::function<void(ExperimentConfig &, std::string_view, const std::string &, std::size_t)>;
        using Getter = std::function<std::string(const ExperimentConfig &)>;

        struct Binding
        {
            std::string section;
            std::string key;
            Setter set;
            Getter get;
        };

        template <typename Member>
        Binding scaled(std::string section, std::string key, Member member, double scale)
        {
            return {std::move(section), std::move(key),
                    [member, scale](ExperimentConfig &c, std::string_view t, const std::string &f, std::size_t l)
                    { member(c) = parse_double(t, f, l) * scale; },
                    [member, scale](const ExperimentConfig &c)
                    { return number(member(c) / scale); }};
        }

        template <typename Member>
        Binding decibel(std::string section, std::string key, Member member)
        {
            return {std::move(section), std::move(key),
                    [member](ExperimentConfig &c, std::string_view t, const std::string &f, std::size_t l)
                    { member(c) = from_db(parse_double(t, f, l)); },
                    [member](const ExperimentConfig &c)
                    { return number(to_db(member(c))); }};
        }

        template <typename Member>
        Binding count(std::string section, std::string key, Member member)
        {
            return {std::move(section), std::move(key),
                    [member](ExperimentConfig &c, std::string_view t, const std::string &f, std::size_t l)
                    { member(c) = static_cast<std::remove_reference_t<decltype(member(c))>>(parse_unsigned(t, f, l)); },
                    [member](const ExperimentConfig &c)
                    { return std::to_string(member(c)); }};
        }

        template <typename Member>
        Binding flag(std::string section, std::string key, Member member)
        {
            return {std::move(section), std::move(key),
                    [member](ExperimentConfig &c, std::string_view t, const std::string &f, std::size_t l)
                    { member(c) = parse_bool(t, f, l); },
                    [member](const ExperimentConfig &c)
                    { return std::string(member(c) ? "true" : "false"); }};
        }

        // Accessors are generic lambdas so one binding serves both the setter
        // (mutable config) and the getter (const config).
        std::vector<Binding> bindings(const PhysicalConstants &k)
        {
            const double ea0 = k.dipole_from_ea0(1.0);
            return {
                scaled("atomic", "gamma2_mhz_times_2pi", [](auto &c) -> auto & { return c.atomic.gamma2; }, kMhzAngular),
                scaled("atomic", "omega_p_mhz_times_2pi", [](auto &c) -> auto & { return c.atomic.omega_p; }, kMhzAngular),
                scaled("atomic", "omega_c_mhz_times_2pi", [](auto &c) -> auto & { return c.atomic.omega_c; }, kMhzAngular),
                scaled("atomic", "omega_lo_mhz_times_2pi", [](auto &c) -> auto & { return c.atomic.omega_lo; }, kMhzAngular),
                scaled("atomic", "dipole_12_ea0", [](auto &c) -> auto & { return c.atomic.dipole_12; }, ea0),
                scaled("atomic", "dipole_rf_ea0", [](auto &c) -> auto & { return c.atomic.dipole_rf; }, ea0),
                scaled("atomic", "density_per_m3", [](auto &c) -> auto & { return c.atomic.density_n0; }, 1.0),
                scaled("atomic", "cell_length_m", [](auto &c) -> auto & { return c.atomic.cell_length; }, 1.0),
                scaled("atomic", "probe_wavelength_m", [](auto &c) -> auto & { return c.atomic.probe_wavelength; }, 1.0),
                scaled("atomic", "probe_dc_power_w", [](auto &c) -> auto & { return c.atomic.probe_dc_power; }, 1.0),

                scaled("link", "transmit_power_w", [](auto &c) -> auto & { return c.link.transmit_power; }, 1.0),
                decibel("link", "transmit_gain_db", [](auto &c) -> auto & { return c.link.transmit_gain; }),
                scaled("link", "rcs_m2", [](auto &c) -> auto & { return c.link.rcs; }, 1.0),
                scaled("link", "sensor_area_m2", [](auto &c) -> auto & { return c.link.sensor_area; }, 1.0),
                scaled("link", "classical_antenna_area_m2", [](auto &c) -> auto & { return c.link.classical_antenna_area; }, 1.0),
                scaled("link", "carrier_hz", [](auto &c) -> auto & { return c.link.carrier_f1; }, 1.0),

                scaled("noise", "apd_gain", [](auto &c) -> auto & { return c.noise.apd_gain; }, 1.0),
                scaled("noise", "responsivity_a_per_w", [](auto &c) -> auto & { return c.noise.responsivity; }, 1.0),
                scaled("noise", "load_resistance_ohm", [](auto &c) -> auto & { return c.noise.load_resistance; }, 1.0),
                scaled("noise", "dc_optical_power_w", [](auto &c) -> auto & { return c.noise.dc_optical_power; }, 1.0),
                scaled("noise", "dark_current_a", [](auto &c) -> auto & { return c.noise.dark_current; }, 1.0),
                scaled("noise", "temperature_k", [](auto &c) -> auto & { return c.noise.temperature; }, 1.0),
                scaled("noise", "bandwidth_hz", [](auto &c) -> auto & { return c.noise.bandwidth; }, 1.0),

                scaled("classical", "system_temperature_k", [](auto &c) -> auto & { return c.classical.system_temperature; }, 1.0),

                scaled("sweep", "r_min_m", [](auto &c) -> auto & { return c.sweep.r_min_m; }, 1.0),
                scaled("sweep", "r_max_m", [](auto &c) -> auto & { return c.sweep.r_max_m; }, 1.0),
                count("sweep", "points", [](auto &c) -> auto & { return c.sweep.points; }),
                flag("sweep", "log_spacing", [](auto &c) -> auto & { return c.sweep.log_spacing; }),

                count("montecarlo", "trials", [](auto &c) -> auto & { return c.montecarlo.trials; }),
                count("montecarlo", "master_seed", [](auto &c) -> auto & { return c.montecarlo.master_seed; }),
                scaled("montecarlo", "target_velocity_mps", [](auto &c) -> auto & { return c.montecarlo.target_velocity; }, 1.0),
                scaled("montecarlo", "sample_rate_hz", [](auto &c) -> auto & { return c.montecarlo.sample_rate; }, 1.0),
                count("montecarlo", "num_samples", [](auto &c) -> auto & { return c.montecarlo.num_samples; }),
                {"montecarlo", "phase_mode",
                 [](ExperimentConfig &c, std::string_view t, const std::string &f, std::size_t l)
                 {
                     if (t == "uniform")
                         c.montecarlo.phase_mode = PhaseMode::uniform;
                     else if (t == "deterministic")
                         c.montecarlo.phase_mode = PhaseMode::deterministic;
                     else
                         throw ConfigError(f, l, "expected uniform or deterministic, got '" + std::string(t) + "'");
                 },
                 [](const ExperimentConfig &c)
                 { return std::string(c.montecarlo.phase_mode == PhaseMode::uniform ? "uniform" : "deterministic"); }},
                scaled("montecarlo", "guard_fraction", [](auto &c) -> auto & { return c.montecarlo.guard_fraction; }, 1.0),
                flag("montecarlo", "noiseless", [](auto &c) -> auto & { return c.montecarlo.noiseless; }),

                {"output", "path",
                 [](ExperimentConfig &c, std::string_view t, const std::string &f, std::size_t l)
                 {
                     if (t.empty())
                         throw ConfigError(f, l, "path must not be empty");
                     c.output.path = std::string(t);
                 },
                 [](const ExperimentConfig &c) { return c.output.path; }},
                {"output", "format",
                 [](ExperimentConfig &c, std::string_view t, const std::string &f, std::size_t l)
                 {
                     if (t != "csv")
                         throw ConfigError(f, l, "only the csv format is supported");
                     c.output.format = std::string(t);
                 },
                 [](const ExperimentConfig &c) { return c.output.format; }},
            };
        }

        void positive(double v, const char *field)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw ConfigError(field, 0, "must be positive");
        }
    } // namespace

    ExperimentConfig default_config(const PhysicalConstants &k)
    {
        ExperimentConfig c;
        c.atomic.gamma2 = 5.2 * kMhzAngular;
        c.atomic.omega_p = 4.75 * kMhzAngular;
        c.atomic.omega_c = 1.66 * kMhzAngular;
        c.atomic.omega_lo = 0.6 * kMhzAngular;
        c.atomic.dipole_12 = k.dipole_from_ea0(4.5);
        c.atomic.dipole_rf = k.dipole_from_ea0(551.35);
        c.atomic.density_n0 = 4.89e16;
        c.atomic.cell_length = 0.01;
        c.atomic.probe_wavelength = 852.347e-9;
        c.atomic.probe_dc_power = 10e-6;

        c.link.transmit_power = 10.0;
        c.link.transmit_gain = 10.0;
        c.link.rcs = 1.0;
        c.link.sensor_area = 1e-4;
        c.link.classical_antenna_area = 1e-4;
        c.link.carrier_f1 = 29.539e9;

        c.noise.apd_gain = 50.0;
        c.noise.responsivity = 0.6;
        c.noise.load_resistance = 1000.0;
        c.noise.dc_optical_power = 10e-6;
        c.noise.dark_current = 1e-9;
        c.noise.temperature = 300.0;
        c.noise.bandwidth = 1e6;

        c.classical.system_temperature = 1000.0;
        return c;
    }

    void ExperimentConfig::validate(const PhysicalConstants &k) const
    {
        const std::pair<double, const char *> must_be_positive[] = {
            {atomic.gamma2, "atomic.gamma2_mhz_times_2pi"},
            {atomic.omega_p, "atomic.omega_p_mhz_times_2pi"},
            {atomic.omega_lo, "atomic.omega_lo_mhz_times_2pi"},
            {atomic.dipole_12, "atomic.dipole_12_ea0"},
            {atomic.dipole_rf, "atomic.dipole_rf_ea0"},
            {atomic.density_n0, "atomic.density_per_m3"},
            {atomic.cell_length, "atomic.cell_length_m"},
            {atomic.probe_wavelength, "atomic.probe_wavelength_m"},
            {atomic.probe_dc_power, "atomic.probe_dc_power_w"},
            {link.transmit_power, "link.transmit_power_w"},
            {link.transmit_gain, "link.transmit_gain_db"},
            {link.rcs, "link.rcs_m2"},
            {link.sensor_area, "link.sensor_area_m2"},
            {link.classical_antenna_area, "link.classical_antenna_area_m2"},
            {link.carrier_f1, "link.carrier_hz"},
            {noise.apd_gain, "noise.apd_gain"},
            {noise.responsivity, "noise.responsivity_a_per_w"},
            {noise.load_resistance, "noise.load_resistance_ohm"},
            {noise.dc_optical_power, "noise.dc_optical_power_w"},
            {noise.temperature, "noise.temperature_k"},
            {noise.bandwidth, "noise.bandwidth_hz"},
            {classical.system_temperature, "classical.system_temperature_k"},
        };
        for (const auto &[v, field] : must_be_positive)
            positive(v, field);

        // Remaining module-level checks report "Type.field"; rewrap them as config errors.
        try
        {
            atomic.validate();
            link.validate();
            noise.validate();
            classical.validate();
        }
        catch (const DomainError &e)
        {
            throw ConfigError("", 0, e.what());
        }

        positive(sweep.r_min_m, "sweep.r_min_m");
        positive(sweep.r_max_m, "sweep.r_max_m");
        if (!(sweep.r_min_m < sweep.r_max_m))
            throw ConfigError("sweep.r_min_m", 0, "must be smaller than sweep.r_max_m");
        if (sweep.points < 2)
            throw ConfigError("sweep.points", 0, "at least 2 range points are required");

        if (montecarlo.trials < 1)
            throw ConfigError("montecarlo.trials", 0, "at least 1 trial is required");
        if (montecarlo.num_samples < 8)
            throw ConfigError("montecarlo.num_samples", 0, "at least 8 samples are required");
        positive(montecarlo.sample_rate, "montecarlo.sample_rate_hz");
        if (!std::isfinite(montecarlo.target_velocity) || std::abs(montecarlo.target_velocity) >= k.light_speed)
            throw ConfigError("montecarlo.target_velocity_mps", 0, "must be finite and below c");
        if (!(montecarlo.guard_fraction >= 0.0 && montecarlo.guard_fraction < 0.5))
            throw ConfigError("montecarlo.guard_fraction", 0, "must lie in [0, 0.5)");

        const double beat = std::abs(doppler_shift(montecarlo.target_velocity, link.carrier_f1, k));
        if (!(2.0 * beat < montecarlo.sample_rate))
        {
            std::ostringstream msg;
            msg << "Nyquist violated: beat frequency " << beat << " Hz needs a sample rate above " << 2.0 * beat
                << " Hz";
            throw ConfigError("montecarlo.sample_rate_hz", 0, msg.str());
        }
    }

    ExperimentConfig parse_config(std::string_view text, const PhysicalConstants &k)
    {
        ExperimentConfig cfg = default_config(k);
        const auto table = bindings(k);

        std::set<std::string> known_sections;
        for (const auto &b : table)
            known_sections.insert(b.section);

        std::map<std::string, std::size_t> lines;
        std::string section;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const auto eol = text.find('\n', pos);
            std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
            ++line_no;

            const auto hash = raw.find_first_of("#;");
            std::string_view line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
            if (line.empty())
                continue;

            if (line.front() == '[')
            {
                if (line.back() != ']')
                    throw ConfigError("", line_no, "malformed section header");
                section = std::string(trim(line.substr(1, line.size() - 2)));
                if (!known_sections.count(section))
                    throw ConfigError(section, line_no, "unknown section");
                continue;
            }

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("", line_no, "expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));
            if (section.empty())
                throw ConfigError(key, line_no, "key appears before any [section]");

            const std::string field = section + "." + key;
            const Binding *binding = nullptr;
            for (const auto &b : table)
                if (b.section == section && b.key == key)
                    binding = &b;
            if (!binding)
                throw ConfigError(field, line_no, "unknown key");
            if (value.empty())
                throw ConfigError(field, line_no, "missing value");
            if (!lines.emplace(field, line_no).second)
                throw ConfigError(field, line_no, "duplicate key");
            binding->set(cfg, value, field, line_no);
        }

        try
        {
            cfg.validate(k);
        }
        catch (const ConfigError &e)
        {
            const auto it = lines.find(e.field());
            if (e.line() != 0 || it == lines.end())
                throw;
            throw ConfigError(e.field(), it->second, e.message());
        }
        return cfg;
    }

    ExperimentConfig load_config(const std::filesystem::path &path, const PhysicalConstants &k)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::ios_base::failure("cannot open config file '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config(buf.str(), k);
    }

    std::string render_config(const ExperimentConfig &cfg, const PhysicalConstants &k)
    {
        std::ostringstream out;
        std::string section;
        for (const auto &b : bindings(k))
        {
            if (b.section != section)
            {
                if (!section.empty())
                    out << '\n';
                section = b.section;
                out << '[' << section << "]\n";
            }
            out << b.key << " = " << b.get(cfg) << '\n';
        }
        return out.str();
    }

} // namespace rydradar
