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

#include "rydradar/config.hpp"
#include "rydradar/errors.hpp"

#include <filesystem>
#include <fstream>
#include <ios>
#include <string>

using namespace rydradar;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace
{
    ConfigError parse_error(const std::string &text)
    {
        try
        {
            parse_config(text);
        }
        catch (const ConfigError &e)
        {
            return e;
        }
        FAIL("expected a ConfigError for:\n" << text);
        return ConfigError("", 0, "");
    }
} // namespace

TEST_CASE("empty and comment-only documents give the defaults")
{
    const std::string reference = render_config(default_config());
    CHECK(render_config(parse_config("")) == reference);
    CHECK(render_config(parse_config("# nothing\n\n; still nothing\n[link]\n")) == reference);

    const ExperimentConfig d = default_config();
    CHECK(d.montecarlo.trials == 500);
    CHECK(d.sweep.points == 40);
    CHECK(d.montecarlo.num_samples == 2048);
    CHECK(d.montecarlo.sample_rate == 60000.0);
    CHECK(d.link.carrier_f1 == 29.539e9);
    CHECK_NOTHROW(d.validate());
}

TEST_CASE("values are parsed with their units")
{
    const ExperimentConfig c = parse_config("[link]\n"
                                            "transmit_power_w = 2.5\n"
                                            "transmit_gain_db = 20   # x100\n"
                                            "[atomic]\n"
                                            "omega_lo_mhz_times_2pi = 1.0\n"
                                            "dipole_12_ea0 = 2.5\n"
                                            "[montecarlo]\n"
                                            "trials = 17\n"
                                            "phase_mode = deterministic\n"
                                            "noiseless = true\n"
                                            "[sweep]\n"
                                            "log_spacing = false\n");
    CHECK(c.link.transmit_power == 2.5);
    CHECK_THAT(c.link.transmit_gain, WithinRel(100.0, 1e-14));
    CHECK_THAT(c.atomic.omega_lo, WithinRel(kTwoPi * 1e6, 1e-15));
    CHECK_THAT(c.atomic.dipole_12, WithinRel(2.5 * kCodata.electron_charge * kCodata.bohr_radius, 1e-15));
    CHECK(c.montecarlo.trials == 17);
    CHECK(c.montecarlo.phase_mode == PhaseMode::deterministic);
    CHECK(c.montecarlo.noiseless);
    CHECK_FALSE(c.sweep.log_spacing);
}

TEST_CASE("invalid values name the offending key")
{
    const ConfigError e = parse_error("[link]\ntransmit_power_w = -1\n");
    CHECK(e.field() == "link.transmit_power_w");
    CHECK(e.line() == 2);
    CHECK_THAT(std::string(e.what()), ContainsSubstring("link.transmit_power_w"));

    const ConfigError n = parse_error("[noise]\nbandwidth_hz = abc\n");
    CHECK(n.field() == "noise.bandwidth_hz");
    CHECK(n.line() == 2);

    CHECK(parse_error("[montecarlo]\ntrials = 0\n").field() == "montecarlo.trials");
    CHECK(parse_error("[montecarlo]\ntrials = 2.5\n").field() == "montecarlo.trials");
    CHECK(parse_error("[montecarlo]\nphase_mode = random\n").field() == "montecarlo.phase_mode");
    CHECK(parse_error("[sweep]\nr_min_m = 500\nr_max_m = 100\n").field() == "sweep.r_min_m");
    CHECK(parse_error("[output]\nformat = json\n").field() == "output.format");
}

TEST_CASE("Nyquist violation is reported")
{
    const ConfigError e = parse_error("[montecarlo]\nsample_rate_hz = 30000\n");
    CHECK(e.field() == "montecarlo.sample_rate_hz");
    CHECK_THAT(std::string(e.what()), ContainsSubstring("Nyquist"));
}

TEST_CASE("structural errors carry line numbers")
{
    const ConfigError unknown_key = parse_error("[link]\n\ntransmit_powr_w = 1\n");
    CHECK(unknown_key.line() == 3);
    CHECK(unknown_key.field() == "link.transmit_powr_w");
    CHECK_THAT(std::string(unknown_key.what()), ContainsSubstring("unknown key"));

    const ConfigError unknown_section = parse_error("# top\n[lnk]\n");
    CHECK(unknown_section.line() == 2);
    CHECK_THAT(std::string(unknown_section.what()), ContainsSubstring("unknown section"));

    const ConfigError dup = parse_error("[noise]\napd_gain = 10\napd_gain = 20\n");
    CHECK(dup.line() == 3);
    CHECK_THAT(std::string(dup.what()), ContainsSubstring("duplicate"));

    CHECK(parse_error("apd_gain = 10\n").line() == 1);
    CHECK(parse_error("[noise]\napd_gain\n").line() == 2);
    CHECK(parse_error("[noise]\napd_gain =\n").line() == 2);
    CHECK(parse_error("[noise\n").line() == 1);
}

TEST_CASE("render and parse round trip")
{
    ExperimentConfig c = default_config();
    c.link.transmit_power = 3.3;
    c.sweep.points = 7;
    c.montecarlo.master_seed = 0xFFFFFFFFFFFFFFFFull;
    c.montecarlo.phase_mode = PhaseMode::deterministic;
    c.output.path = "out/sweep.csv";

    const std::string text = render_config(c);
    const ExperimentConfig back = parse_config(text);
    CHECK(render_config(back) == text);
    CHECK(back.link.transmit_power == 3.3);
    CHECK(back.sweep.points == 7);
    CHECK(back.montecarlo.master_seed == 0xFFFFFFFFFFFFFFFFull);
    CHECK(back.output.path == "out/sweep.csv");
    CHECK_THAT(back.atomic.gamma2, WithinRel(c.atomic.gamma2, 1e-15));
    CHECK_THAT(back.atomic.dipole_rf, WithinRel(c.atomic.dipole_rf, 1e-15));
    CHECK_THAT(back.link.transmit_gain, WithinRel(c.link.transmit_gain, 1e-15));
}

TEST_CASE("load_config reads files and reports missing ones")
{
    const auto path = std::filesystem::temp_directory_path() / "rydradar_test_config.ini";
    {
        std::ofstream out(path);
        out << "[sweep]\npoints = 3\n";
    }
    CHECK(load_config(path).sweep.points == 3);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path), std::ios_base::failure);
}

TEST_CASE("writing the defaults out explicitly changes nothing")
{
    const ExperimentConfig d = default_config();
    const ExperimentConfig e = parse_config(render_config(d));
    CHECK(e.atomic.gamma2 == d.atomic.gamma2);
    CHECK(e.atomic.omega_p == d.atomic.omega_p);
    CHECK(e.atomic.omega_c == d.atomic.omega_c);
    CHECK(e.atomic.omega_lo == d.atomic.omega_lo);
    CHECK(e.atomic.dipole_12 == d.atomic.dipole_12);
    CHECK(e.atomic.dipole_rf == d.atomic.dipole_rf);
    CHECK(e.atomic.probe_wavelength == d.atomic.probe_wavelength);
    CHECK(e.link.transmit_gain == d.link.transmit_gain);
    CHECK(e.link.carrier_f1 == d.link.carrier_f1);
    CHECK(e.noise.bandwidth == d.noise.bandwidth);
    CHECK(e.montecarlo.sample_rate == d.montecarlo.sample_rate);
}
