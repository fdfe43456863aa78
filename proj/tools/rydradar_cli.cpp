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

// rydradar command-line front end: compute-c, snr-sweep, rmse-sweep, dump-waveform.
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include "rydradar/config.hpp"
#include "rydradar/errors.hpp"
#include "rydradar/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{
    constexpr int kExitValidation = 1;
    constexpr int kExitIo = 2;

    struct CommonOptions
    {
        std::string config_path;
        std::string out_path;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials;
        bool quiet = false;
    };

    struct IoError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    rydradar::ExperimentConfig load(const CommonOptions &opt)
    {
        rydradar::ExperimentConfig cfg = rydradar::default_config();
        if (!opt.config_path.empty())
        {
            try
            {
                cfg = rydradar::load_config(opt.config_path);
            }
            catch (const std::ios_base::failure &e)
            {
                throw IoError(e.what());
            }
        }
        if (opt.seed)
            cfg.montecarlo.master_seed = *opt.seed;
        if (opt.trials)
            cfg.montecarlo.trials = *opt.trials;
        if (!opt.out_path.empty())
            cfg.output.path = opt.out_path;
        cfg.validate();
        return cfg;
    }

    // Writes to stdout for "-", otherwise to the file; failures become IoError.
    void emit(const std::string &path, const std::function<void(std::ostream &)> &writer)
    {
        if (path == "-")
        {
            writer(std::cout);
            std::cout.flush();
            if (!std::cout)
                throw IoError("failed writing to stdout");
            return;
        }
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + path + "' for writing");
        try
        {
            writer(out);
        }
        catch (const std::ios_base::failure &e)
        {
            throw IoError(e.what());
        }
        out.close();
        if (!out)
            throw IoError("failed writing '" + path + "'");
    }

    void add_common(CLI::App &sub, CommonOptions &opt)
    {
        sub.add_option("--config", opt.config_path, "Configuration file (defaults apply when omitted)");
        sub.add_option("--out", opt.out_path, "Output path, '-' for stdout (overrides [output] path)");
        sub.add_option("--seed", opt.seed, "Master seed for Monte Carlo streams");
        sub.add_option("--trials", opt.trials, "Monte Carlo trials per range")->check(CLI::PositiveNumber);
        sub.add_flag("--quiet", opt.quiet, "Suppress the summary on stderr");
    }

    void summarize_sweep(const rydradar::SweepResult &r, bool rmse, const CommonOptions &opt)
    {
        if (opt.quiet || r.rows.empty())
            return;
        const auto &first = r.rows.front();
        std::cerr << "rows: " << r.rows.size() << ", SNR gap (quantum - classical): "
                  << first.snr_quantum_db - first.snr_classical_db << " dB\n";
        if (rmse)
        {
            const auto show = [](const char *name, const std::optional<double> &d)
            {
                std::cerr << name << " departs from 2x ACRB at: ";
                if (d)
                    std::cerr << *d << " m\n";
                else
                    std::cerr << "none within sweep\n";
            };
            show("quantum", rydradar::departure_range(r, rydradar::Receiver::quantum));
            show("classical", rydradar::departure_range(r, rydradar::Receiver::classical));
        }
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Rydberg atomic receiver radar simulation"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto *compute_c = app.add_subcommand("compute-c", "Report the optical gain constant C and its intermediates");
    auto *snr_sweep = app.add_subcommand("snr-sweep", "Quantum vs classical SNR over the range grid");
    auto *rmse_sweep = app.add_subcommand("rmse-sweep", "Monte Carlo velocity RMSE and ACRB over the range grid");
    auto *dump = app.add_subcommand("dump-waveform", "Write one synthesized APD record as CSV");
    for (auto *sub : {compute_c, snr_sweep, rmse_sweep, dump})
        add_common(*sub, opt);

    double dump_range = 1000.0;
    std::string dump_receiver = "quantum";
    std::size_t dump_trial = 0;
    dump->add_option("--range", dump_range, "Target range in metres")->check(CLI::PositiveNumber);
    dump->add_option("--receiver", dump_receiver, "quantum or classical")
        ->check(CLI::IsMember({"quantum", "classical"}));
    dump->add_option("--trial", dump_trial, "Trial index used to derive the seed");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitValidation;
    }

    try
    {
        const rydradar::ExperimentConfig cfg = load(opt);
        const std::string &out = cfg.output.path;

        if (compute_c->parsed())
        {
            const std::string report = rydradar::compute_c_report(cfg);
            emit(out, [&](std::ostream &os) { os << report; });
        }
        else if (snr_sweep->parsed())
        {
            const auto result = rydradar::run_snr_sweep(cfg);
            emit(out, [&](std::ostream &os) { rydradar::write_csv(result, os); });
            summarize_sweep(result, false, opt);
        }
        else if (rmse_sweep->parsed())
        {
            const auto result = rydradar::run_rmse_sweep(cfg);
            emit(out, [&](std::ostream &os) { rydradar::write_csv(result, os); });
            summarize_sweep(result, true, opt);
        }
        else if (dump->parsed())
        {
            const auto rx = dump_receiver == "quantum" ? rydradar::Receiver::quantum : rydradar::Receiver::classical;
            const auto rec = rydradar::synthesize_trial(cfg, rx, 0, dump_range, dump_trial);
            emit(out, [&](std::ostream &os) { rydradar::write_waveform_csv(rec, os); });
            if (!opt.quiet)
                std::cerr << "samples: " << rec.size() << ", beat " << rec.beat_freq << " Hz, phase " << rec.phase
                          << " rad, sigma " << rec.sigma_z << ", seed " << rec.seed << '\n';
        }
    }
    catch (const IoError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    catch (const rydradar::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const rydradar::DomainError &e)
    {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
