// SPDX-License-Identifier: Apache-2.0
//
// rissec: secure RIS-assisted beamforming with statistical eavesdropper CSI
// Copyright (C) 2026 The rissec authors
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

// rissec command line: parameter sweeps, single solves with a trace, and the self-check suite.
// Exit codes: 0 success, 1 usage or input error, 2 a self-check failed.

#include "rissec/experiment.hpp"
#include "rissec/parallel.hpp"
#include "rissec/validation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace
{
    constexpr int kExitOk = 0;
    constexpr int kExitUsage = 1;
    constexpr int kExitValidation = 2;

    int run_sweep_cmd(const std::string &config_path, const std::string &kind_id, std::string out_path,
                      std::optional<std::uint64_t> seed)
    {
        rissec::ExperimentConfig cfg = rissec::load_config(config_path);
        if (seed)
            cfg.seed = *seed;
        if (out_path.empty())
            out_path = cfg.output;
        if (out_path.empty())
            throw std::invalid_argument("no output path: pass --out or set \"output\" in the config");
        const rissec::SweepKind kind = rissec::parse_sweep_kind(kind_id);
        const auto rows = rissec::run_sweep(cfg, kind, rissec::worker_count());
        rissec::write_text_file(out_path, rissec::sweep_csv(rows, cfg.record_wall_time));
        std::cerr << "wrote " << rows.size() << " rows to " << out_path << '\n';
        return kExitOk;
    }

    int run_solve_cmd(const std::string &config_path, const std::string &scheme_id, const std::string &trace_path)
    {
        const rissec::ExperimentConfig cfg = rissec::load_config(config_path);
        const rissec::Scheme scheme = rissec::parse_scheme(scheme_id);
        const rissec::SolveOutput out = rissec::solve_once(cfg, scheme, rissec::worker_count());
        if (!trace_path.empty())
            rissec::write_text_file(trace_path, rissec::trace_csv(out));

        const rissec::Solution &s = out.outcome.solution;
        nlohmann::json summary = {{"scheme", std::string(rissec::scheme_id(scheme))},
                                  {"num_antennas", out.problem.num_antennas()},
                                  {"num_elements", out.problem.num_elements()},
                                  {"p_max_dbm", cfg.p_max_dbm},
                                  {"lesr", s.lesr},
                                  {"esr_mean", out.esr.mean},
                                  {"esr_stderr", out.esr.std_error},
                                  {"n_mc", out.esr.n_samples},
                                  {"power_w", s.w.squaredNorm()},
                                  {"iterations", out.outcome.iterations}};
        if (out.outcome.trace)
        {
            summary["converged"] = out.outcome.trace->converged;
            summary["truncated"] = out.outcome.trace->truncated;
            summary["violation_before_projection"] = out.outcome.trace->final_violation;
            summary["lesr_before_projection"] = out.outcome.trace->lesr_before_projection;
        }
        std::cout << summary.dump(2) << '\n';
        return kExitOk;
    }

    int run_validate_cmd(bool fast)
    {
        bool ok = true;
        for (const rissec::OracleReport &r : rissec::run_validation(fast))
        {
            std::cout << rissec::format_report(r) << '\n';
            ok = ok && r.passed;
        }
        std::cout << (ok ? "validation passed" : "validation FAILED") << '\n';
        return ok ? kExitOk : kExitValidation;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"rissec: secure RIS-assisted beamforming with statistical eavesdropper CSI"};
    app.require_subcommand(1);
    app.footer(std::string("Worker threads: set ") + rissec::kWorkersEnv + " (default: hardware concurrency).");

    std::string config_path, kind, out_path, scheme, trace_path;
    std::optional<std::uint64_t> seed;
    bool fast = false;

    CLI::App *sweep = app.add_subcommand("sweep", "run a parameter sweep and write a CSV");
    sweep->add_option("--kind", kind, "power | elements | eve-y | user-y | ris-y")
        ->required()
        ->check(CLI::IsMember({"power", "elements", "eve-y", "user-y", "ris-y"}));
    sweep->add_option("--config", config_path, "JSON config")->required();
    sweep->add_option("--out", out_path, "output CSV (default: \"output\" from the config)");
    sweep->add_option("--seed", seed, "master seed (overrides the config)");

    CLI::App *solve = app.add_subcommand("solve", "solve one scenario and write the iteration trace");
    solve->add_option("--config", config_path, "JSON config")->required();
    solve->add_option("--scheme", scheme, "pdca | no_ris | ao_ew | random_mrt")
        ->required()
        ->check(CLI::IsMember({"pdca", "no_ris", "ao_ew", "random_mrt"}));
    solve->add_option("--trace", trace_path, "trace CSV");

    CLI::App *validate = app.add_subcommand("validate", "run the self-check suite");
    validate->add_flag("--fast", fast, "reduced sample sizes");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        app.exit(e);
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp &e)
    {
        app.exit(e);
        return kExitOk;
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        if (*sweep)
            return run_sweep_cmd(config_path, kind, out_path, seed);
        if (*solve)
            return run_solve_cmd(config_path, scheme, trace_path);
        return run_validate_cmd(fast);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
