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

#ifndef RISSEC_EXPERIMENT_HPP
#define RISSEC_EXPERIMENT_HPP

#include "rissec/baselines.hpp"
#include "rissec/monte_carlo.hpp"
#include "rissec/pdca_solver.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rissec
{
    inline constexpr int kCsvSchemaVersion = 1;

    enum class SweepKind
    {
        Power,
        Elements,
        EveY,
        UserY,
        RisY
    };

    std::string_view sweep_kind_id(SweepKind k);
    SweepKind parse_sweep_kind(std::string_view id);

    /// Sweep axes. Power points are in dBm, coordinates in meters.
    struct SweepRanges
    {
        std::vector<double> power_dbm{-10.0, -5.0, 0.0, 5.0, 10.0};
        std::vector<int> elements{16, 32, 48};
        std::vector<double> eve_y{40.0, 45.0, 50.0, 55.0, 60.0, 65.0, 70.0, 75.0, 80.0};
        std::vector<double> user_y{40.0, 45.0, 50.0, 55.0, 60.0, 65.0, 70.0, 75.0, 80.0};
        std::vector<double> ris_y{30.0, 35.0, 40.0, 45.0, 50.0, 55.0, 60.0, 65.0, 70.0};

        bool operator==(const SweepRanges &) const = default;
    };

    struct ExperimentConfig
    {
        Geometry geometry;
        FadingStats fading;
        double p_max_dbm = 5.0;
        SweepRanges sweeps;
        std::vector<Scheme> schemes{Scheme::Pdca, Scheme::NoRis, Scheme::AoElementwise};
        long n_mc = 20000;
        int n_user_realizations = 20;
        std::uint64_t seed = 1;
        PdcaConfig pdca;
        AoConfig ao;
        std::string output;
        bool record_wall_time = false; // adds a wall_time_s column (breaks byte-for-byte reproducibility)

        void validate() const;

        bool operator==(const ExperimentConfig &) const = default;
    };

    /// Parses a config document. dB/dBm keys are converted here; unknown keys throw std::invalid_argument.
    ExperimentConfig parse_config(const nlohmann::json &doc);
    ExperimentConfig load_config(const std::string &path);

    /// Canonical document in linear units; parse_config(to_json(c)) == c.
    nlohmann::json to_json(const ExperimentConfig &cfg);

    /// Geometry with `n` RIS elements: ris_rows is kept and ris_cols = n / ris_rows (must divide).
    Geometry with_elements(const Geometry &geom, int n);

    /// One user-channel realization of the configured scenario.
    SecrecyProblem make_problem(const Geometry &geom, const FadingStats &fading, double p_max_dbm,
                                std::uint64_t realization_seed);

    std::uint64_t realization_seed(std::uint64_t master, int realization);

    struct SchemeOutcome
    {
        Scheme scheme = Scheme::Pdca;
        Solution solution;
        int iterations = 0;
        std::optional<SolveTrace> trace; // PDCA only
    };

    /// Runs one scheme on one problem; `seed` drives random initial phases.
    SchemeOutcome run_scheme(Scheme scheme, const SecrecyProblem &problem, const ExperimentConfig &cfg,
                             std::uint64_t seed);

    struct SweepRow
    {
        SweepKind kind = SweepKind::Power;
        double sweep_value = 0.0;
        int num_antennas = 0;
        int num_elements = 0;
        double p_max_dbm = 0.0;
        Scheme scheme = Scheme::Pdca;
        std::uint64_t seed = 0;
        int realizations = 0;
        long n_mc = 0;
        double lesr = 0.0;       // averaged over realizations
        double esr_mean = 0.0;   // averaged over realizations
        double esr_stderr = 0.0; // Monte Carlo standard error of esr_mean
        double iterations = 0.0; // mean outer iterations / AO rounds
        double wall_time_s = 0.0;
    };

    /// Runs the sweep; rows are ordered by (sweep point, scheme order in the config).
    std::vector<SweepRow> run_sweep(const ExperimentConfig &cfg, SweepKind kind, int workers = 1);

    std::string sweep_csv_header(bool with_wall_time);
    std::string sweep_csv(const std::vector<SweepRow> &rows, bool with_wall_time);

    /// Writes the CSV; throws std::runtime_error if the path is not writable.
    void write_text_file(const std::string &path, const std::string &content);

    struct SolveOutput
    {
        SchemeOutcome outcome;
        EsrEstimate esr;
        SecrecyProblem problem;
    };

    /// Single scenario (realization 0 of the configured geometry and p_max), single scheme.
    SolveOutput solve_once(const ExperimentConfig &cfg, Scheme scheme, int workers = 1);

    std::string trace_csv_header();

    /// Per-inner-iteration rows, per-outer-iteration rows, and a final row with the reported solution.
    std::string trace_csv(const SolveOutput &out);
} // namespace rissec

#endif
