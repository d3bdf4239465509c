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

#ifndef RISSEC_VALIDATION_HPP
#define RISSEC_VALIDATION_HPP

#include "rissec/experiment.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rissec
{
    /// Outcome of one self-check. `metric` is compared against `threshold`; `detail` is human-readable.
    struct OracleReport
    {
        std::string name;
        bool passed = false;
        double metric = 0.0;
        double threshold = 0.0;
        std::string detail;
    };

    using PhaseGradientFn =
        std::function<CVector(const CVector &, const StructuredPhaseQuadratics &, const DualState &)>;
    using BeamGradientFn = std::function<CVector(const CVector &, const BeamQuadratics &)>;

    /// Random test instance on the reference deployment with `elements` RIS elements.
    SecrecyProblem reference_problem(int elements, std::uint64_t seed, double p_max_dbm = 5.0);

    struct GradientCheckOptions
    {
        int instances = 20;
        int directions = 10;
        int elements = 32;
        double fd_step = 1e-6;
        double tolerance = 1e-5; // |fd - analytic| / (||grad|| ||d||)
        double taylor_step = 1e-3;
        double decay_low = 3.0; // remainder ratio when halving the step
        double decay_high = 5.0;
        std::uint64_t seed = 11;
    };

    // Central differences of the phase-block and beam-block objectives along unit complex
    // directions, plus the second-order decay of the first-order Taylor remainder.
    OracleReport check_gradients(const GradientCheckOptions &opt, const PhaseGradientFn &phase_grad,
                                 const BeamGradientFn &beam_grad);

    OracleReport check_gradients(const GradientCheckOptions &opt);

    /// Structured and dense phase quadratics agree (values and slopes), relative 1e-10.
    OracleReport check_structured_dense(int trials, std::uint64_t seed);

    /// Direct ratio, phase-quadratic route and beam-quadratic route agree, relative 1e-10.
    OracleReport check_ratio_routes(int trials, std::uint64_t seed);

    /// Monte Carlo mean of Eve's received power against the closed form: fraction of trials with |z| <= 3.
    OracleReport check_expectation_identity(int trials, long n, double min_fraction, std::uint64_t seed);

    /// ESR_mc >= LESR - 3 stderr for random feasible points and optimized solutions.
    OracleReport check_jensen_bound(int random_points, int optimized, long n, std::uint64_t seed);

    // Solves `seeds` instances with step recording and checks every accepted Armijo step
    // against its sufficient-decrease inequality, inner AL monotonicity, and final
    // feasibility (violation <= eta before projection, ||w||^2 <= P + 1e-9). Returns the
    // descent report followed by the feasibility report.
    std::vector<OracleReport> check_descent_and_feasibility(int seeds, std::uint64_t seed);

    // M = 2, N = 2: exhaustive grid over both phases (grid x grid points) with the optimal
    // beam at each grid point in closed form. Counts seeds where PDCA reaches `fraction` of it.
    OracleReport check_toy_optimality(int seeds, int grid, double fraction, int min_passing, std::uint64_t seed);

    struct TrendOptions
    {
        std::vector<int> elements{16, 32, 48};
        double p_max_dbm = 5.0;
        long n_mc = 20000;
        int realizations = 20;
        double max_gap = 0.5; // ESR - LESR for PDCA
        std::uint64_t seed = 1;
        int workers = 1;
    };

    /// Sweep-level sanity: PDCA vs no-RIS, growth in N, Jensen gap, PDCA vs AO-ew. One report per claim.
    std::vector<OracleReport> check_trends(const TrendOptions &opt);

    /// Log-log slope of inner-loop time versus N at a fixed cycle count.
    OracleReport check_complexity(const std::vector<int> &elements, int cycles, double max_slope);

    /// The self-check suite run by the `validate` command.
    std::vector<OracleReport> run_validation(bool fast);

    /// One line per report: "PASS name: detail" / "FAIL name: detail".
    std::string format_report(const OracleReport &r);
} // namespace rissec

#endif
