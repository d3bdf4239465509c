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

#ifndef RISSEC_PDCA_SOLVER_HPP
#define RISSEC_PDCA_SOLVER_HPP

#include "rissec/secrecy_objective.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rissec
{
    // Penalty dual convex approximation: an outer penalty/multiplier loop around a block
    // successive convex approximation inner loop. The inner loop takes one Armijo gradient
    // step on phi (unconstrained, penalized) and one projected Armijo gradient step on w
    // (power ball) per cycle.
    struct PdcaConfig
    {
        double rho0 = 1.0;         // initial penalty parameter
        double rho_decrease = 0.7; // rho <- rho_decrease * rho when the violation exceeds eta
        double eta = 1e-3;         // unit-modulus violation tolerance
        double eps_outer = 1e-4;   // LESR change tolerance between outer iterations
        double eps_inner = 1e-5;   // AL change tolerance between inner cycles
        double alpha_phase_ini = 1.0;
        double alpha_beam_ini = 1.0;
        double shrink_phase = 0.5;
        double shrink_beam = 0.5;
        double armijo_phase = 1e-3;
        double armijo_beam = 1e-3;
        int max_outer = 100;
        int max_inner = 200;
        int max_backtracks = 40;
        bool structured = true;    // O(N) phase-block evaluations via the factored quadratics
        bool record_steps = false; // keep every line-search outcome in the trace

        void validate() const;

        bool operator==(const PdcaConfig &) const = default;
    };

    enum class Block
    {
        Phase,
        Beam
    };

    /// One line search as seen by the inner loop.
    struct StepRecord
    {
        int outer = 0;
        int inner = 0;
        Block block = Block::Phase;
        double f_before = 0.0;
        double f_after = 0.0;
        double alpha = 0.0;
        double grad_norm_sq = 0.0;
        double armijo_c = 0.0;
        bool accepted = false;
    };

    struct InnerRecord
    {
        int outer = 0;
        int inner = 0;
        double al_value = 0.0; // minimization form: -ratio + penalty
        double alpha_phase = 0.0;
        double alpha_beam = 0.0;
        bool phase_accepted = false;
        bool beam_accepted = false;
        double violation = 0.0;
    };

    struct OuterRecord
    {
        int outer = 0;
        double lesr = 0.0;     // at the unprojected iterate
        double al_value = 0.0; // reporting form: lesr_unclamped - penalty, with the dual used by the inner loop
        double violation = 0.0;
        double rho = 0.0;      // penalty used by this iteration's inner loop
        int inner_iterations = 0;
        bool multiplier_updated = false;
        double alpha_phase = 0.0; // last accepted step sizes
        double alpha_beam = 0.0;
    };

    struct SolveTrace
    {
        std::vector<OuterRecord> outer;
        std::vector<InnerRecord> inner;
        std::vector<StepRecord> steps;
        bool converged = false;
        bool truncated = false;
        double lesr_before_projection = 0.0;
        double final_violation = 0.0;
    };

    struct PdcaResult
    {
        Solution solution;
        SolveTrace trace;
    };

    /// h(phi) = -u(phi)/v(phi) + penalty(phi); the phase-block objective (minimized).
    double phase_objective(const CVector &phi, const PhaseQuadratics &pq, const DualState &dual);
    double phase_objective(const CVector &phi, const StructuredPhaseQuadratics &pq, const DualState &dual);

    /// Gradient 2 dh/dphi*, so h(phi + t d) = h(phi) + t Re<grad, d> + O(t^2).
    CVector grad_phase(const CVector &phi, const PhaseQuadratics &pq, const DualState &dual);
    CVector grad_phase(const CVector &phi, const StructuredPhaseQuadratics &pq, const DualState &dual);

    /// g(w) = -(w^H A w + 1)/(w^H B w + 1).
    double beam_objective(const CVector &w, const BeamQuadratics &bq);

    /// 2 dg/dw*, same convention as grad_phase.
    CVector grad_beam(const CVector &w, const BeamQuadratics &bq);

    /// Projection onto { w : ||w||^2 <= p_max }.
    CVector project_power(const CVector &w, double p_max);

    struct LineSearchResult
    {
        CVector x;
        double alpha = 0.0;
        bool accepted = false;
        double f_start = 0.0;
        double f_end = 0.0;
        double grad_norm_sq = 0.0;
        int trials = 0;
    };

    using VectorObjective = std::function<double(const CVector &)>;
    using VectorProjector = std::function<CVector(const CVector &)>;

    // Backtracking: alpha <- shrink * alpha before every trial, candidate
    // x(alpha) = P(x - alpha grad), accept the first candidate with
    // f(x(alpha)) <= f(x) - c alpha ||grad||^2. Non-finite trial values count as failures.
    // When the cap is hit, returns x unchanged with accepted = false.
    LineSearchResult armijo_step(const VectorObjective &objective, const CVector &x, const CVector &grad,
                                 double alpha_ini, double shrink, double c_armijo, int max_backtracks,
                                 const std::optional<VectorProjector> &projector = std::nullopt);

    struct InnerResult
    {
        CVector phi;
        CVector w;
        int iterations = 0;
        bool stalled = false; // both line searches failed in the last cycle
        double alpha_phase = 0.0;
        double alpha_beam = 0.0;
    };

    /// Inner loop for a fixed dual state. Appends to `trace` when non-null.
    InnerResult bsca_inner(const CVector &phi0, const CVector &w0, const DualState &dual,
                           const SecrecyProblem &problem, const PdcaConfig &cfg, SolveTrace *trace = nullptr,
                           int outer_index = 0);

    /// Random unit-modulus phases from `seed` and a full-power matched filter to the combined user channel.
    std::pair<CVector, CVector> initial_point(const SecrecyProblem &problem, std::uint64_t seed);

    /// Full solve. The returned phi is hard-projected to unit modulus and `lesr` is evaluated there.
    PdcaResult pdca_solve(const SecrecyProblem &problem, const PdcaConfig &cfg, const CVector &phi0,
                          const CVector &w0);
} // namespace rissec

#endif
