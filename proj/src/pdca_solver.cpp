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

#include "rissec/pdca_solver.hpp"

#include "rissec/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rissec
{
    namespace
    {
        void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw std::invalid_argument("PdcaConfig: " + what);
        }

        bool in_open_unit(double x) { return x > 0.0 && x < 1.0; }

        // 2 d(-u/v)/dx* from the ratio forms.
        CVector ratio_gradient(const RatioForms &f)
        {
            const double v2 = f.denominator * f.denominator;
            return (-2.0 / v2) * (f.numerator_slope * f.denominator - f.numerator * f.denominator_slope);
        }

        // Penalty gradient, (|phi_i| - 1 + rho lambda_i) phi_i / (rho |phi_i|), zero at phi_i = 0.
        void add_penalty_gradient(const CVector &phi, const DualState &dual, CVector &grad)
        {
            for (Eigen::Index i = 0; i < phi.size(); ++i)
            {
                const double r = std::abs(phi[i]);
                if (r == 0.0)
                    continue;
                grad[i] += (r - 1.0 + dual.rho * dual.lambda[i]) * phi[i] / (dual.rho * r);
            }
        }

        template <class Quadratics>
        double phase_objective_impl(const CVector &phi, const Quadratics &pq, const DualState &dual)
        {
            const RatioForms f = pq.evaluate(phi);
            return -f.numerator / f.denominator + unit_modulus_penalty(phi, dual);
        }

        template <class Quadratics>
        CVector grad_phase_impl(const CVector &phi, const Quadratics &pq, const DualState &dual)
        {
            if (!(dual.rho > 0.0))
                throw std::domain_error("grad_phase: rho must be > 0");
            CVector g = ratio_gradient(pq.evaluate(phi));
            add_penalty_gradient(phi, dual, g);
            return g;
        }

        template <class Quadratics>
        InnerResult bsca_inner_impl(const CVector &phi0, const CVector &w0, const DualState &dual,
                                    const SecrecyProblem &problem, const PdcaConfig &cfg, SolveTrace *trace,
                                    int outer_index, Quadratics (*make_quadratics)(const CVector &, const ScenarioChannels &,
                                                                                   const EveStatistics &, const NoisePowers &))
        {
            InnerResult res;
            res.phi = phi0;
            res.w = w0;
            const VectorProjector to_ball = [&](const CVector &x)
            { return project_power(x, problem.p_max); };

            double al_prev = -lesr_ratio(res.phi, res.w, problem.channels, problem.eve, problem.noise).ratio() +
                             unit_modulus_penalty(res.phi, dual);

            for (int k = 0; k < cfg.max_inner; ++k)
            {
                const Quadratics pq = make_quadratics(res.w, problem.channels, problem.eve, problem.noise);
                const VectorObjective h = [&](const CVector &x)
                { return phase_objective_impl(x, pq, dual); };
                const CVector gp = grad_phase_impl(res.phi, pq, dual);
                const LineSearchResult ls_phase = armijo_step(h, res.phi, gp, cfg.alpha_phase_ini, cfg.shrink_phase,
                                                              cfg.armijo_phase, cfg.max_backtracks);
                if (ls_phase.accepted)
                {
                    res.phi = ls_phase.x;
                    res.alpha_phase = ls_phase.alpha;
                }

                const BeamQuadratics bq = beam_quadratics(res.phi, problem.channels, problem.eve, problem.noise);
                const VectorObjective g = [&](const CVector &x)
                { return beam_objective(x, bq); };
                const CVector gb = grad_beam(res.w, bq);
                const LineSearchResult ls_beam = armijo_step(g, res.w, gb, cfg.alpha_beam_ini, cfg.shrink_beam,
                                                             cfg.armijo_beam, cfg.max_backtracks, to_ball);
                if (ls_beam.accepted)
                {
                    res.w = ls_beam.x;
                    res.alpha_beam = ls_beam.alpha;
                }

                const double al = ls_beam.f_end + unit_modulus_penalty(res.phi, dual);
                res.iterations = k + 1;

                if (trace)
                {
                    if (cfg.record_steps)
                    {
                        trace->steps.push_back({outer_index, k, Block::Phase, ls_phase.f_start, ls_phase.f_end,
                                                ls_phase.alpha, ls_phase.grad_norm_sq, cfg.armijo_phase,
                                                ls_phase.accepted});
                        trace->steps.push_back({outer_index, k, Block::Beam, ls_beam.f_start, ls_beam.f_end,
                                                ls_beam.alpha, ls_beam.grad_norm_sq, cfg.armijo_beam,
                                                ls_beam.accepted});
                    }
                    trace->inner.push_back({outer_index, k, al, ls_phase.alpha, ls_beam.alpha, ls_phase.accepted,
                                            ls_beam.accepted, unit_modulus_violation(res.phi)});
                }

                if (!ls_phase.accepted && !ls_beam.accepted)
                {
                    res.stalled = true;
                    break;
                }
                if (std::abs(al - al_prev) <= cfg.eps_inner)
                    break;
                al_prev = al;
            }
            return res;
        }
    } // namespace

    void PdcaConfig::validate() const
    {
        require(rho0 > 0.0, "rho0 must be > 0");
        require(in_open_unit(rho_decrease), "rho_decrease must lie in (0,1)");
        require(eta > 0.0, "eta must be > 0");
        require(eps_outer > 0.0, "eps_outer must be > 0");
        require(eps_inner > 0.0, "eps_inner must be > 0");
        require(alpha_phase_ini > 0.0 && alpha_beam_ini > 0.0, "initial step sizes must be > 0");
        require(in_open_unit(shrink_phase) && in_open_unit(shrink_beam), "shrink factors must lie in (0,1)");
        require(in_open_unit(armijo_phase) && in_open_unit(armijo_beam), "Armijo constants must lie in (0,1)");
        require(max_outer >= 1 && max_inner >= 1 && max_backtracks >= 1, "iteration caps must be >= 1");
    }

    double phase_objective(const CVector &phi, const PhaseQuadratics &pq, const DualState &dual)
    {
        return phase_objective_impl(phi, pq, dual);
    }

    double phase_objective(const CVector &phi, const StructuredPhaseQuadratics &pq, const DualState &dual)
    {
        return phase_objective_impl(phi, pq, dual);
    }

    CVector grad_phase(const CVector &phi, const PhaseQuadratics &pq, const DualState &dual)
    {
        return grad_phase_impl(phi, pq, dual);
    }

    CVector grad_phase(const CVector &phi, const StructuredPhaseQuadratics &pq, const DualState &dual)
    {
        return grad_phase_impl(phi, pq, dual);
    }

    double beam_objective(const CVector &w, const BeamQuadratics &bq)
    {
        const RatioForms f = bq.evaluate(w);
        return -f.numerator / f.denominator;
    }

    CVector grad_beam(const CVector &w, const BeamQuadratics &bq)
    {
        return ratio_gradient(bq.evaluate(w));
    }

    CVector project_power(const CVector &w, double p_max)
    {
        if (!(p_max > 0.0))
            throw std::domain_error("project_power: p_max must be > 0");
        const double power = w.squaredNorm();
        if (power <= p_max)
            return w;
        return w * (std::sqrt(p_max) / std::sqrt(power));
    }

    LineSearchResult armijo_step(const VectorObjective &objective, const CVector &x, const CVector &grad,
                                 double alpha_ini, double shrink, double c_armijo, int max_backtracks,
                                 const std::optional<VectorProjector> &projector)
    {
        LineSearchResult res;
        res.f_start = objective(x);
        res.grad_norm_sq = grad.squaredNorm();
        double alpha = alpha_ini;
        for (int trial = 1; trial <= max_backtracks; ++trial)
        {
            alpha *= shrink;
            CVector candidate = x - alpha * grad;
            if (projector)
                candidate = (*projector)(candidate);
            const double f = objective(candidate);
            res.trials = trial;
            if (std::isfinite(f) && f <= res.f_start - c_armijo * alpha * res.grad_norm_sq)
            {
                res.x = std::move(candidate);
                res.alpha = alpha;
                res.accepted = true;
                res.f_end = f;
                return res;
            }
        }
        res.x = x;
        res.alpha = 0.0;
        res.f_end = res.f_start;
        return res;
    }

    InnerResult bsca_inner(const CVector &phi0, const CVector &w0, const DualState &dual,
                           const SecrecyProblem &problem, const PdcaConfig &cfg, SolveTrace *trace, int outer_index)
    {
        if (!(dual.rho > 0.0))
            throw std::domain_error("bsca_inner: rho must be > 0");
        if (cfg.structured)
            return bsca_inner_impl<StructuredPhaseQuadratics>(phi0, w0, dual, problem, cfg, trace, outer_index,
                                                              &structured_phase_quadratics);
        return bsca_inner_impl<PhaseQuadratics>(phi0, w0, dual, problem, cfg, trace, outer_index,
                                                &phase_quadratics);
    }

    std::pair<CVector, CVector> initial_point(const SecrecyProblem &problem, std::uint64_t seed)
    {
        const auto n = problem.num_elements();
        const auto m = problem.num_antennas();
        CounterRng rng(seed, streams::kInitialPhase);
        CVector phi(n);
        for (Eigen::Index i = 0; i < n; ++i)
            phi[i] = std::polar(1.0, rng.phase());
        const CVector a = effective_user_channel(phi, problem.channels);
        CVector w = CVector::Zero(m);
        const double norm = a.norm();
        if (norm > 0.0)
            w = a * (std::sqrt(problem.p_max) / norm);
        else if (m > 0)
            w[0] = std::sqrt(problem.p_max);
        return {phi, w};
    }

    PdcaResult pdca_solve(const SecrecyProblem &problem, const PdcaConfig &cfg, const CVector &phi0,
                          const CVector &w0)
    {
        cfg.validate();
        if (phi0.size() != problem.num_elements() || w0.size() != problem.num_antennas())
            throw std::invalid_argument("pdca_solve: initial point has the wrong dimensions");
        if (w0.squaredNorm() > problem.p_max * (1.0 + 1e-12))
            throw std::invalid_argument("pdca_solve: initial beamformer violates the power budget");

        PdcaResult out;
        SolveTrace &trace = out.trace;
        DualState dual{RVector::Zero(problem.num_elements()), cfg.rho0};

        CVector phi = phi0;
        CVector w = w0;
        double prev_lesr = std::numeric_limits<double>::infinity();

        // Best projected iterate, returned if the outer loop runs out of iterations.
        Solution best;
        best.lesr = -1.0;

        for (int r = 0; r < cfg.max_outer; ++r)
        {
            const InnerResult inner = bsca_inner(phi, w, dual, problem, cfg, &trace, r);
            phi = inner.phi;
            w = inner.w;

            OuterRecord rec;
            rec.outer = r;
            rec.rho = dual.rho;
            rec.al_value = al_objective(phi, w, dual, problem.channels, problem.eve, problem.noise);
            rec.inner_iterations = inner.iterations;
            rec.alpha_phase = inner.alpha_phase;
            rec.alpha_beam = inner.alpha_beam;

            const double violation = unit_modulus_violation(phi);
            rec.violation = violation;
            if (violation <= cfg.eta)
            {
                dual.lambda += (phi.cwiseAbs().array() - 1.0).matrix() / dual.rho;
                rec.multiplier_updated = true;
            }
            else
            {
                dual.rho *= cfg.rho_decrease;
            }

            rec.lesr = lesr(phi, w, problem);
            trace.outer.push_back(rec);

            const CVector projected = project_unit_modulus(phi);
            const double projected_lesr = lesr(projected, w, problem);
            if (projected_lesr > best.lesr)
                best = Solution{projected, w, projected_lesr};

            if (std::abs(rec.lesr - prev_lesr) <= cfg.eps_outer && violation <= cfg.eta)
            {
                trace.converged = true;
                break;
            }
            prev_lesr = rec.lesr;
        }

        trace.lesr_before_projection = lesr(phi, w, problem);
        trace.final_violation = unit_modulus_violation(phi);
        if (trace.converged)
        {
            const CVector projected = project_unit_modulus(phi);
            out.solution = Solution{projected, w, lesr(projected, w, problem)};
        }
        else
        {
            trace.truncated = true;
            out.solution = best;
        }
        return out;
    }
} // namespace rissec
