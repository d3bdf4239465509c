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

#include "rissec/validation.hpp"

#include "rissec/rng.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace rissec
{
    namespace
    {
        constexpr std::uint64_t kValidationStream = 0x7661;

        std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
        {
            char buf[256];
            std::snprintf(buf, sizeof buf, f, a, b, c);
            return buf;
        }

        CVector random_phases(CounterRng &rng, Eigen::Index n)
        {
            CVector phi(n);
            for (Eigen::Index i = 0; i < n; ++i)
                phi[i] = std::polar(1.0, rng.phase());
            return phi;
        }

        CVector random_direction(CounterRng &rng, Eigen::Index n)
        {
            CVector d(n);
            for (Eigen::Index i = 0; i < n; ++i)
                d[i] = rng.complex_normal();
            return d / d.norm();
        }

        CVector random_beam(CounterRng &rng, Eigen::Index m, double power)
        {
            CVector w(m);
            for (Eigen::Index i = 0; i < m; ++i)
                w[i] = rng.complex_normal();
            return w * std::sqrt(power) / w.norm();
        }

        double rel(double a, double b)
        {
            return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
        }

        double rel(const CVector &a, const CVector &b)
        {
            return (a - b).norm() / std::max({a.norm(), b.norm(), 1e-300});
        }

        // Directional checks of one objective/gradient pair at x. Returns the worst FD error
        // and the extreme Taylor-remainder ratios seen.
        struct DirectionalStats
        {
            double max_err = 0.0;
            double min_ratio = std::numeric_limits<double>::infinity();
            double max_ratio = 0.0;
        };

        template <class F>
        void directional(const F &f, const CVector &x, const CVector &g, const CVector &d,
                         const GradientCheckOptions &opt, DirectionalStats &st)
        {
            const double an = std::real(g.dot(d));
            const double h = opt.fd_step;
            const double fd = (f(x + h * d) - f(x - h * d)) / (2.0 * h);
            const double scale = std::max(g.norm() * d.norm(), 1e-300);
            st.max_err = std::max(st.max_err, std::abs(fd - an) / scale);

            const double f0 = f(x);
            const double t = opt.taylor_step * std::max(x.norm(), 1e-3);
            const auto remainder = [&](double s)
            { return std::abs(f(x + s * d) - f0 - s * an); };
            const double r1 = remainder(t), r2 = remainder(t / 2.0), r3 = remainder(t / 4.0);
            for (double ratio : {r1 / r2, r2 / r3})
            {
                st.min_ratio = std::min(st.min_ratio, ratio);
                st.max_ratio = std::max(st.max_ratio, ratio);
            }
        }

        // Largest generalized eigenvalue of a 2x2 Hermitian pencil (A, B), B positive definite.
        double pencil_max_eigenvalue(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b)
        {
            const Eigen::LLT<Eigen::Matrix2cd> llt(b);
            const Eigen::Matrix2cd l_inv = llt.matrixL().solve(Eigen::Matrix2cd::Identity());
            const Eigen::Matrix2cd c = l_inv * a * l_inv.adjoint();
            const double c11 = std::real(c(0, 0)), c22 = std::real(c(1, 1));
            const double half = 0.5 * (c11 - c22);
            return 0.5 * (c11 + c22) + std::sqrt(half * half + std::norm(c(0, 1)));
        }

        // Best LESR over an exhaustive phase grid for M = N = 2, optimal beam per grid point.
        double toy_grid_lesr(const SecrecyProblem &p, int grid)
        {
            const ScenarioChannels &sc = p.channels;
            const Eigen::Matrix2cd h_ai = sc.h_ai;
            const Eigen::Matrix2cd h_u = sc.h_u;
            const Eigen::Vector2cd h_au = sc.h_au;
            const Eigen::Matrix2cd g_a = p.eve.g_a;
            const Eigen::Matrix2cd g_i = p.eve.g_i;
            const Eigen::Matrix2cd g_ai = p.eve.g_ai;
            const Eigen::Matrix2cd shift = Eigen::Matrix2cd::Identity() / p.p_max;

            std::vector<cdouble> phases(static_cast<std::size_t>(grid));
            for (int k = 0; k < grid; ++k)
                phases[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / grid);

            double best = 1.0;
            for (cdouble p0 : phases)
            {
                for (cdouble p1 : phases)
                {
                    const Eigen::Vector2cd conj_phi(std::conj(p0), std::conj(p1));
                    const Eigen::Vector2cd a = h_u.adjoint() * conj_phi + h_au;
                    Eigen::Matrix2cd x = h_ai;
                    x.row(0) *= p0;
                    x.row(1) *= p1;
                    const Eigen::Matrix2cd cross = g_ai * x;
                    const Eigen::Matrix2cd e = g_a + x.adjoint() * g_i * x + cross + cross.adjoint();
                    const Eigen::Matrix2cd a_mat = a * a.adjoint() / p.noise.user + shift;
                    const Eigen::Matrix2cd b_mat = e / p.noise.eve + shift;
                    best = std::max(best, pencil_max_eigenvalue(a_mat, b_mat));
                }
            }
            return std::log2(best);
        }

        OracleReport make(std::string name, bool passed, double metric, double threshold, std::string detail)
        {
            return {std::move(name), passed, metric, threshold, std::move(detail)};
        }
    } // namespace

    SecrecyProblem reference_problem(int elements, std::uint64_t seed, double p_max_dbm)
    {
        return make_problem(with_elements(Geometry{}, elements), FadingStats{}, p_max_dbm, seed);
    }

    OracleReport check_gradients(const GradientCheckOptions &opt, const PhaseGradientFn &phase_grad,
                                 const BeamGradientFn &beam_grad)
    {
        DirectionalStats st;
        for (int i = 0; i < opt.instances; ++i)
        {
            const std::uint64_t s = derive_seed(opt.seed, kValidationStream, static_cast<std::uint64_t>(i));
            const SecrecyProblem p = reference_problem(opt.elements, s);
            CounterRng rng(s, kValidationStream);
            const Eigen::Index n = p.num_elements();

            // Off the unit circle with nonzero multipliers, so the penalty terms are exercised.
            CVector phi = random_phases(rng, n);
            DualState dual{RVector(n), 0.1 + 0.9 * rng.uniform()};
            for (Eigen::Index k = 0; k < n; ++k)
            {
                phi[k] *= 0.7 + 0.6 * rng.uniform();
                dual.lambda[k] = rng.gaussian();
            }
            const CVector w = random_beam(rng, p.num_antennas(), 0.6 * p.p_max);

            const StructuredPhaseQuadratics pq = structured_phase_quadratics(w, p.channels, p.eve, p.noise);
            const BeamQuadratics bq = beam_quadratics(phi, p.channels, p.eve, p.noise);
            const auto h = [&](const CVector &x)
            { return phase_objective(x, pq, dual); };
            const auto g = [&](const CVector &x)
            { return beam_objective(x, bq); };
            const CVector gp = phase_grad(phi, pq, dual);
            const CVector gb = beam_grad(w, bq);
            for (int k = 0; k < opt.directions; ++k)
            {
                directional(h, phi, gp, random_direction(rng, n), opt, st);
                directional(g, w, gb, random_direction(rng, p.num_antennas()), opt, st);
            }
        }
        const bool ok = st.max_err <= opt.tolerance && st.min_ratio >= opt.decay_low && st.max_ratio <= opt.decay_high;
        return make("gradient_fd", ok, st.max_err, opt.tolerance,
                    fmt("max rel error %.3e (tol %.0e), Taylor remainder halving ratio in [%.3f, ", st.max_err,
                        opt.tolerance, st.min_ratio) +
                        fmt("%.3f] (want [%.0f, ", st.max_ratio, opt.decay_low) + fmt("%.0f])", opt.decay_high) +
                        ", " + std::to_string(opt.instances) + " instances x " + std::to_string(opt.directions) +
                        " directions");
    }

    OracleReport check_gradients(const GradientCheckOptions &opt)
    {
        const PhaseGradientFn gp = [](const CVector &phi, const StructuredPhaseQuadratics &pq, const DualState &d)
        { return grad_phase(phi, pq, d); };
        const BeamGradientFn gb = [](const CVector &w, const BeamQuadratics &bq)
        { return grad_beam(w, bq); };
        return check_gradients(opt, gp, gb);
    }

    OracleReport check_structured_dense(int trials, std::uint64_t seed)
    {
        double worst = 0.0;
        for (int i = 0; i < trials; ++i)
        {
            const std::uint64_t s = derive_seed(seed, kValidationStream, static_cast<std::uint64_t>(i));
            const SecrecyProblem p = reference_problem(32, s);
            CounterRng rng(s, kValidationStream);
            const CVector w = random_beam(rng, p.num_antennas(), p.p_max);
            CVector phi = random_phases(rng, p.num_elements());
            for (Eigen::Index k = 0; k < phi.size(); ++k)
                phi[k] *= 0.5 + rng.uniform();
            DualState dual{RVector::Constant(phi.size(), 0.3), 0.5};

            const RatioForms a = phase_quadratics(w, p.channels, p.eve, p.noise).evaluate(phi);
            const RatioForms b = structured_phase_quadratics(w, p.channels, p.eve, p.noise).evaluate(phi);
            worst = std::max({worst, rel(a.numerator, b.numerator), rel(a.denominator, b.denominator),
                              rel(a.numerator_slope, b.numerator_slope),
                              rel(a.denominator_slope, b.denominator_slope)});
            const CVector gd = grad_phase(phi, phase_quadratics(w, p.channels, p.eve, p.noise), dual);
            const CVector gs = grad_phase(phi, structured_phase_quadratics(w, p.channels, p.eve, p.noise), dual);
            worst = std::max(worst, rel(gd, gs));
        }
        return make("structured_vs_dense", worst <= 1e-10, worst, 1e-10,
                    fmt("max rel difference %.3e over %.0f trials", worst, trials));
    }

    OracleReport check_ratio_routes(int trials, std::uint64_t seed)
    {
        double worst = 0.0;
        for (int i = 0; i < trials; ++i)
        {
            const std::uint64_t s = derive_seed(seed, kValidationStream, static_cast<std::uint64_t>(i));
            const SecrecyProblem p = reference_problem(32, s);
            CounterRng rng(s, kValidationStream);
            const CVector phi = random_phases(rng, p.num_elements());
            const CVector w = random_beam(rng, p.num_antennas(), p.p_max * rng.uniform());
            const RateRatio direct = lesr_ratio(phi, w, p.channels, p.eve, p.noise);
            const RatioForms via_phase = phase_quadratics(w, p.channels, p.eve, p.noise).evaluate(phi);
            const RatioForms via_beam = beam_quadratics(phi, p.channels, p.eve, p.noise).evaluate(w);
            worst = std::max({worst, rel(direct.numerator, via_phase.numerator),
                              rel(direct.denominator, via_phase.denominator),
                              rel(direct.numerator, via_beam.numerator),
                              rel(direct.denominator, via_beam.denominator)});
        }
        return make("ratio_three_routes", worst <= 1e-10, worst, 1e-10,
                    fmt("max rel difference %.3e over %.0f trials", worst, trials));
    }

    OracleReport check_expectation_identity(int trials, long n, double min_fraction, std::uint64_t seed)
    {
        int within = 0;
        double worst = 0.0;
        for (int i = 0; i < trials; ++i)
        {
            const std::uint64_t s = derive_seed(seed, kValidationStream, static_cast<std::uint64_t>(i));
            const SecrecyProblem p = reference_problem(32, s);
            CounterRng rng(s, kValidationStream);
            const CVector phi = random_phases(rng, p.num_elements());
            const CVector w = random_beam(rng, p.num_antennas(), p.p_max);
            const ExpectationCheck c =
                expectation_oracle(phi, w, p.channels, p.eve, n, derive_seed(s, streams::kMonteCarlo));
            worst = std::max(worst, std::abs(c.z_score));
            if (std::abs(c.z_score) <= 3.0)
                ++within;
        }
        const double frac = static_cast<double>(within) / trials;
        return make("expectation_identity", frac >= min_fraction, frac, min_fraction,
                    std::to_string(within) + "/" + std::to_string(trials) + " trials with |z| <= 3 at n = " +
                        std::to_string(n) + fmt(", max |z| %.2f", worst));
    }

    OracleReport check_jensen_bound(int random_points, int optimized, long n, std::uint64_t seed)
    {
        double worst = std::numeric_limits<double>::infinity();
        int violations = 0;
        const auto probe = [&](const Solution &sol, const SecrecyProblem &p, std::uint64_t s)
        {
            const EsrEstimate e = esr_estimate(sol, p, n, derive_seed(s, streams::kMonteCarlo));
            const double slack = e.mean - sol.lesr + 3.0 * e.std_error;
            worst = std::min(worst, slack);
            if (slack < 0.0)
                ++violations;
        };
        for (int i = 0; i < random_points + optimized; ++i)
        {
            const std::uint64_t s = derive_seed(seed, kValidationStream, static_cast<std::uint64_t>(i));
            const SecrecyProblem p = reference_problem(32, s);
            Solution sol;
            if (i < random_points)
            {
                CounterRng rng(s, kValidationStream);
                sol.phi = random_phases(rng, p.num_elements());
                sol.w = random_beam(rng, p.num_antennas(), p.p_max * (0.2 + 0.8 * rng.uniform()));
                sol.lesr = lesr(sol.phi, sol.w, p);
            }
            else
            {
                const auto [phi0, w0] = initial_point(p, s);
                sol = pdca_solve(p, PdcaConfig{}, phi0, w0).solution;
            }
            probe(sol, p, s);
        }
        return make("jensen_bound", violations == 0, worst, 0.0,
                    std::to_string(random_points) + " random + " + std::to_string(optimized) +
                        " optimized points, min (ESR - LESR + 3 stderr) = " + fmt("%.4f", worst));
    }

    std::vector<OracleReport> check_descent_and_feasibility(int seeds, std::uint64_t seed)
    {
        PdcaConfig cfg;
        cfg.record_steps = true;
        long steps = 0;
        int armijo_bad = 0, monotone_bad = 0, feasibility_bad = 0;
        double worst_violation = 0.0, worst_power_excess = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < seeds; ++i)
        {
            const std::uint64_t s = derive_seed(seed, kValidationStream, static_cast<std::uint64_t>(i));
            const SecrecyProblem p = reference_problem(32, s);
            const auto [phi0, w0] = initial_point(p, s);
            const PdcaResult r = pdca_solve(p, cfg, phi0, w0);

            for (const StepRecord &st : r.trace.steps)
            {
                ++steps;
                const double slack = 1e-12 * std::max(1.0, std::abs(st.f_before));
                const bool ok = st.accepted ? st.f_after <= st.f_before - st.armijo_c * st.alpha * st.grad_norm_sq + slack
                                            : st.f_after == st.f_before;
                if (!ok)
                    ++armijo_bad;
            }
            const auto &inner = r.trace.inner;
            for (std::size_t k = 1; k < inner.size(); ++k)
            {
                if (inner[k].outer != inner[k - 1].outer)
                    continue;
                const double slack = 1e-12 * std::max(1.0, std::abs(inner[k - 1].al_value));
                if (inner[k].al_value > inner[k - 1].al_value + slack)
                    ++monotone_bad;
            }
            const double excess = r.solution.w.squaredNorm() - p.p_max;
            worst_violation = std::max(worst_violation, r.trace.final_violation);
            worst_power_excess = std::max(worst_power_excess, excess);
            if (r.trace.final_violation > cfg.eta || excess > 1e-9 || unit_modulus_violation(r.solution.phi) > 1e-12)
                ++feasibility_bad;
        }
        char descent[200], feasible[200];
        std::snprintf(descent, sizeof descent, "%d solves, %ld line searches: %d Armijo violations, %d inner AL increases",
                      seeds, steps, armijo_bad, monotone_bad);
        std::snprintf(feasible, sizeof feasible,
                      "%d solves: %d infeasible (max violation %.2e vs eta %.0e, max ||w||^2 - P %.2e)", seeds,
                      feasibility_bad, worst_violation, cfg.eta, worst_power_excess);
        return {make("inner_descent", armijo_bad == 0 && monotone_bad == 0, armijo_bad + monotone_bad, 0.0, descent),
                make("feasibility", feasibility_bad == 0, feasibility_bad, 0.0, feasible)};
    }

    OracleReport check_toy_optimality(int seeds, int grid, double fraction, int min_passing, std::uint64_t seed)
    {
        Geometry geom;
        geom.num_antennas = 2;
        geom.ris_rows = 2;
        geom.ris_cols = 1;
        int passing = 0;
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < seeds; ++i)
        {
            const std::uint64_t s = derive_seed(seed, kValidationStream, static_cast<std::uint64_t>(i));
            const SecrecyProblem p = make_problem(geom, FadingStats{}, 5.0, s);
            const double best = toy_grid_lesr(p, grid);
            const auto [phi0, w0] = initial_point(p, s);
            const double got = pdca_solve(p, PdcaConfig{}, phi0, w0).solution.lesr;
            const double ratio = best > 0.0 ? got / best : (got >= 0.0 ? 1.0 : 0.0);
            worst = std::min(worst, ratio);
            if (got >= fraction * best)
                ++passing;
        }
        return make("toy_grid_optimality", passing >= min_passing, passing, min_passing,
                    std::to_string(passing) + "/" + std::to_string(seeds) + " seeds with PDCA >= " +
                        fmt("%.2f x grid optimum (%.0f^2 grid), worst ratio ", fraction, grid) + fmt("%.4f", worst));
    }

    std::vector<OracleReport> check_trends(const TrendOptions &opt)
    {
        ExperimentConfig cfg;
        cfg.p_max_dbm = opt.p_max_dbm;
        cfg.sweeps.elements = opt.elements;
        cfg.n_mc = opt.n_mc;
        cfg.n_user_realizations = opt.realizations;
        cfg.seed = opt.seed;
        cfg.schemes = {Scheme::Pdca, Scheme::NoRis, Scheme::AoElementwise};
        const std::vector<SweepRow> rows = run_sweep(cfg, SweepKind::Elements, opt.workers);

        const std::size_t n_pts = opt.elements.size();
        const auto row = [&](std::size_t pt, std::size_t scheme)
        { return rows[pt * 3 + scheme]; };
        const auto se = [](double a, double b)
        { return std::sqrt(a * a + b * b); };

        double vs_noris = std::numeric_limits<double>::infinity();
        double growth = std::numeric_limits<double>::infinity();
        double gap = -std::numeric_limits<double>::infinity();
        double vs_ao = std::numeric_limits<double>::infinity();
        std::string values;
        for (std::size_t k = 0; k < n_pts; ++k)
        {
            const SweepRow pd = row(k, 0), nr = row(k, 1), ao = row(k, 2);
            vs_noris = std::min(vs_noris, pd.esr_mean - nr.esr_mean);
            gap = std::max(gap, pd.esr_mean - pd.lesr);
            vs_ao = std::min(vs_ao, pd.esr_mean - ao.esr_mean + 2.0 * se(pd.esr_stderr, ao.esr_stderr));
            if (k > 0)
            {
                const SweepRow prev = row(k - 1, 0);
                growth = std::min(growth, pd.esr_mean - prev.esr_mean + 2.0 * se(pd.esr_stderr, prev.esr_stderr));
            }
            char buf[200];
            std::snprintf(buf, sizeof buf, "%sN=%d pdca %.3f (lesr %.3f) no_ris %.3f ao_ew %.3f", k ? "; " : "",
                          pd.num_elements, pd.esr_mean, pd.lesr, nr.esr_mean, ao.esr_mean);
            values += buf;
        }
        if (n_pts < 2)
            growth = 0.0;
        return {make("trend_pdca_above_no_ris", vs_noris >= 0.0, vs_noris, 0.0,
                     fmt("min ESR(pdca) - ESR(no_ris) = %.4f; ", vs_noris) + values),
                make("trend_pdca_nondecreasing_in_n", growth >= 0.0, growth, 0.0,
                     fmt("min step ESR(N_k+1) - ESR(N_k) + 2 stderr = %.4f", growth)),
                make("trend_jensen_gap", gap <= opt.max_gap, gap, opt.max_gap,
                     fmt("max ESR - LESR (pdca) = %.4f (limit %.2f)", gap, opt.max_gap)),
                make("trend_pdca_vs_ao_ew", vs_ao >= 0.0, vs_ao, 0.0,
                     fmt("min ESR(pdca) - ESR(ao_ew) + 2 stderr = %.4f", vs_ao))};
    }

    OracleReport check_complexity(const std::vector<int> &elements, int cycles, double max_slope)
    {
        PdcaConfig cfg;
        cfg.max_inner = cycles;
        cfg.eps_inner = std::numeric_limits<double>::min();
        std::vector<double> xs, ys;
        std::string detail;
        for (int n : elements)
        {
            const SecrecyProblem p = reference_problem(n, 7);
            const auto [phi0, w0] = initial_point(p, 7);
            const DualState dual{RVector::Zero(p.num_elements()), 1.0};
            long iters = 0;
            double seconds = 0.0;
            while (seconds < 0.05 || iters < 4 * cycles)
            {
                const auto t0 = std::chrono::steady_clock::now();
                iters += bsca_inner(phi0, w0, dual, p, cfg).iterations;
                seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            }
            const double per_cycle = seconds / static_cast<double>(iters);
            xs.push_back(std::log(static_cast<double>(n)));
            ys.push_back(std::log(per_cycle));
            detail += (detail.empty() ? "" : ", ") + std::string("N=") + std::to_string(n) +
                      fmt(": %.2f us/cycle", per_cycle * 1e6);
        }
        const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
        const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        const double slope = sxy / sxx;
        return make("inner_loop_complexity", slope <= max_slope, slope, max_slope,
                    fmt("log-log slope %.3f (limit %.1f); ", slope, max_slope) + detail);
    }

    std::vector<OracleReport> run_validation(bool fast)
    {
        GradientCheckOptions g;
        if (fast)
        {
            g.instances = 5;
            g.directions = 4;
        }
        std::vector<OracleReport> out;
        out.push_back(check_gradients(g));
        out.push_back(check_structured_dense(fast ? 10 : 50, 21));
        out.push_back(check_ratio_routes(fast ? 10 : 50, 22));
        out.push_back(fast ? check_expectation_identity(30, 10000, 0.9, 23)
                           : check_expectation_identity(100, 100000, 0.97, 23));
        out.push_back(fast ? check_jensen_bound(3, 1, 10000, 24) : check_jensen_bound(10, 5, 100000, 24));
        for (OracleReport &r : check_descent_and_feasibility(fast ? 3 : 20, 25))
            out.push_back(std::move(r));
        out.push_back(fast ? check_toy_optimality(10, 180, 0.98, 9, 26) : check_toy_optimality(20, 720, 0.98, 18, 26));
        return out;
    }

    std::string format_report(const OracleReport &r)
    {
        return std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail;
    }
} // namespace rissec
