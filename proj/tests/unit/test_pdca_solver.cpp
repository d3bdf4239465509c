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

#include "support.hpp"

#include <limits>

using namespace rissec;
using namespace rissec::test;

namespace
{
    // Central difference of f along d against Re<g, d>, relative to ||g|| ||d||.
    template <class F>
    double fd_error(const F &f, const CVector &x, const CVector &g, const CVector &d, double h = 1e-6)
    {
        const double fd = (f(x + h * d) - f(x - h * d)) / (2.0 * h);
        return std::abs(fd - std::real(g.dot(d))) / (g.norm() * d.norm());
    }
} // namespace

TEST_CASE("PdcaConfig defaults and validation", "[pdca]")
{
    const PdcaConfig c;
    CHECK(c.rho0 == 1.0);
    CHECK(c.rho_decrease == 0.7);
    CHECK(c.eta == 1e-3);
    CHECK(c.eps_outer == 1e-4);
    CHECK(c.eps_inner == 1e-5);
    CHECK(c.shrink_phase == 0.5);
    CHECK(c.armijo_beam == 1e-3);
    CHECK(c.max_outer == 100);
    CHECK(c.max_inner == 200);
    CHECK(c.max_backtracks == 40);
    CHECK_NOTHROW(c.validate());

    PdcaConfig bad;
    bad.rho_decrease = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = PdcaConfig{};
    bad.armijo_phase = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = PdcaConfig{};
    bad.max_inner = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("grad_phase: penalty vanishes on the unit circle with lambda = 0", "[pdca]")
{
    const SecrecyProblem p = problem(32, 1);
    CounterRng rng(1, kTestStream);
    const CVector phi = random_phases(rng, 32);
    const CVector w = random_beam(rng, 8, p.p_max);
    const PhaseQuadratics pq = phase_quadratics(w, p.channels, p.eve, p.noise);
    const DualState dual{RVector::Zero(32), 0.3};
    // Fraction-only gradient from the quadratics, independent of the library's penalty code.
    const RatioForms f = pq.evaluate(phi);
    const CVector fraction = -2.0 * (f.numerator_slope * f.denominator - f.numerator * f.denominator_slope) /
                             (f.denominator * f.denominator);
    CHECK((grad_phase(phi, pq, dual) - fraction).norm() <= 1e-12 * fraction.norm());
}

TEST_CASE("grad_phase: constant ratio gives a zero fraction gradient", "[pdca]")
{
    PhaseQuadratics pq;
    pq.c = CMatrix::Zero(4, 4);
    pq.d = CMatrix::Zero(4, 4);
    pq.c1 = CVector::Zero(4);
    pq.d1 = CVector::Zero(4);
    pq.c2 = 3.0;
    pq.d2 = 2.0;
    CounterRng rng(2, kTestStream);
    const CVector phi = random_phases(rng, 4);
    CHECK(grad_phase(phi, pq, DualState{RVector::Zero(4), 1.0}).norm() <= 1e-15);
    // Zero entries take the zero-penalty-gradient convention.
    CHECK(grad_phase(CVector::Zero(4), pq, DualState{RVector::Ones(4), 1.0}).norm() == 0.0);
}

TEST_CASE("grad_beam examples", "[pdca]")
{
    CounterRng rng(3, kTestStream);
    BeamQuadratics bq;
    bq.a = random_cvec(rng, 4);
    bq.a_mat = bq.a * bq.a.adjoint();
    bq.b_mat = random_hermitian_psd(rng, 4);
    CHECK(grad_beam(CVector::Zero(4), bq).norm() == 0.0);
    bq.a_mat = bq.b_mat;
    CHECK(grad_beam(random_cvec(rng, 4), bq).norm() <= 1e-14);
}

TEST_CASE("phase and beam gradients match central differences", "[pdca][property]")
{
    CounterRng rng(4, kTestStream);
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        const SecrecyProblem p = problem(32, 10 + s);
        CVector phi = random_phases(rng, 32);
        DualState dual{RVector(32), 0.2 + rng.uniform()};
        for (int i = 0; i < 32; ++i)
        {
            phi[i] *= 0.6 + 0.8 * rng.uniform();
            dual.lambda[i] = rng.gaussian();
        }
        const CVector w = random_beam(rng, 8, 0.5 * p.p_max);
        const PhaseQuadratics dense = phase_quadratics(w, p.channels, p.eve, p.noise);
        const StructuredPhaseQuadratics fast = structured_phase_quadratics(w, p.channels, p.eve, p.noise);
        const BeamQuadratics bq = beam_quadratics(phi, p.channels, p.eve, p.noise);
        for (int k = 0; k < 10; ++k)
        {
            CVector d = random_cvec(rng, 32);
            d /= d.norm();
            worst = std::max(worst, fd_error([&](const CVector &x) { return phase_objective(x, dense, dual); }, phi,
                                             grad_phase(phi, dense, dual), d));
            worst = std::max(worst, fd_error([&](const CVector &x) { return phase_objective(x, fast, dual); }, phi,
                                             grad_phase(phi, fast, dual), d));
            CVector e = random_cvec(rng, 8);
            e /= e.norm();
            worst = std::max(worst, fd_error([&](const CVector &x) { return beam_objective(x, bq); }, w,
                                             grad_beam(w, bq), e));
        }
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("project_power examples", "[pdca]")
{
    CounterRng rng(5, kTestStream);
    const double pmax = 2.0;
    const CVector half = random_beam(rng, 6, pmax / 2.0);
    CHECK((project_power(half, pmax) - half).norm() == 0.0);
    const CVector big = random_beam(rng, 6, 4.0 * pmax);
    CHECK((project_power(big, pmax) - 0.5 * big).norm() <= 1e-15 * big.norm());
    for (int t = 0; t < 10000; ++t)
    {
        const CVector w = random_cvec(rng, 6) * (3.0 * rng.uniform());
        REQUIRE(project_power(w, pmax).squaredNorm() <= pmax * (1.0 + 1e-15));
    }
    CHECK_THROWS_AS(project_power(half, 0.0), std::domain_error);
}

TEST_CASE("armijo_step examples", "[pdca]")
{
    const VectorObjective half_sq = [](const CVector &x)
    { return 0.5 * x.squaredNorm(); };

    SECTION("zero gradient holds at the first trial and leaves x unchanged")
    {
        const CVector x = CVector::Ones(3);
        const LineSearchResult r = armijo_step(half_sq, x, CVector::Zero(3), 1.0, 0.5, 0.1, 10);
        CHECK(r.accepted);
        CHECK(r.trials == 1);
        CHECK((r.x - x).norm() == 0.0);
    }
    SECTION("hand-evaluated quadratic step")
    {
        CVector x = CVector::Zero(2);
        x[0] = 1.0;
        const LineSearchResult r = armijo_step(half_sq, x, x, 1.0, 0.5, 0.1, 10);
        CHECK(r.accepted);
        CHECK(r.trials == 1);
        CHECK(r.alpha == 0.5);
        CHECK_THAT(r.f_end, WithinAbs(0.125, 1e-15));
        CHECK(r.f_end <= 0.5 - 0.1 * 0.5 * 1.0);
    }
    SECTION("no acceptable step within the cap")
    {
        const VectorObjective up = [](const CVector &x)
        { return -std::real(x[0]); }; // grad says go down, objective rises that way
        const CVector x = CVector::Zero(1);
        const LineSearchResult r = armijo_step(up, x, CVector::Ones(1), 1.0, 0.5, 0.1, 5);
        CHECK_FALSE(r.accepted);
        CHECK(r.trials == 5);
        CHECK((r.x - x).norm() == 0.0);
    }
    SECTION("non-finite trials are failures")
    {
        const VectorObjective wall = [](const CVector &x)
        { return std::abs(x[0]) > 0.4 ? std::numeric_limits<double>::quiet_NaN() : 0.5 * x.squaredNorm(); };
        CVector x = CVector::Zero(1);
        x[0] = 0.25;
        // alpha = 4 lands at -0.75 (NaN), alpha = 2 at -0.25 (no decrease), alpha = 1 at 0.
        const LineSearchResult r = armijo_step(wall, x, x, 8.0, 0.5, 0.1, 10);
        CHECK(r.accepted);
        CHECK(r.trials == 3);
        CHECK(r.x[0] == 0.0);
    }
}

TEST_CASE("bsca_inner: infinite eps' runs one cycle", "[pdca]")
{
    const SecrecyProblem p = problem(32, 6);
    const auto [phi0, w0] = initial_point(p, 6);
    PdcaConfig cfg;
    cfg.eps_inner = std::numeric_limits<double>::infinity();
    const InnerResult r = bsca_inner(phi0, w0, DualState{RVector::Zero(32), 1.0}, p, cfg);
    CHECK(r.iterations == 1);
}

TEST_CASE("bsca_inner: zero gradients stop after one unchanged cycle", "[pdca]")
{
    // Eve silent and user gain zero: the ratio is identically 1, both gradients vanish.
    SecrecyProblem p = problem(16, 7);
    p.channels = ScenarioChannels::compose(CVector::Zero(8), CMatrix::Zero(16, 8), CVector::Zero(16));
    p.eve.g_a.setZero();
    p.eve.g_i.setZero();
    p.eve.g_ai.setZero();
    p.eve.ap_eve.path_gain = 0.0;
    p.eve.ris_eve.path_gain = 0.0;
    CounterRng rng(7, kTestStream);
    const CVector phi0 = random_phases(rng, 16);
    const CVector w0 = random_beam(rng, 8, p.p_max);
    const InnerResult r = bsca_inner(phi0, w0, DualState{RVector::Zero(16), 1.0}, p, PdcaConfig{});
    CHECK(r.iterations == 1);
    CHECK((r.phi - phi0).norm() == 0.0);
    CHECK((r.w - w0).norm() <= 1e-14 * w0.norm()); // projection rounding only
}

TEST_CASE("bsca_inner: minimization-form AL never increases", "[pdca][property]")
{
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        const SecrecyProblem p = problem(16, 200 + s);
        const auto [phi0, w0] = initial_point(p, s);
        PdcaConfig cfg;
        cfg.record_steps = true;
        SolveTrace trace;
        CounterRng rng(s, kTestStream);
        DualState dual{RVector(16), 0.5};
        for (int i = 0; i < 16; ++i)
            dual.lambda[i] = rng.gaussian();
        bsca_inner(phi0, w0, dual, p, cfg, &trace);
        REQUIRE_FALSE(trace.inner.empty());
        double prev = -al_ratio_objective(phi0, w0, dual, p.channels, p.eve, p.noise);
        for (const InnerRecord &r : trace.inner)
        {
            CHECK(r.al_value <= prev + 1e-12 * std::max(1.0, std::abs(prev)));
            prev = r.al_value;
        }
        for (const StepRecord &st : trace.steps)
            if (st.accepted)
                CHECK(st.f_after <= st.f_before - st.armijo_c * st.alpha * st.grad_norm_sq +
                                        1e-12 * std::max(1.0, std::abs(st.f_before)));
    }
}

TEST_CASE("initial_point is feasible and deterministic", "[pdca]")
{
    const SecrecyProblem p = problem(32, 8);
    const auto [phi, w] = initial_point(p, 8);
    const auto [phi2, w2] = initial_point(p, 8);
    CHECK((phi - phi2).norm() == 0.0);
    CHECK(unit_modulus_violation(phi) <= 1e-15);
    CHECK_THAT(w.squaredNorm(), WithinRel(p.p_max, 1e-12));
    // Matched filter: w parallel to the effective user channel.
    const CVector a = effective_user_channel(phi, p.channels);
    CHECK_THAT(std::abs(a.dot(w)), WithinRel(a.norm() * w.norm(), 1e-12));
}

TEST_CASE("pdca_solve: feasibility, trace structure and penalty monotonicity", "[pdca]")
{
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        const SecrecyProblem p = problem(32, 300 + s);
        const auto [phi0, w0] = initial_point(p, s);
        const PdcaConfig cfg;
        const PdcaResult r = pdca_solve(p, cfg, phi0, w0);
        CHECK(r.trace.converged);
        CHECK_FALSE(r.trace.truncated);
        CHECK(r.trace.final_violation <= cfg.eta);
        CHECK(unit_modulus_violation(r.solution.phi) <= 1e-12);
        CHECK(r.solution.w.squaredNorm() <= p.p_max + 1e-9);
        CHECK_THAT(r.solution.lesr, WithinAbs(lesr(r.solution.phi, r.solution.w, p), 1e-15));
        // Hard projection barely moves the bound once the violation is within eta.
        CHECK(std::abs(r.solution.lesr - r.trace.lesr_before_projection) <= 0.01);
        CHECK(r.solution.lesr > lesr(phi0, w0, p));

        double rho = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < r.trace.outer.size(); ++k)
        {
            const OuterRecord &o = r.trace.outer[k];
            CHECK(o.rho <= rho);
            rho = o.rho;
            CHECK(o.multiplier_updated == (o.violation <= cfg.eta));
            if (k + 1 < r.trace.outer.size())
            {
                const double next_rho = r.trace.outer[k + 1].rho;
                CHECK(next_rho == (o.multiplier_updated ? o.rho : cfg.rho_decrease * o.rho));
            }
        }
        CHECK(r.trace.outer.back().violation <= cfg.eta);
    }
}

TEST_CASE("pdca_solve: truncation returns the best projected iterate", "[pdca]")
{
    const SecrecyProblem p = problem(32, 9);
    const auto [phi0, w0] = initial_point(p, 9);
    PdcaConfig cfg;
    cfg.max_outer = 2;
    const PdcaResult r = pdca_solve(p, cfg, phi0, w0);
    CHECK(r.trace.truncated);
    CHECK_FALSE(r.trace.converged);
    CHECK(unit_modulus_violation(r.solution.phi) <= 1e-12);
    CHECK(r.trace.outer.size() == 2);
    CHECK(r.solution.lesr >= lesr(phi0, w0, p) - 1e-12);
}

TEST_CASE("pdca_solve rejects infeasible starts", "[pdca]")
{
    const SecrecyProblem p = problem(32, 10);
    const auto [phi0, w0] = initial_point(p, 10);
    CHECK_THROWS_AS(pdca_solve(p, PdcaConfig{}, phi0, 2.0 * w0), std::invalid_argument);
    CHECK_THROWS_AS(pdca_solve(p, PdcaConfig{}, phi0.head(5), w0), std::invalid_argument);
}

TEST_CASE("pdca_solve with N = 0 matches the no-RIS beamformer", "[pdca][cross]")
{
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        SecrecyProblem p = problem(32, 400 + s);
        p.channels = without_ris(p.channels);
        p.eve = without_ris(p.eve);
        const auto [phi0, w0] = initial_point(p, s);
        const PdcaResult r = pdca_solve(p, PdcaConfig{}, phi0, w0);
        const BaselineResult nr = no_ris_beamformer(p);
        INFO("seed " << s << " pdca " << r.solution.lesr << " no_ris " << nr.solution.lesr);
        CHECK(std::abs(r.solution.lesr - nr.solution.lesr) <= 1e-4);
    }
}
