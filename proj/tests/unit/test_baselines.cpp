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

#include <Eigen/Eigenvalues>

using namespace rissec;
using namespace rissec::test;

namespace
{
    double rayleigh(const CVector &v, const CMatrix &a, const CMatrix &b)
    {
        return std::real(v.dot(a * v)) / std::real(v.dot(b * v));
    }

    double beam_ratio(const CVector &w, const BeamQuadratics &bq)
    {
        return (std::real(w.dot(bq.a_mat * w)) + 1.0) / (std::real(w.dot(bq.b_mat * w)) + 1.0);
    }
} // namespace

TEST_CASE("scheme ids and labels", "[baselines]")
{
    for (Scheme s : {Scheme::Pdca, Scheme::NoRis, Scheme::AoElementwise, Scheme::RandomPhase})
        CHECK(parse_scheme(scheme_id(s)) == s);
    CHECK(scheme_label(Scheme::AoElementwise).find("substitute") != std::string_view::npos);
    CHECK(scheme_label(Scheme::AoElementwise).find(',') == std::string_view::npos);
    CHECK_THROWS_AS(parse_scheme("sdr_ao"), std::invalid_argument);
}

TEST_CASE("dominant_gen_eigvec: diagonal example", "[baselines]")
{
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 1.0;
    const GenEigResult r = dominant_gen_eigvec(a, CMatrix::Identity(2, 2));
    CHECK_THAT(r.value, WithinRel(2.0, 1e-10));
    CHECK_THAT(std::abs(r.vector[0]), WithinRel(1.0, 1e-8));
    CHECK_THAT(r.vector.norm(), WithinRel(1.0, 1e-14));
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("dominant_gen_eigvec: A = B is degenerate with value 1", "[baselines]")
{
    CounterRng rng(1, kTestStream);
    const CMatrix b = random_hermitian_psd(rng, 4, 0.5);
    const GenEigResult r = dominant_gen_eigvec(b, b);
    CHECK_THAT(r.value, WithinRel(1.0, 1e-10));
    CHECK(r.degenerate);
}

TEST_CASE("dominant_gen_eigvec rejects a non-PD B", "[baselines]")
{
    CMatrix b = CMatrix::Identity(3, 3);
    b(2, 2) = -1.0;
    CHECK_THROWS_AS(dominant_gen_eigvec(CMatrix::Identity(3, 3), b), std::domain_error);
}

TEST_CASE("dominant_gen_eigvec matches a library eigensolver and random sampling", "[baselines][oracle]")
{
    CounterRng rng(2, kTestStream);
    for (int t = 0; t < 5; ++t)
    {
        const CMatrix a = random_hermitian_psd(rng, 4);
        const CMatrix b = random_hermitian_psd(rng, 4, 0.1);
        const GenEigResult r = dominant_gen_eigvec(a, b);

        const Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> ges(a, b);
        const double ref = ges.eigenvalues().maxCoeff();
        CHECK_THAT(r.value, WithinRel(ref, 1e-9));
        CHECK_THAT(rayleigh(r.vector, a, b), WithinRel(ref, 1e-9));

        // Sampling never beats the power-iteration value.
        double sampled = 0.0;
        for (int k = 0; k < (t == 0 ? 1000000 : 20000); ++k)
            sampled = std::max(sampled, rayleigh(random_cvec(rng, 4), a, b));
        CHECK(r.value >= sampled * (1.0 - 1e-6));
    }
}

TEST_CASE("no_ris_beamformer: M = 1 closed form", "[baselines]")
{
    Geometry g;
    g.num_antennas = 1;
    const SecrecyProblem p = make_problem(g, FadingStats{}, 5.0, 3);
    const BaselineResult r = no_ris_beamformer(p);
    const double snr_u = std::norm(p.channels.h_au[0]) * p.p_max / p.noise.user;
    const double snr_e = std::real(p.eve.g_a(0, 0)) * p.p_max / p.noise.eve;
    const double expected = std::max(0.0, std::log2((1.0 + snr_u) / (1.0 + snr_e)));
    CHECK_THAT(r.solution.lesr, WithinAbs(expected, 1e-12));
    if (expected > 0.0)
        CHECK_THAT(r.solution.w.squaredNorm(), WithinRel(p.p_max, 1e-12));
    CHECK(r.solution.phi.norm() == 0.0);
}

TEST_CASE("no_ris_beamformer: silent Eve gives a matched filter", "[baselines]")
{
    SecrecyProblem p = problem(32, 4);
    p.eve.ap_eve.path_gain = 0.0;
    p.eve.g_a.setZero();
    const BaselineResult r = no_ris_beamformer(p);
    const CVector &h = p.channels.h_au;
    CHECK_THAT(std::abs(h.dot(r.solution.w)), WithinRel(h.norm() * r.solution.w.norm(), 1e-9));
}

TEST_CASE("no_ris_beamformer: M = 2 grid over the unit sphere", "[baselines][oracle]")
{
    Geometry g;
    g.num_antennas = 2;
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        const SecrecyProblem p = make_problem(g, FadingStats{}, 5.0, 20 + s);
        const BaselineResult r = no_ris_beamformer(p);
        const BeamQuadratics bq = beam_quadratics(CVector::Zero(p.num_elements()), p.channels, p.eve, p.noise);
        // Unit sphere in C^2 modulo global phase: (cos t, sin t e^{j f}).
        double best = 1.0;
        const int k = 100;
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < k; ++j)
            {
                const double t = 0.5 * kPi * i / k, f = 2.0 * kPi * j / k;
                CVector v(2);
                v << std::cos(t), std::polar(std::sin(t), f);
                best = std::max(best, beam_ratio(std::sqrt(p.p_max) * v, bq));
            }
        const double grid = std::log2(best);
        CHECK(r.solution.lesr >= grid - 1e-9);
        CHECK(r.solution.lesr - grid <= 1e-3 * std::max(1.0, grid));
    }
}

TEST_CASE("no_ris_beamformer is optimal against feasible perturbations", "[baselines][property]")
{
    CounterRng rng(5, kTestStream);
    const SecrecyProblem p = problem(32, 5);
    const BaselineResult r = no_ris_beamformer(p);
    const BeamQuadratics bq = beam_quadratics(r.solution.phi, p.channels, p.eve, p.noise);
    const double best = beam_ratio(r.solution.w, bq);
    for (int t = 0; t < 100; ++t)
    {
        const CVector w = project_power(r.solution.w + 0.3 * std::sqrt(p.p_max) * rng.uniform() * random_cvec(rng, 8),
                                        p.p_max);
        CHECK(beam_ratio(w, bq) <= best + 1e-9 * best);
    }
}

TEST_CASE("optimal_beam_for_ratio returns w = 0 when the ratio cannot exceed one", "[baselines]")
{
    CounterRng rng(6, kTestStream);
    const CMatrix b = random_hermitian_psd(rng, 3, 1.0);
    const CMatrix a = 0.01 * b;
    CHECK(optimal_beam_for_ratio(a, b, 1.0).norm() == 0.0);
}

TEST_CASE("ao_elementwise: N = 0 is the no-RIS beamformer", "[baselines]")
{
    SecrecyProblem p = problem(32, 7);
    p.channels = without_ris(p.channels);
    p.eve = without_ris(p.eve);
    const BaselineResult ao = ao_elementwise(p, AoConfig{}, 7);
    const BaselineResult nr = no_ris_beamformer(p);
    CHECK_THAT(ao.solution.lesr, WithinAbs(nr.solution.lesr, 1e-12));
}

TEST_CASE("ao_elementwise: LESR never decreases across rounds", "[baselines][property]")
{
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        const SecrecyProblem p = problem(16, 30 + s);
        const BaselineResult r = ao_elementwise(p, AoConfig{}, s);
        REQUIRE(r.lesr_history.size() >= 2);
        for (std::size_t k = 1; k < r.lesr_history.size(); ++k)
            CHECK(r.lesr_history[k] >= r.lesr_history[k - 1] - 1e-12);
        CHECK(unit_modulus_violation(r.solution.phi) <= 1e-12);
        CHECK(r.solution.w.squaredNorm() <= p.p_max + 1e-9);
        CHECK_THAT(r.solution.lesr, WithinAbs(lesr(r.solution.phi, r.solution.w, p), 1e-12));
    }
}

TEST_CASE("ao_elementwise: M = N = 2 within 0.05 of a phase grid", "[baselines][oracle]")
{
    Geometry g;
    g.num_antennas = 2;
    g.ris_rows = 2;
    g.ris_cols = 1;
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        const SecrecyProblem p = make_problem(g, FadingStats{}, 5.0, 40 + s);
        double best = 0.0;
        const int k = 120;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
            {
                CVector phi(2);
                phi << std::polar(1.0, 2.0 * kPi * i / k), std::polar(1.0, 2.0 * kPi * j / k);
                const BeamQuadratics bq = beam_quadratics(phi, p.channels, p.eve, p.noise);
                const Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> ges(
                    bq.a_mat + CMatrix::Identity(2, 2) / p.p_max, bq.b_mat + CMatrix::Identity(2, 2) / p.p_max);
                best = std::max(best, std::log2(std::max(1.0, ges.eigenvalues().maxCoeff())));
            }
        const BaselineResult r = ao_elementwise(p, AoConfig{}, s);
        INFO("seed " << s << " ao " << r.solution.lesr << " grid " << best);
        CHECK(r.solution.lesr >= best - 0.05);
    }
}

TEST_CASE("random_phase_mrt: deterministic, full power, unit modulus", "[baselines]")
{
    const SecrecyProblem p = problem(32, 8);
    const BaselineResult a = random_phase_mrt(p, 8), b = random_phase_mrt(p, 8);
    CHECK((a.solution.phi - b.solution.phi).norm() == 0.0);
    CHECK((a.solution.w - b.solution.w).norm() == 0.0);
    CHECK_THAT(a.solution.w.squaredNorm(), WithinRel(p.p_max, 1e-14));
    CHECK(unit_modulus_violation(a.solution.phi) <= 1e-15);
}

TEST_CASE("random_phase_mrt stays below PDCA on average", "[baselines][cross]")
{
    double rnd = 0.0, pdca = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        const SecrecyProblem p = problem(32, 500 + s);
        rnd += random_phase_mrt(p, s).solution.lesr;
        const auto [phi0, w0] = initial_point(p, s);
        pdca += pdca_solve(p, PdcaConfig{}, phi0, w0).solution.lesr;
    }
    CHECK(rnd <= pdca);
}

TEST_CASE("AoConfig validation", "[baselines]")
{
    AoConfig c;
    CHECK(c.grid_points == 360);
    CHECK(c.max_rounds == 50);
    CHECK(c.tolerance == 1e-4);
    c.grid_points = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("PDCA on M = N = 2 reaches 0.98 of a phase grid from a positive-secrecy start", "[baselines][oracle]")
{
    // Starts with negative secrecy can collapse onto the w = 0 stationary point, see the README.
    Geometry g;
    g.num_antennas = 2;
    g.ris_rows = 2;
    g.ris_cols = 1;
    int checked = 0;
    for (std::uint64_t s = 0; s < 12; ++s)
    {
        const SecrecyProblem p = make_problem(g, FadingStats{}, 5.0, 60 + s);
        const auto [phi0, w0] = initial_point(p, s);
        if (lesr_unclamped(phi0, w0, p.channels, p.eve, p.noise) <= 0.0)
            continue;
        ++checked;
        double best = 0.0;
        const int k = 180;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
            {
                CVector phi(2);
                phi << std::polar(1.0, 2.0 * kPi * i / k), std::polar(1.0, 2.0 * kPi * j / k);
                const BeamQuadratics bq = beam_quadratics(phi, p.channels, p.eve, p.noise);
                best = std::max(best, lesr(phi, optimal_beam_for_ratio(bq.a_mat, bq.b_mat, p.p_max), p));
            }
        const double got = pdca_solve(p, PdcaConfig{}, phi0, w0).solution.lesr;
        INFO("seed " << s << " pdca " << got << " grid " << best);
        CHECK(got >= 0.98 * best);
    }
    CHECK(checked >= 4);
}
