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

#include "rissec/baselines.hpp"

#include "rissec/pdca_solver.hpp"

#include <stdexcept>
#include <string>

namespace rissec
{
    namespace
    {
        constexpr int kMaxPowerIterations = 10000;
        constexpr double kEigTolerance = 1e-10;
        constexpr double kGapTolerance = 1e-12;

        struct PowerResult
        {
            CVector y;
            double value = 0.0;
            int iterations = 0;
        };

        // Power iteration on a Hermitian PSD matrix, started from its largest column.
        PowerResult power_iteration(const CMatrix &c)
        {
            PowerResult res;
            const auto n = c.rows();
            Eigen::Index start = 0;
            c.colwise().squaredNorm().maxCoeff(&start);
            CVector y = c.col(start);
            if (y.norm() == 0.0)
            {
                y = CVector::Zero(n);
                y[0] = 1.0;
            }
            y.normalize();
            double value = y.dot(c * y).real();
            for (int it = 1; it <= kMaxPowerIterations; ++it)
            {
                CVector next = c * y;
                const double nn = next.norm();
                res.iterations = it;
                if (nn == 0.0)
                    break;
                y = next / nn;
                const double updated = y.dot(c * y).real();
                const bool done = std::abs(updated - value) <= kEigTolerance * std::max(std::abs(updated), 1e-300);
                value = updated;
                if (done)
                    break;
            }
            res.y = y;
            res.value = value;
            return res;
        }
    } // namespace

    std::string_view scheme_id(Scheme s)
    {
        switch (s)
        {
        case Scheme::Pdca:
            return "pdca";
        case Scheme::NoRis:
            return "no_ris";
        case Scheme::AoElementwise:
            return "ao_ew";
        case Scheme::RandomPhase:
            return "random_mrt";
        }
        return "unknown";
    }

    std::string_view scheme_label(Scheme s)
    {
        switch (s)
        {
        case Scheme::Pdca:
            return "PDCA";
        case Scheme::NoRis:
            return "Opt w/o RIS";
        case Scheme::AoElementwise:
            return "AO-ew (element-wise substitute; not SDR-AO)";
        case Scheme::RandomPhase:
            return "Random phase + MRT";
        }
        return "unknown";
    }

    Scheme parse_scheme(std::string_view id)
    {
        for (Scheme s : {Scheme::Pdca, Scheme::NoRis, Scheme::AoElementwise, Scheme::RandomPhase})
            if (scheme_id(s) == id)
                return s;
        throw std::invalid_argument("unknown scheme '" + std::string(id) + "'");
    }

    GenEigResult dominant_gen_eigvec(const CMatrix &a, const CMatrix &b)
    {
        if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
            throw std::invalid_argument("dominant_gen_eigvec: A and B must be square and of equal size");
        const auto n = a.rows();
        GenEigResult res;
        if (n == 0)
            return res;

        const Eigen::LLT<CMatrix> llt(b);
        if (llt.info() != Eigen::Success)
            throw std::domain_error("dominant_gen_eigvec: B is not positive definite");
        const auto lower = llt.matrixL();

        // C = L^{-1} A L^{-H} shares its eigenvalues with B^{-1} A.
        const CMatrix x = lower.solve(a);
        CMatrix c = lower.solve(CMatrix(x.adjoint()));
        c = 0.5 * (c + c.adjoint()).eval();

        const PowerResult top = power_iteration(c);
        res.iterations = top.iterations;

        // Second eigenvalue from the deflated matrix, to flag ties.
        if (n > 1)
        {
            const CMatrix deflated = c - top.value * top.y * top.y.adjoint();
            const PowerResult second = power_iteration(deflated);
            res.degenerate = top.value - second.value < kGapTolerance * std::max(1.0, std::abs(top.value));
        }

        CVector v = llt.matrixU().solve(top.y); // L^{-H} y
        v.normalize();
        res.vector = v;
        res.value = v.dot(a * v).real() / v.dot(b * v).real();
        return res;
    }

    CVector optimal_beam_for_ratio(const CMatrix &a_mat, const CMatrix &b_mat, double p_max, int *iterations)
    {
        const auto m = a_mat.rows();
        const CMatrix shift = CMatrix::Identity(m, m) / p_max;
        const GenEigResult g = dominant_gen_eigvec(a_mat + shift, b_mat + shift);
        if (iterations)
            *iterations = g.iterations;
        if (!(g.value > 1.0))
            return CVector::Zero(m);
        return std::sqrt(p_max) * g.vector;
    }

    BaselineResult no_ris_beamformer(const SecrecyProblem &problem)
    {
        const ScenarioChannels &sc = problem.channels;
        const CMatrix a0 = sc.h_au * sc.h_au.adjoint() / problem.noise.user;
        const CMatrix b0 = problem.eve.g_a / problem.noise.eve;

        BaselineResult res;
        res.scheme = Scheme::NoRis;
        res.solution.phi = CVector::Zero(problem.num_elements());
        res.solution.w = optimal_beam_for_ratio(a0, b0, problem.p_max, &res.iterations);
        res.solution.lesr = lesr(res.solution.phi, res.solution.w, problem);
        return res;
    }

    void AoConfig::validate() const
    {
        if (grid_points < 1 || max_rounds < 1 || !(tolerance >= 0.0))
            throw std::invalid_argument("AoConfig: grid_points, max_rounds must be >= 1 and tolerance >= 0");
    }

    BaselineResult ao_elementwise(const SecrecyProblem &problem, const AoConfig &cfg, std::uint64_t seed)
    {
        cfg.validate();
        BaselineResult res;
        res.scheme = Scheme::AoElementwise;

        CVector phi = initial_point(problem, seed).first;
        const auto solve_w = [&](const CVector &p)
        {
            const BeamQuadratics bq = beam_quadratics(p, problem.channels, problem.eve, problem.noise);
            return optimal_beam_for_ratio(bq.a_mat, bq.b_mat, problem.p_max);
        };

        CVector w = solve_w(phi);
        double current = lesr(phi, w, problem);
        res.lesr_history.push_back(current);

        CVector grid(cfg.grid_points);
        for (int g = 0; g < cfg.grid_points; ++g)
            grid[g] = std::polar(1.0, 2.0 * kPi * g / cfg.grid_points);

        for (int round = 1; round <= cfg.max_rounds; ++round)
        {
            const double before = current;
            res.iterations = round;

            CVector w_new = solve_w(phi);
            const double with_new = lesr(phi, w_new, problem);
            if (with_new >= current)
            {
                w = std::move(w_new);
                current = with_new;
            }

            // Per element, u and v are affine in (phi_i, conj(phi_i)) with the rest fixed:
            //   u(phi_i) = u_rest + C_ii |phi_i|^2 + 2 Re[conj(phi_i) p_i],  p_i = (C phi)_i - C_ii phi_i + c1_i.
            const PhaseQuadratics pq = phase_quadratics(w, problem.channels, problem.eve, problem.noise);
            CVector c_phi = pq.c * phi;
            CVector d_phi = pq.d * phi;
            double u = phi.dot(c_phi).real() + 2.0 * phi.dot(pq.c1).real() + pq.c2;
            double v = phi.dot(d_phi).real() + 2.0 * phi.dot(pq.d1).real() + pq.d2;

            for (Eigen::Index i = 0; i < phi.size(); ++i)
            {
                const double cii = pq.c(i, i).real();
                const double dii = pq.d(i, i).real();
                const cdouble p = c_phi[i] - pq.c(i, i) * phi[i] + pq.c1[i];
                const cdouble q = d_phi[i] - pq.d(i, i) * phi[i] + pq.d1[i];
                const double mag2 = std::norm(phi[i]);
                const double u_rest = u - cii * mag2 - 2.0 * (std::conj(phi[i]) * p).real();
                const double v_rest = v - dii * mag2 - 2.0 * (std::conj(phi[i]) * q).real();

                double best_ratio = u / v;
                Eigen::Index best = -1;
                double best_u = u;
                double best_v = v;
                for (Eigen::Index g = 0; g < grid.size(); ++g)
                {
                    const double uu = u_rest + cii + 2.0 * (std::conj(grid[g]) * p).real();
                    const double vv = v_rest + dii + 2.0 * (std::conj(grid[g]) * q).real();
                    if (uu / vv > best_ratio)
                    {
                        best_ratio = uu / vv;
                        best = g;
                        best_u = uu;
                        best_v = vv;
                    }
                }
                if (best >= 0)
                {
                    const cdouble delta = grid[best] - phi[i];
                    c_phi += pq.c.col(i) * delta;
                    d_phi += pq.d.col(i) * delta;
                    phi[i] = grid[best];
                    u = best_u;
                    v = best_v;
                }
            }

            current = lesr(phi, w, problem);
            res.lesr_history.push_back(current);
            if (current - before <= cfg.tolerance)
                break;
        }

        res.solution = Solution{phi, w, lesr(phi, w, problem)};
        return res;
    }

    BaselineResult random_phase_mrt(const SecrecyProblem &problem, std::uint64_t seed)
    {
        BaselineResult res;
        res.scheme = Scheme::RandomPhase;
        auto [phi, w] = initial_point(problem, seed);
        res.solution = Solution{phi, w, lesr(phi, w, problem)};
        return res;
    }
} // namespace rissec
