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

#ifndef RISSEC_BASELINES_HPP
#define RISSEC_BASELINES_HPP

#include "rissec/secrecy_objective.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace rissec
{
    enum class Scheme
    {
        Pdca,
        NoRis,
        AoElementwise,
        RandomPhase
    };

    /// Stable identifier used on the command line and in CSV files.
    std::string_view scheme_id(Scheme s);

    /// Human-readable label. The element-wise AO is marked as a substitute scheme.
    std::string_view scheme_label(Scheme s);

    /// Throws std::invalid_argument for an unknown id.
    Scheme parse_scheme(std::string_view id);

    struct BaselineResult
    {
        Scheme scheme = Scheme::NoRis;
        Solution solution;
        int iterations = 0;
        std::vector<double> lesr_history; // iterative schemes only: start value, then one entry per round
    };

    struct GenEigResult
    {
        CVector vector; // unit norm
        double value = 0.0;
        int iterations = 0;
        bool degenerate = false; // top two eigenvalues closer than 1e-12 (relative)
    };

    // Dominant generalized eigenvector of (A, B): the unit v maximizing v^H A v / v^H B v.
    // Power iteration on B^{-1} A, run on the similar Hermitian matrix L^{-1} A L^{-H} with
    // B = L L^H. Stops when the eigenvalue estimate changes by less than 1e-10 (relative)
    // or after 10^4 iterations. Throws std::domain_error if B is not positive definite.
    GenEigResult dominant_gen_eigvec(const CMatrix &a, const CMatrix &b);

    // Maximizes (w^H A w + 1) / (w^H B w + 1) over ||w||^2 <= p_max. On the boundary the
    // ratio equals w^H (A + I/p) w / w^H (B + I/p) w, a generalized Rayleigh quotient; the
    // boundary is optimal whenever that quotient exceeds 1, since t -> (t a + 1)/(t b + 1) is
    // monotone. Otherwise w = 0.
    CVector optimal_beam_for_ratio(const CMatrix &a_mat, const CMatrix &b_mat, double p_max, int *iterations = nullptr);

    /// Best beamformer with the RIS absent. The returned phi is the zero vector (RIS contributes nothing).
    BaselineResult no_ris_beamformer(const SecrecyProblem &problem);

    struct AoConfig
    {
        int grid_points = 360; // phase candidates per element
        double tolerance = 1e-4;
        int max_rounds = 50;

        void validate() const;

        bool operator==(const AoConfig &) const = default;
    };

    // Element-wise alternating optimization. Each round: closed-form w for the current phi,
    // then one cyclic pass setting each phi_i to the best of `grid_points` unit-modulus
    // phases (the incumbent is kept unless a grid point is strictly better). Starts from the
    // same random phases as the PDCA initializer for `seed`.
    BaselineResult ao_elementwise(const SecrecyProblem &problem, const AoConfig &cfg, std::uint64_t seed);

    /// Random unit-modulus phases and a full-power matched filter to the combined user channel.
    BaselineResult random_phase_mrt(const SecrecyProblem &problem, std::uint64_t seed);
} // namespace rissec

#endif
