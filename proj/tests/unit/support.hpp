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

#ifndef RISSEC_TEST_SUPPORT_HPP
#define RISSEC_TEST_SUPPORT_HPP

#include "rissec/experiment.hpp"
#include "rissec/rng.hpp"
#include "rissec/validation.hpp"

#include <catch_amalgamated.hpp>

namespace rissec::test
{
    using Catch::Matchers::WithinAbs;
    using Catch::Matchers::WithinRel;

    // Test-local random source, kept apart from library streams.
    inline constexpr std::uint64_t kTestStream = 0x7e57;

    inline CVector random_cvec(CounterRng &rng, Eigen::Index n)
    {
        CVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v[i] = rng.complex_normal();
        return v;
    }

    inline CVector random_phases(CounterRng &rng, Eigen::Index n)
    {
        CVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v[i] = std::polar(1.0, rng.phase());
        return v;
    }

    inline CVector random_beam(CounterRng &rng, Eigen::Index m, double power)
    {
        const CVector v = random_cvec(rng, m);
        return v * std::sqrt(power) / v.norm();
    }

    inline CMatrix random_hermitian_psd(CounterRng &rng, Eigen::Index n, double diag_shift = 0.0)
    {
        CMatrix x(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                x(i, j) = rng.complex_normal();
        return x * x.adjoint() + diag_shift * CMatrix::Identity(n, n);
    }

    /// Reference deployment with `n` elements, one user realization.
    inline SecrecyProblem problem(int n, std::uint64_t seed, double p_dbm = 5.0)
    {
        return reference_problem(n, seed, p_dbm);
    }

    inline double max_abs(const CMatrix &m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
} // namespace rissec::test

#endif
