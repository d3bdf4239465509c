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

#ifndef RISSEC_TYPES_HPP
#define RISSEC_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>

namespace rissec
{
    using cdouble = std::complex<double>;
    using CVector = Eigen::VectorXcd;
    using CMatrix = Eigen::MatrixXcd;
    using RVector = Eigen::VectorXd;

    inline constexpr double kPi = std::numbers::pi;

    /// Receiver noise powers in watts.
    struct NoisePowers
    {
        double user = 1e-12;
        double eve = 1e-12;
    };

    // dB <-> linear helpers. All internal math is linear; conversions happen at config boundaries.
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
    inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

    /// Largest deviation of |phi_i| from 1.
    inline double unit_modulus_violation(const CVector &phi)
    {
        return phi.size() == 0 ? 0.0 : (phi.cwiseAbs().array() - 1.0).abs().maxCoeff();
    }

    /// Element-wise phi_i / |phi_i|; zero entries map to 1.
    inline CVector project_unit_modulus(const CVector &phi)
    {
        CVector out(phi.size());
        for (Eigen::Index i = 0; i < phi.size(); ++i)
        {
            const double r = std::abs(phi[i]);
            out[i] = r > 0.0 ? phi[i] / r : cdouble(1.0, 0.0);
        }
        return out;
    }
} // namespace rissec

#endif
