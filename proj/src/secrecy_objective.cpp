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

#include "rissec/secrecy_objective.hpp"

#include <algorithm>
#include <stdexcept>

namespace rissec
{
    namespace
    {
        constexpr double kDenominatorFloor = 1e-15;

        void check_dims(const CVector &phi, const CVector &w, const ScenarioChannels &sc)
        {
            if (phi.size() != sc.num_elements() || w.size() != sc.num_antennas())
                throw std::invalid_argument("dimension mismatch between (phi, w) and the scenario");
        }
    } // namespace

    CVector effective_user_channel(const CVector &phi, const ScenarioChannels &sc)
    {
        return sc.h_u.adjoint() * phi.conjugate() + sc.h_au;
    }

    double rate_user(const CVector &phi, const CVector &w, const ScenarioChannels &sc, double sigma2_user)
    {
        check_dims(phi, w, sc);
        const cdouble g = effective_user_channel(phi, sc).dot(w);
        return std::log2(1.0 + std::norm(g) / sigma2_user);
    }

    double rate_eve_instant(const CVector &phi, const CVector &w, const CVector &h_ae, const CVector &h_ie,
                            const ScenarioChannels &sc, double sigma2_eve)
    {
        check_dims(phi, w, sc);
        const CMatrix h_e = h_ie.conjugate().asDiagonal() * sc.h_ai;
        const cdouble g = (phi.transpose() * h_e * w).value() + h_ae.dot(w);
        return std::log2(1.0 + std::norm(g) / sigma2_eve);
    }

    double eve_mean_power(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es)
    {
        check_dims(phi, w, sc);
        const CVector x = phi.cwiseProduct(sc.h_ai * w);
        const double direct = w.dot(es.g_a * w).real();
        const double reflected = x.dot(es.g_i * x).real();
        const double cross = 2.0 * w.dot(es.g_ai * x).real();
        return direct + reflected + cross;
    }

    RateRatio lesr_ratio(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                         const NoisePowers &noise)
    {
        check_dims(phi, w, sc);
        RateRatio r;
        r.numerator = std::norm(effective_user_channel(phi, sc).dot(w)) / noise.user + 1.0;
        r.denominator = std::max(eve_mean_power(phi, w, sc, es) / noise.eve + 1.0, kDenominatorFloor);
        return r;
    }

    double lesr_unclamped(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                          const NoisePowers &noise)
    {
        return std::log2(lesr_ratio(phi, w, sc, es, noise).ratio());
    }

    double lesr(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                const NoisePowers &noise)
    {
        return std::max(0.0, lesr_unclamped(phi, w, sc, es, noise));
    }

    RatioForms PhaseQuadratics::evaluate(const CVector &phi) const
    {
        RatioForms f;
        f.numerator_slope = c * phi + c1;
        f.denominator_slope = d * phi + d1;
        // phi^H C phi + 2 Re[phi^H c1] = Re[phi^H (C phi + c1)] + Re[phi^H c1]
        f.numerator = phi.dot(f.numerator_slope).real() + phi.dot(c1).real() + c2;
        f.denominator = std::max(phi.dot(f.denominator_slope).real() + phi.dot(d1).real() + d2, kDenominatorFloor);
        return f;
    }

    RatioForms StructuredPhaseQuadratics::evaluate(const CVector &phi) const
    {
        RatioForms f;
        const cdouble user = t.dot(phi) + beta;
        f.numerator = std::norm(user) + 1.0;
        f.numerator_slope = t * user;

        const cdouble proj = e.dot(phi);
        const double diag_part = (diag.array() * phi.array().abs2()).sum();
        f.denominator = std::max(std::norm(proj) + diag_part + 2.0 * (std::conj(proj) * gamma).real() + d2,
                                 kDenominatorFloor);
        f.denominator_slope = e * (proj + gamma) + (diag.array() * phi.array()).matrix();
        return f;
    }

    RatioForms BeamQuadratics::evaluate(const CVector &w) const
    {
        RatioForms f;
        f.numerator_slope = a_mat * w;
        f.denominator_slope = b_mat * w;
        f.numerator = w.dot(f.numerator_slope).real() + 1.0;
        f.denominator = std::max(w.dot(f.denominator_slope).real() + 1.0, kDenominatorFloor);
        return f;
    }

    PhaseQuadratics phase_quadratics(const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                                     const NoisePowers &noise)
    {
        const CVector q = sc.h_u * w;
        const CVector z = sc.h_ai * w;
        const cdouble direct = sc.h_au.dot(w); // h_AU^H w
        PhaseQuadratics pq;
        pq.c = (q.conjugate() * q.transpose()) / noise.user;
        pq.c1 = q.conjugate() * direct / noise.user;
        pq.c2 = std::norm(direct) / noise.user + 1.0;
        pq.d = (z.conjugate().asDiagonal() * es.g_i * z.asDiagonal()) / noise.eve;
        pq.d1 = (z.conjugate().asDiagonal() * (es.g_ai.adjoint() * w)) / noise.eve;
        pq.d2 = w.dot(es.g_a * w).real() / noise.eve + 1.0;
        return pq;
    }

    StructuredPhaseQuadratics structured_phase_quadratics(const CVector &w, const ScenarioChannels &sc,
                                                          const EveStatistics &es, const NoisePowers &noise)
    {
        const double su = std::sqrt(noise.user);
        const double se = std::sqrt(noise.eve);
        const CVector z = sc.h_ai * w;
        StructuredPhaseQuadratics s;
        s.t = (sc.h_u * w).conjugate() / su;
        s.beta = sc.h_au.dot(w) / su;
        s.e = es.ris_eve.mean().cwiseProduct(z.conjugate()) / se;
        s.gamma = es.ap_eve.mean().dot(w) / se;
        s.diag = z.cwiseAbs2() * (es.ris_eve.nlos_variance() / noise.eve);
        s.d2 = w.dot(es.g_a * w).real() / noise.eve + 1.0;
        return s;
    }

    BeamQuadratics beam_quadratics(const CVector &phi, const ScenarioChannels &sc, const EveStatistics &es,
                                   const NoisePowers &noise)
    {
        BeamQuadratics bq;
        bq.a = effective_user_channel(phi, sc);
        bq.a_mat = (bq.a * bq.a.adjoint()) / noise.user;

        // B1 = Phi H_AI, B2 = G_AI B1. With G_I = m m^H + v I and G_AI = m_ae m^H:
        //   B1^H G_I B1 = p p^H + v B1^H B1,  B2 = m_ae p^H,  p = B1^H m.
        const CMatrix b1 = phi.asDiagonal() * sc.h_ai;
        const CVector p = b1.adjoint() * es.ris_eve.mean();
        const CVector m_ae = es.ap_eve.mean();
        CMatrix b = es.g_a + p * p.adjoint() + es.ris_eve.nlos_variance() * (b1.adjoint() * b1) +
                    m_ae * p.adjoint() + p * m_ae.adjoint();
        bq.b_mat = (0.5 / noise.eve) * (b + b.adjoint());
        return bq;
    }

    double unit_modulus_penalty(const CVector &phi, const DualState &dual)
    {
        if (!(dual.rho > 0.0))
            throw std::domain_error("penalty parameter rho must be > 0");
        if (dual.lambda.size() != phi.size())
            throw std::invalid_argument("multiplier dimension mismatch");
        double acc = 0.0;
        for (Eigen::Index i = 0; i < phi.size(); ++i)
        {
            const double shifted = dual.rho * dual.lambda[i];
            const double r = std::abs(phi[i]) - 1.0 + shifted;
            acc += r * r - shifted * shifted;
        }
        return acc / (2.0 * dual.rho);
    }

    double al_objective(const CVector &phi, const CVector &w, const DualState &dual, const ScenarioChannels &sc,
                        const EveStatistics &es, const NoisePowers &noise)
    {
        return lesr_unclamped(phi, w, sc, es, noise) - unit_modulus_penalty(phi, dual);
    }

    double al_ratio_objective(const CVector &phi, const CVector &w, const DualState &dual,
                              const ScenarioChannels &sc, const EveStatistics &es, const NoisePowers &noise)
    {
        return lesr_ratio(phi, w, sc, es, noise).ratio() - unit_modulus_penalty(phi, dual);
    }
} // namespace rissec
