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

#ifndef RISSEC_SECRECY_OBJECTIVE_HPP
#define RISSEC_SECRECY_OBJECTIVE_HPP

#include "rissec/channel_model.hpp"

namespace rissec
{
    /// RIS reflection vector and AP beamformer, with the secrecy-rate lower bound they achieve.
    struct Solution
    {
        CVector phi;
        CVector w;
        double lesr = 0.0;
    };

    /// Everything a solver needs about one problem instance.
    struct SecrecyProblem
    {
        ScenarioChannels channels;
        EveStatistics eve;
        NoisePowers noise;
        double p_max = 1e-3; // watts

        Eigen::Index num_antennas() const { return channels.num_antennas(); }
        Eigen::Index num_elements() const { return channels.num_elements(); }
    };

    // Numerator and denominator of the bound's SNR ratio:
    //   numerator   = |(phi^T H_U + h_AU^H) w|^2 / s_U + 1
    //   denominator = E|(h_IE^H Phi H_AI + h_AE^H) w|^2 / s_E + 1
    struct RateRatio
    {
        double numerator = 1.0;
        double denominator = 1.0;

        double ratio() const { return numerator / denominator; }
    };

    /// Ratio pieces plus their Wirtinger slopes d(.)/d(x*), the quantities every gradient needs.
    struct RatioForms
    {
        double numerator = 1.0;
        double denominator = 1.0;
        CVector numerator_slope;
        CVector denominator_slope;
    };

    /// Effective user channel a = (phi^T H_U + h_AU^H)^H, so the received gain is a^H w.
    CVector effective_user_channel(const CVector &phi, const ScenarioChannels &sc);

    double rate_user(const CVector &phi, const CVector &w, const ScenarioChannels &sc, double sigma2_user);

    /// Eve's rate for one channel realization, through H_E = diag(conj(h_ie)) H_AI.
    double rate_eve_instant(const CVector &phi, const CVector &w, const CVector &h_ae, const CVector &h_ie,
                            const ScenarioChannels &sc, double sigma2_eve);

    /// Closed-form E|(h_IE^H Phi H_AI + h_AE^H) w|^2 = w^H G_A w + x^H G_I x + 2 Re[w^H G_AI x], x = Phi H_AI w.
    double eve_mean_power(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es);

    /// Denominator clamped at 1e-15.
    RateRatio lesr_ratio(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                         const NoisePowers &noise);

    /// log2(numerator / denominator) without the (.)^+ clamp.
    double lesr_unclamped(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                          const NoisePowers &noise);

    /// The ergodic-secrecy-rate lower bound [log2(numerator / denominator)]^+, in bps/Hz.
    double lesr(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                const NoisePowers &noise);

    inline double lesr(const CVector &phi, const CVector &w, const SecrecyProblem &p)
    {
        return lesr(phi, w, p.channels, p.eve, p.noise);
    }

    // Ratio as a function of phi for fixed w:
    //   u(phi) = phi^H C phi + 2 Re[phi^H c1] + c2,  v(phi) = phi^H D phi + 2 Re[phi^H d1] + d2
    struct PhaseQuadratics
    {
        CMatrix c;
        CVector c1;
        double c2 = 1.0;
        CMatrix d;
        CVector d1;
        double d2 = 1.0;

        RatioForms evaluate(const CVector &phi) const;
    };

    // Same quadratics, kept factored: C = t t^H, c1 = t beta, D = e e^H + diag(s),
    // d1 = e gamma. O(N) per evaluation instead of O(N^2).
    struct StructuredPhaseQuadratics
    {
        CVector t;
        cdouble beta;
        CVector e;
        cdouble gamma;
        RVector diag;
        double d2 = 1.0;

        RatioForms evaluate(const CVector &phi) const;
    };

    /// Ratio as a function of w for fixed phi: (w^H A w + 1) / (w^H B w + 1).
    struct BeamQuadratics
    {
        CVector a; // effective user channel
        CMatrix a_mat;
        CMatrix b_mat;

        RatioForms evaluate(const CVector &w) const;
    };

    /// Multipliers and penalty parameter of the augmented Lagrangian.
    struct DualState
    {
        RVector lambda;
        double rho = 1.0;
    };

    PhaseQuadratics phase_quadratics(const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                                     const NoisePowers &noise);

    StructuredPhaseQuadratics structured_phase_quadratics(const CVector &w, const ScenarioChannels &sc,
                                                          const EveStatistics &es, const NoisePowers &noise);

    BeamQuadratics beam_quadratics(const CVector &phi, const ScenarioChannels &sc, const EveStatistics &es,
                                   const NoisePowers &noise);

    /// (1/2 rho) sum_i [(|phi_i| - 1 + rho lambda_i)^2 - (rho lambda_i)^2]
    /// = lambda^T (|phi| - 1) + (1/2 rho) || |phi| - 1 ||^2. Throws std::domain_error for rho <= 0.
    double unit_modulus_penalty(const CVector &phi, const DualState &dual);

    /// Augmented Lagrangian in reporting form: lesr_unclamped - penalty.
    double al_objective(const CVector &phi, const CVector &w, const DualState &dual, const ScenarioChannels &sc,
                        const EveStatistics &es, const NoisePowers &noise);

    /// Augmented Lagrangian in the log-free form the inner solver ascends: ratio - penalty.
    double al_ratio_objective(const CVector &phi, const CVector &w, const DualState &dual,
                              const ScenarioChannels &sc, const EveStatistics &es, const NoisePowers &noise);
} // namespace rissec

#endif
