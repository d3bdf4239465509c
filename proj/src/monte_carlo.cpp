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

#include "rissec/monte_carlo.hpp"

#include "rissec/parallel.hpp"
#include "rissec/rng.hpp"

#include <stdexcept>

namespace rissec
{
    namespace
    {
        constexpr std::size_t kBlock = 4096;

        // Eve's received amplitude (h_IE^H x + h_AE^H w) for one draw, consuming normals in the
        // same order as sample_eve_channels: M for h_ae, then N for h_ie.
        class EveGainSampler
        {
        public:
            EveGainSampler(const CVector &phi, const CVector &w, const ScenarioChannels &sc, const EveStatistics &es,
                           std::uint64_t seed)
                : w_(w), x_(phi.cwiseProduct(sc.h_ai * w)), seed_(seed),
                  sigma_ae_(std::sqrt(es.ap_eve.nlos_variance())), sigma_ie_(std::sqrt(es.ris_eve.nlos_variance()))
            {
                mean_part_ = es.ris_eve.mean().dot(x_) + es.ap_eve.mean().dot(w_);
            }

            cdouble operator()(std::uint64_t draw) const
            {
                CounterRng rng(seed_, streams::kEve, draw);
                cdouble acc_ae = 0.0;
                for (Eigen::Index i = 0; i < w_.size(); ++i)
                    acc_ae += std::conj(rng.complex_normal()) * w_[i];
                cdouble acc_ie = 0.0;
                for (Eigen::Index i = 0; i < x_.size(); ++i)
                    acc_ie += std::conj(rng.complex_normal()) * x_[i];
                return mean_part_ + sigma_ae_ * acc_ae + sigma_ie_ * acc_ie;
            }

        private:
            CVector w_;
            CVector x_;
            std::uint64_t seed_;
            double sigma_ae_;
            double sigma_ie_;
            cdouble mean_part_;
        };

        template <class Fn>
        std::vector<double> evaluate_draws(long n, int workers, Fn &&per_draw)
        {
            std::vector<double> values(static_cast<std::size_t>(n));
            const std::size_t blocks = (values.size() + kBlock - 1) / kBlock;
            parallel_for(
                blocks,
                [&](std::size_t b)
                {
                    const std::size_t end = std::min(values.size(), (b + 1) * kBlock);
                    for (std::size_t i = b * kBlock; i < end; ++i)
                        values[i] = per_draw(static_cast<std::uint64_t>(i));
                },
                workers);
            return values;
        }
    } // namespace

    SampleStats sample_stats(std::span<const double> samples)
    {
        SampleStats s;
        const auto n = samples.size();
        if (n == 0)
            return s;
        CompensatedSum sum;
        for (double x : samples)
            sum.add(x);
        s.mean = sum.value() / static_cast<double>(n);
        if (n < 2)
            return s;
        CompensatedSum sq;
        for (double x : samples)
            sq.add((x - s.mean) * (x - s.mean));
        const double var = sq.value() / static_cast<double>(n - 1);
        s.std_error = std::sqrt(var / static_cast<double>(n));
        return s;
    }

    EsrEstimate esr_estimate(const CVector &phi, const CVector &w, const ScenarioChannels &sc,
                             const EveStatistics &es, const NoisePowers &noise, long n, std::uint64_t seed,
                             int workers)
    {
        if (n < 2)
            throw std::invalid_argument("esr_estimate: need at least 2 samples");
        const double rate_u = rate_user(phi, w, sc, noise.user);
        const EveGainSampler sampler(phi, w, sc, es, seed);
        const std::vector<double> values = evaluate_draws(n, workers, [&](std::uint64_t d)
                                                          {
            const double rate_e = std::log2(1.0 + std::norm(sampler(d)) / noise.eve);
            return std::max(0.0, rate_u - rate_e); });
        const SampleStats st = sample_stats(values);
        return {st.mean, st.std_error, n, seed};
    }

    ExpectationCheck expectation_oracle(const CVector &phi, const CVector &w, const ScenarioChannels &sc,
                                        const EveStatistics &es, long n, std::uint64_t seed, int workers)
    {
        if (n < 1000)
            throw std::invalid_argument("expectation_oracle: need at least 1000 samples");
        const EveGainSampler sampler(phi, w, sc, es, seed);
        const std::vector<double> values = evaluate_draws(n, workers, [&](std::uint64_t d)
                                                          { return std::norm(sampler(d)); });
        const SampleStats st = sample_stats(values);
        ExpectationCheck out;
        out.mc_mean = st.mean;
        out.std_error = st.std_error;
        out.closed_form = eve_mean_power(phi, w, sc, es);
        out.z_score = st.std_error > 0.0 ? (st.mean - out.closed_form) / st.std_error : 0.0;
        return out;
    }
} // namespace rissec
