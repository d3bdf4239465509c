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

#ifndef RISSEC_MONTE_CARLO_HPP
#define RISSEC_MONTE_CARLO_HPP

#include "rissec/secrecy_objective.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rissec
{
    inline constexpr long kDefaultMonteCarloSamples = 100000;

    /// Neumaier-compensated running sum.
    class CompensatedSum
    {
    public:
        void add(double x)
        {
            const double t = sum_ + x;
            if (std::abs(sum_) >= std::abs(x))
                comp_ += (sum_ - t) + x;
            else
                comp_ += (x - t) + sum_;
            sum_ = t;
        }

        double value() const { return sum_ + comp_; }

    private:
        double sum_ = 0.0;
        double comp_ = 0.0;
    };

    struct SampleStats
    {
        double mean = 0.0;
        double std_error = 0.0;
    };

    /// Two-pass compensated mean and standard error (sample std / sqrt(n)).
    SampleStats sample_stats(std::span<const double> samples);

    struct EsrEstimate
    {
        double mean = 0.0;
        double std_error = 0.0;
        long n_samples = 0;
        std::uint64_t seed = 0;
    };

    // Ergodic secrecy rate: mean of (R_U - R_E)^+ over n eavesdropper draws. Draw i uses
    // sample_eve_channels(es, seed, i); draws are evaluated on `workers` threads and summed in
    // index order, so the estimate is bit-identical for every worker count. Requires n >= 2.
    EsrEstimate esr_estimate(const CVector &phi, const CVector &w, const ScenarioChannels &sc,
                             const EveStatistics &es, const NoisePowers &noise, long n, std::uint64_t seed,
                             int workers = 1);

    inline EsrEstimate esr_estimate(const Solution &s, const SecrecyProblem &p, long n, std::uint64_t seed,
                                    int workers = 1)
    {
        return esr_estimate(s.phi, s.w, p.channels, p.eve, p.noise, n, seed, workers);
    }

    struct ExpectationCheck
    {
        double mc_mean = 0.0;
        double closed_form = 0.0;
        double std_error = 0.0;
        double z_score = 0.0; // 0 when the sample is degenerate
    };

    /// Sample mean of |(h_IE^H Phi H_AI + h_AE^H) w|^2 against its closed form. Requires n >= 1000.
    ExpectationCheck expectation_oracle(const CVector &phi, const CVector &w, const ScenarioChannels &sc,
                                        const EveStatistics &es, long n, std::uint64_t seed, int workers = 1);
} // namespace rissec

#endif
