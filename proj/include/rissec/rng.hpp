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

#ifndef RISSEC_RNG_HPP
#define RISSEC_RNG_HPP

#include "rissec/types.hpp"

#include <cstdint>

namespace rissec
{
    /// Fixed stream identifiers. A (seed, stream, draw) triple addresses one independent
    /// random sequence, so results never depend on evaluation order or worker count.
    namespace streams
    {
        inline constexpr std::uint64_t kApUser = 1;
        inline constexpr std::uint64_t kRisUser = 2;
        inline constexpr std::uint64_t kApRis = 3;
        inline constexpr std::uint64_t kEve = 4;
        inline constexpr std::uint64_t kInitialPhase = 5;
        inline constexpr std::uint64_t kRealization = 6;
        inline constexpr std::uint64_t kMonteCarlo = 7;
    } // namespace streams

    std::uint64_t splitmix64(std::uint64_t x);

    /// Deterministically derives a child seed from a parent seed and two labels.
    std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

    // Counter-addressed generator: a splitmix64 sequence whose start state is a hash of
    // (seed, stream, draw). Gaussians use Box-Muller so output is identical across
    // standard libraries.
    class CounterRng
    {
    public:
        CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t draw = 0);

        std::uint64_t next_u64();

        /// Uniform on the open interval (0, 1).
        double uniform();

        double gaussian();

        /// Circularly-symmetric CN(0, 1) sample.
        cdouble complex_normal();

        /// Uniform phase on [0, 2pi).
        double phase();

    private:
        std::uint64_t state_;
        double spare_ = 0.0;
        bool has_spare_ = false;
    };
} // namespace rissec

#endif
