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

#include "rissec/rng.hpp"

namespace rissec
{
    namespace
    {
        constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += kGolden;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
    {
        std::uint64_t h = splitmix64(seed);
        h = splitmix64(h ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
        h = splitmix64(h ^ splitmix64(index + 0x8CB92BA72F3D8DD7ULL));
        return h;
    }

    CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t draw)
        : state_(derive_seed(seed, stream, draw))
    {
    }

    std::uint64_t CounterRng::next_u64()
    {
        state_ += kGolden;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double CounterRng::uniform()
    {
        // 53 random bits, offset by half an ulp so 0 is never returned.
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double CounterRng::gaussian()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * kPi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    cdouble CounterRng::complex_normal()
    {
        const double re = gaussian();
        const double im = gaussian();
        return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
    }

    double CounterRng::phase()
    {
        return 2.0 * kPi * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
    }
} // namespace rissec
