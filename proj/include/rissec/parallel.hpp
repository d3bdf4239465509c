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

#ifndef RISSEC_PARALLEL_HPP
#define RISSEC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rissec
{
    inline constexpr const char *kWorkersEnv = "RISSEC_WORKERS";

    /// Worker count from RISSEC_WORKERS, else the hardware concurrency (at least 1).
    inline int worker_count()
    {
        if (const char *env = std::getenv(kWorkersEnv))
        {
            try
            {
                const int n = std::stoi(env);
                if (n >= 1)
                    return n;
            }
            catch (const std::exception &)
            {
            }
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    // Runs fn(i) for i in [0, count) on up to `workers` threads. Tasks are claimed from an
    // atomic counter; callers write results into per-index slots so the outcome does not
    // depend on scheduling. The first exception is rethrown after all threads join.
    template <class Fn>
    void parallel_for(std::size_t count, Fn &&fn, int workers = worker_count())
    {
        const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), count);
        if (nthreads <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t)
        {
            pool.emplace_back([&]
                              {
                for (std::size_t i = next++; i < count; i = next++)
                {
                    try
                    {
                        fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                    }
                } });
        }
        for (auto &th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }
} // namespace rissec

#endif
