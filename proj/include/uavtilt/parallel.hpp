// SPDX-License-Identifier: Apache-2.0
//
// uavtilt - multi-cell downlink simulator for uptilted booster sectors
// Copyright (C) 2026 The uavtilt authors
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

#ifndef UAVTILT_PARALLEL_HPP
#define UAVTILT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace uavtilt
{

// Runs body(begin, end) over contiguous chunks of [0, n) on up to `threads` threads.
// Chunk boundaries depend only on n and threads; callers write results into
// per-index slots so the outcome never depends on scheduling.
template <typename Body>
void parallel_chunks(std::size_t n, unsigned threads, Body &&body)
{
    if (n == 0)
        return;
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
    if (workers == 1)
    {
        body(std::size_t{0}, n);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    const std::size_t chunk = (n + workers - 1) / workers;

    auto run = [&](std::size_t begin, std::size_t end)
    {
        try
        {
            body(begin, end);
        }
        catch (...)
        {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    for (std::size_t w = 1; w < workers; ++w)
    {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin < end)
            pool.emplace_back(run, begin, end);
    }
    run(0, std::min(n, chunk));
    pool.clear(); // joins
    if (failure)
        std::rethrow_exception(failure);
}

template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body &&body)
{
    parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end)
                    {
        for (std::size_t i = begin; i < end; ++i)
            body(i); });
}

} // namespace uavtilt

#endif
