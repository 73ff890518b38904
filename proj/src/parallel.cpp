// SPDX-License-Identifier: Apache-2.0
//
// rydmimo: channel modelling and capacity analysis for Rydberg atomic MIMO receivers
// Copyright (C) 2026 The rydmimo Authors
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

#include "rydmimo/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rydmimo
{
    std::size_t resolve_threads(std::size_t requested)
    {
        if (requested != 0)
            return requested;
        return std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }

    void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &body)
    {
        const std::size_t workers = std::min(resolve_threads(threads), count);
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto worker = [&]
        {
            for (std::size_t i = next.fetch_add(1); i < count && !failed.load(); i = next.fetch_add(1))
            {
                try
                {
                    body(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed.store(true);
                }
            }
        };

        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t t = 0; t < workers; ++t)
                pool.emplace_back(worker);
        }
        if (error)
            std::rethrow_exception(error);
    }
}
