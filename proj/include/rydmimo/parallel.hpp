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

#ifndef rydmimo_parallel_H
#define rydmimo_parallel_H

#include <cstddef>
#include <functional>

namespace rydmimo
{
    // Resolves a requested worker count; 0 means one per hardware thread.
    std::size_t resolve_threads(std::size_t requested);

    // Calls body(i) for every i in [0, count) on up to `threads` workers. Indices are handed out
    // dynamically, so callers must write results by index to stay schedule independent.
    // The first exception thrown by any body is rethrown after all workers have joined.
    void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &body);
}

#endif
