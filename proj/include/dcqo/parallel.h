// Copyright 2026 The dcqo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef DCQO_PARALLEL_H
#define DCQO_PARALLEL_H

#include <cstddef>
#include <functional>

namespace dcqo {

/// Worker count from DCQO_WORKERS, else the hardware concurrency (at least 1).
/// Throws std::invalid_argument on a malformed or nonpositive value.
std::size_t worker_count();

/// Runs body(0) ... body(count - 1) on up to `workers` threads. Each index runs
/// exactly once. The first exception (by index) is rethrown after all workers
/// have stopped.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)> &body);

}  // namespace dcqo

#endif
