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


#include "dcqo/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dcqo {

std::size_t worker_count() {
    const char *env = std::getenv("DCQO_WORKERS");
    if (env != nullptr && *env != '\0') {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(env, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != std::string(env).size() || v <= 0) {
            throw std::invalid_argument(std::string("DCQO_WORKERS must be a positive integer, got '") + env + "'");
        }
        return static_cast<std::size_t>(v);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)> &body) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    std::vector<std::exception_ptr> errors(count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; i++) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
                break;
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        auto loop = [&] {
            while (!failed.load()) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                    failed.store(true);
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back(loop);
        }
        for (std::thread &t : pool) {
            t.join();
        }
    }
    for (const std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace dcqo
