// Copyright 2026 The EJM Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ejm/parallel.hpp"

#include <charconv>
#include <cstdlib>

#include <omp.h>

namespace ejm::parallel {

std::optional<int> parse_thread_count(std::string_view text) {
    int value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || value <= 0) {
        return std::nullopt;
    }
    return value;
}

int worker_count() {
    if (const char *env = std::getenv("EJM_THREADS")) {
        if (auto parsed = parse_thread_count(env)) {
            return *parsed;
        }
    }
    return omp_get_max_threads();
}

} // namespace ejm::parallel
