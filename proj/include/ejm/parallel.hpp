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

#pragma once

#include <optional>
#include <string_view>

namespace ejm::parallel {

/// Parses an EJM_THREADS value. Returns nullopt unless the text is a
/// positive decimal integer.
std::optional<int> parse_thread_count(std::string_view text);

/// Worker count used by every OpenMP kernel: EJM_THREADS when set and valid,
/// otherwise the OpenMP default.
int worker_count();

} // namespace ejm::parallel
