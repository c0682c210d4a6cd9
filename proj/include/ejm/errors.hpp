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

/**
 * @file
 * Exception types shared by every module.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ejm {

/// A parameter lies outside its legal domain. `parameter()` names it
/// (e.g. "z", "theta") so front ends can point at the offending flag.
class DomainError : public std::domain_error {
  public:
    DomainError(std::string parameter, const std::string &what)
        : std::domain_error(what), parameter_(std::move(parameter)) {}

    [[nodiscard]] const std::string &parameter() const noexcept {
        return parameter_;
    }

  private:
    std::string parameter_;
};

/// Malformed arguments: bad sizes, indices out of range, empty sets.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Tensor product of a state with an operator.
class KindMismatchError : public ArgumentError {
  public:
    using ArgumentError::ArgumentError;
};

/// A numerical postcondition failed (non-Hermitian observable, unnormalized
/// state, a tangle above one). Always indicates a bug or corrupted input.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Requested object exceeds the configured size cap.
class ResourceError : public std::length_error {
  public:
    using std::length_error::length_error;
};

} // namespace ejm
