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
 * Parameter sweeps of the trilocal score and a derivative-free maximizer
 * (coarse grid, then Nelder-Mead from the best grid points).
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ejm/bases.hpp"

namespace ejm::optimize {

using bases::EjmParams;

enum class Param { z, phi, theta, gamma };

std::string_view to_string(Param p);
/// Accepts "z", "phi", "theta", "gamma".
std::optional<Param> parse_param(std::string_view name);

struct SweepSpec {
    Param varying = Param::phi;
    double lo = 0.0;
    double hi = 0.0;
    int points = 2;
    /// Values of the parameters that stay fixed; the varying one is ignored.
    EjmParams fixed;
};

struct SweepSample {
    double value = 0.0;
    double S = 0.0;
};

/// S at `points` equally spaced values from lo to hi inclusive. Throws
/// ArgumentError unless points >= 2 and lo < hi, DomainError when the
/// range leaves the parameter's domain. OpenMP over samples.
std::vector<SweepSample> sweep(const SweepSpec &spec);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Box over (z, phi, theta, gamma), in that order.
struct Bounds {
    std::array<Interval, 4> box;

    /// z in [1/sqrt(3), 1], phi in [0, pi], theta and gamma in [0, pi/2].
    /// S is pi-periodic in phi, so [0, pi] covers every distinct value.
    static Bounds standard();

    [[nodiscard]] const Interval &operator[](Param p) const {
        return box[static_cast<std::size_t>(p)];
    }
    Interval &operator[](Param p) { return box[static_cast<std::size_t>(p)]; }
};

struct MaximizeOptions {
    std::size_t budget = 20000;
    int grid_points = 9;
    int starts = 5;
    /// Nelder-Mead stops when every vertex is within this distance of the best.
    double simplex_tol = 1e-8;
};

struct TraceEntry {
    EjmParams params;
    double S = 0.0;
};

struct OptimumResult {
    EjmParams params;
    double S = 0.0;
    /// Every evaluation in order: grid (lexicographic), then each start's
    /// refinement in start order.
    std::vector<TraceEntry> trace;
    /// Set when the budget ran out before any refinement step.
    bool grid_only = false;
};

/// Throws ArgumentError for budget < 100 or lo > hi, DomainError for bounds
/// outside the legal domain. Collapsed intervals (lo == hi) are held fixed.
OptimumResult maximize(const Bounds &bounds, const MaximizeOptions &options = {});

namespace reference {

/// Serial counterpart of optimize::sweep.
std::vector<SweepSample> sweep(const SweepSpec &spec);

} // namespace reference

} // namespace ejm::optimize
