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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "ejm/bases.hpp"
#include "ejm/qla.hpp"
#include "oracles.hpp"

namespace support {

using ejm::bases::EjmParams;
using ejm::qla::Complex;
using ejm::qla::StateVector;

inline constexpr double pi = std::numbers::pi;
inline const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

// The 3^4 test grid.
inline std::vector<EjmParams> grid() {
    std::vector<EjmParams> out;
    for (double z : {kInvSqrt3, 0.85, 1.0})
        for (double phi : {-2.0, 0.3, 2.5})
            for (double theta : {0.0, 0.8, pi / 2})
                for (double gamma : {0.0, 0.5, pi / 2})
                    out.emplace_back(z, phi, theta, gamma);
    return out;
}

// Grid with a few extra points: negative z and generic interior angles.
inline std::vector<EjmParams> extended_grid() {
    auto out = grid();
    out.emplace_back(-0.9, 0.5, 1.0, 0.4);
    out.emplace_back(-kInvSqrt3, -1.1, 0.3, 1.2);
    out.emplace_back(0.7, 3.0, 1.4, pi / 8);
    return out;
}

inline oracle::Params plain(const EjmParams &p) {
    return {p.z(), p.phi(), p.theta(), p.gamma()};
}

inline double max_diff(std::span<const Complex> a, const oracle::Vec &b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

inline StateVector as_state(const oracle::Vec &v) {
    return StateVector::from_amplitudes(std::vector<Complex>(v.begin(), v.end()));
}

inline std::vector<Complex> random_unitary_2x2(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    std::uniform_real_distribution<double> v(0.0, 1.0);
    const double t = std::acos(std::sqrt(v(rng)));
    const double a = u(rng), b = u(rng), c = u(rng);
    const Complex ea = std::polar(1.0, a), eb = std::polar(1.0, b), ec = std::polar(1.0, c);
    return {ea * std::cos(t), eb * std::sin(t), -ec * std::conj(eb) * std::sin(t),
            ec * std::conj(ea) * std::cos(t)};
}

} // namespace support
