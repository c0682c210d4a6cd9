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
 * Trilocal star network: three two-qubit sources, three dichotomic Alices
 * and a central Bob measuring in the three-qubit basis. Qubit order of the
 * six-qubit state is A1 A2 A3 B1 B2 B3. Bob's raw outcome b = b1 b2 b3 maps
 * to the basis label (i = 2 b1 + b2, l = b3).
 */

#pragma once

#include <array>
#include <string_view>

#include "ejm/bases.hpp"
#include "ejm/qla.hpp"

namespace ejm::network {

using bases::BasisFamily;
using bases::EjmParams;
using qla::Operator;
using qla::StateVector;

using Bits = std::array<int, 3>;

/// (|01> + |10>)/sqrt(2).
StateVector psi_plus();

/// Processed Bob bit b^m for m = 1..4:
/// b^1 = b2^b3^1, b^2 = b3, b^3 = b1^b3^1, b^4 = b1^b2^b3^1.
int processed_bit(int m, const Bits &b);

/// Input-sign exponent g_m: 0, x1+x2, x1+x3, x2+x3.
int input_sign_exponent(int m, const Bits &x);

/// Eigenprojector of a dichotomic 2x2 observable: output 0 selects the +1
/// eigenspace, output 1 the -1 eigenspace. Throws ContractError unless the
/// observable is Hermitian with eigenvalues +-1 (within 1e-10).
Operator dichotomic_projector(const Operator &observable, int output);

class StarScenario {
  public:
    /// Psi+ sources, A_0 = (X+Z)/sqrt(2), A_1 = (X-Z)/sqrt(2) for every
    /// Alice, and Bob measuring n_qubit_ejm(params, 3).
    static StarScenario standard(const EjmParams &params);

    /// Validates observables and that bob_basis is an orthonormal basis of
    /// three qubits (errors below 1e-9).
    StarScenario(EjmParams params, StateVector source,
                 std::array<std::array<Operator, 2>, 3> alice, BasisFamily bob);

    [[nodiscard]] const EjmParams &params() const { return params_; }
    [[nodiscard]] const StateVector &source() const { return source_; }
    [[nodiscard]] const Operator &alice(int party, int input) const;
    [[nodiscard]] const BasisFamily &bob() const { return bob_; }
    /// Bob's basis state for raw outcome b.
    [[nodiscard]] const StateVector &bob_state(const Bits &b) const;

  private:
    EjmParams params_;
    StateVector source_;
    std::array<std::array<Operator, 2>, 3> alice_;
    BasisFamily bob_;
};

/// Complex conjugate of every amplitude followed by X on each qubit.
/// Throws ArgumentError unless the state has three qubits.
StateVector tilde_state(const StateVector &state);

/// source^{(x)3} reordered from A1 B1 A2 B2 A3 B3 to A1 A2 A3 B1 B2 B3.
StateVector star_state(const StarScenario &scenario);

/// Born-rule probability of Alice outputs a and Bob raw output b given
/// inputs x. Contracts Bob's projector into the star state, then applies
/// the three local Alice projectors.
double joint_probability(const StarScenario &scenario, const Bits &x,
                         const Bits &a, const Bits &b);

/// All 64 probabilities for inputs x, indexed by 8*a + b (a and b as 3-bit
/// integers, first party most significant).
std::array<double, 64> outcome_table(const StarScenario &scenario, const Bits &x);

/// I_m, m = 1..4, from Born-rule probabilities.
double correlation_I_bruteforce(const StarScenario &scenario, int m);
/// All four I_m; OpenMP over the eight input triples.
std::array<double, 4> correlations_bruteforce(const StarScenario &scenario);

/// Closed forms:
///   I_1 = z sin(2g) cos(2(phi - phi_z)) sin(phi + pi/4) / 8
///   I_2 = z sin(2g) sin(phi + pi/4) / 4
///   I_3 = z (1 + sin t) cos(phi - phi_z + pi/4) / (4 sqrt 2)
///   I_4 = z (1 + sin t) sin(phi - phi_z + pi/4) / (4 sqrt 2)
double correlation_I_analytic(const EjmParams &params, int m);
std::array<double, 4> correlations_analytic(const EjmParams &params);

enum class Method { analytic, brute_force };
std::string_view to_string(Method method);

struct CorrelationReport {
    std::array<double, 4> I{};
    double S = 0.0;
    bool violated = false;
    Method method = Method::analytic;
};

/// Trilocal bound; local models satisfy S <= kTrilocalBound.
inline constexpr double kTrilocalBound = 2.0;

/// S = sum_m |I_m|^{1/3}, violated = S > 2. With `verify`, also computes
/// the other method and throws ContractError if any I_m differs by > 1e-9.
CorrelationReport trilocal_score(const EjmParams &params,
                                 Method method = Method::analytic,
                                 bool verify = false);

/// S written as one expression with the common factor cbrt|z|/2 pulled out.
double trilocal_score_factored(const EjmParams &params);

namespace reference {

/// Serial counterpart of correlations_bruteforce.
std::array<double, 4> correlations_bruteforce(const StarScenario &scenario);

} // namespace reference

} // namespace ejm::network
