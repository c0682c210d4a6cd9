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
 * Tetrahedral single-qubit states and the symmetric joint-measurement bases
 * built from them: two-qubit (parameter-free, single-parameter,
 * three-parameter and primed), three-qubit, and the even/odd n-qubit family.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ejm/qla.hpp"

namespace ejm::bases {

using qla::Complex;
using qla::StateVector;

/// Slack applied at every parameter-domain boundary.
inline constexpr double kDomainSlack = 1e-12;
inline constexpr std::size_t kDefaultMaxQubits = 8;

/// arg[(sqrt(1-z^2) + i sqrt(3z^2-1)) / (sqrt(2)|z|)], in [0, pi/2].
/// Throws DomainError("z") unless 1/sqrt(3) <= |z| <= 1.
double phi_z(double z);

/**
 * The four real parameters (z, phi, theta, gamma) shared by every basis
 * family, plus the cached phase phi_z.
 *
 * Derived per-vertex quantities: phi_i = phi + i*pi/2 (with phi_3 = phi - pi/2),
 * z_i = z for even i and -z for odd i.
 */
class EjmParams {
  public:
    /// Validates every domain and throws DomainError naming the parameter.
    EjmParams(double z, double phi, double theta, double gamma);

    [[nodiscard]] double z() const { return z_; }
    [[nodiscard]] double phi() const { return phi_; }
    [[nodiscard]] double theta() const { return theta_; }
    [[nodiscard]] double gamma() const { return gamma_; }
    [[nodiscard]] double phi_z() const { return phi_z_; }

    [[nodiscard]] double z_of(int i) const;
    [[nodiscard]] double phi_of(int i) const;

    /// r_plus = (1 + e^{i theta})/sqrt(2), r_minus = (1 - e^{i theta})/sqrt(2).
    [[nodiscard]] Complex r_plus() const;
    [[nodiscard]] Complex r_minus() const;

    friend bool operator==(const EjmParams &, const EjmParams &) = default;

  private:
    double z_;
    double phi_;
    double theta_;
    double gamma_;
    double phi_z_;
};

/// Index of a basis state: head vertex i, paired two-qubit indices j, and
/// the trailing single-qubit bit l (present iff the qubit count is odd).
struct BasisLabel {
    int i = 0;
    std::vector<int> j;
    std::optional<int> l;

    friend auto operator<=>(const BasisLabel &, const BasisLabel &) = default;
    friend bool operator==(const BasisLabel &, const BasisLabel &) = default;

    /// Compact form such as "i=2 j=[0,3] l=1".
    [[nodiscard]] std::string to_string() const;
};

/// Immutable labelled orthonormal basis.
class BasisFamily {
  public:
    struct Entry {
        BasisLabel label;
        StateVector state;
    };

    /// Entries are sorted by label; duplicate labels are rejected.
    BasisFamily(std::size_t n_qubits, std::optional<EjmParams> params,
                std::vector<Entry> entries);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    /// Unset for the fixed reference bases, which take no EjmParams.
    [[nodiscard]] const std::optional<EjmParams> &params() const {
        return params_;
    }
    [[nodiscard]] const std::vector<Entry> &entries() const { return entries_; }
    [[nodiscard]] const StateVector &at(const BasisLabel &label) const;

  private:
    std::size_t n_qubits_;
    std::optional<EjmParams> params_;
    std::vector<Entry> entries_;
};

/// Single-qubit state (sqrt(1 +- z_i) e^{-i phi_i/2}|0> +- sqrt(1 -+ z_i)
/// e^{i phi_i/2}|1>)/sqrt(2) for explicit (z_i, phi_i). sign is +1 or -1.
StateVector tetrahedron_state(double z_i, double phi_i, int sign);

/// |+m_i> or |-m_i> for the vertex i of `params`.
StateVector single_qubit_m(const EjmParams &params, int i, int sign);

/// Three-parameter two-qubit state |Phi_i> (or |Phi'_i> when primed).
StateVector two_qubit_ejm(const EjmParams &params, int i, bool primed);

enum class ReferenceKind { parameter_free, single_parameter };

/// Fixed two-qubit families built from the regular tetrahedron
/// m_0 = (1,1,1)/sqrt(3), m_1 = (1,-1,-1)/sqrt(3), m_2 = (-1,1,-1)/sqrt(3),
/// m_3 = (-1,-1,1)/sqrt(3). theta is used only for single_parameter and
/// must lie in [0, pi/2].
BasisFamily reference_bases(ReferenceKind kind, double theta = 0.0);

/// cos(gamma)|Phi_i>|m_i> + (-1)^{floor(i/2)} sin(gamma)|Phi'_i>|-m_i> for
/// k = 0, and cos(gamma)|Phi_i>|-m_i> - (-1)^{floor(i/2)} sin(gamma)
/// |Phi'_i>|m_i> for k = 1.
StateVector three_qubit_ejm(const EjmParams &params, int i, int k);

/// The n-qubit family. n = 2 returns the unprimed three-parameter basis
/// (gamma unused). Throws ArgumentError for n < 2 and ResourceError for
/// n > max_qubits.
BasisFamily n_qubit_ejm(const EjmParams &params, std::size_t n,
                        std::size_t max_qubits = kDefaultMaxQubits);

/// True iff ||<a|b>| - 1| < tol.
bool equal_up_to_phase(const StateVector &a, const StateVector &b,
                       double tol = 1e-10);

} // namespace ejm::bases
