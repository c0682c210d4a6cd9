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

#include "ejm/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ejm/errors.hpp"

namespace ejm::bases {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
using std::numbers::sqrt3;

constexpr Complex kI{0.0, 1.0};

void check_range(const char *name, double value, double lo, double hi) {
    if (!std::isfinite(value) || value < lo - kDomainSlack ||
        value > hi + kDomainSlack) {
        std::ostringstream msg;
        msg.precision(12);
        msg << name << " = " << value << " lies outside [" << lo << ", " << hi
            << "]";
        throw DomainError(name, msg.str());
    }
}

void check_vertex(int i) {
    if (i < 0 || i > 3) {
        throw ArgumentError("vertex index must be in 0..3");
    }
}

int head_sign(int i) { return i / 2 == 0 ? 1 : -1; }

std::vector<Complex> scaled_sum(double a, const StateVector &x, double b,
                                const StateVector &y) {
    std::vector<Complex> out(x.dim());
    for (std::size_t k = 0; k < x.dim(); ++k) {
        out[k] = a * x[k] + b * y[k];
    }
    return out;
}

// Shared by three_qubit_ejm and n_qubit_ejm so both produce identical bits.
StateVector combine(const EjmParams &params, int i, const std::vector<int> &js,
                    std::optional<int> l) {
    StateVector head = two_qubit_ejm(params, i, false);
    StateVector head_primed = two_qubit_ejm(params, i, true);
    for (int j : js) {
        head = qla::tensor_product(head, two_qubit_ejm(params, j, false));
        head_primed =
            qla::tensor_product(head_primed, two_qubit_ejm(params, j, true));
    }
    const double c = std::cos(params.gamma());
    const double s = head_sign(i) * std::sin(params.gamma());
    if (!l) {
        return StateVector::from_amplitudes(
            scaled_sum(c, head, s, head_primed));
    }
    const StateVector plus = single_qubit_m(params, i, +1);
    const StateVector minus = single_qubit_m(params, i, -1);
    if (*l == 0) {
        return StateVector::from_amplitudes(
            scaled_sum(c, qla::tensor_product(head, plus), s,
                       qla::tensor_product(head_primed, minus)));
    }
    return StateVector::from_amplitudes(
        scaled_sum(c, qla::tensor_product(head, minus), -s,
                   qla::tensor_product(head_primed, plus)));
}

} // namespace

double phi_z(double z) {
    check_range("z", std::abs(z), 1.0 / sqrt3, 1.0);
    const double re = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double im = std::sqrt(std::max(0.0, 3.0 * z * z - 1.0));
    return std::atan2(im, re);
}

EjmParams::EjmParams(double z, double phi, double theta, double gamma)
    : z_(z), phi_(phi), theta_(theta), gamma_(gamma) {
    check_range("phi", phi, -pi, pi);
    check_range("theta", theta, 0.0, pi / 2);
    check_range("gamma", gamma, 0.0, pi / 2);
    phi_z_ = bases::phi_z(z);
}

double EjmParams::z_of(int i) const {
    check_vertex(i);
    return i % 2 == 0 ? z_ : -z_;
}

double EjmParams::phi_of(int i) const {
    check_vertex(i);
    static constexpr double offsets[4] = {0.0, pi / 2, pi, -pi / 2};
    return phi_ + offsets[i];
}

Complex EjmParams::r_plus() const {
    return (1.0 + std::polar(1.0, theta_)) / sqrt2;
}

Complex EjmParams::r_minus() const {
    return (1.0 - std::polar(1.0, theta_)) / sqrt2;
}

std::string BasisLabel::to_string() const {
    std::ostringstream out;
    out << "i=" << i;
    if (!j.empty()) {
        out << " j=[";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out << (k ? "," : "") << j[k];
        }
        out << "]";
    }
    if (l) {
        out << " l=" << *l;
    }
    return out.str();
}

BasisFamily::BasisFamily(std::size_t n_qubits, std::optional<EjmParams> params,
                         std::vector<Entry> entries)
    : n_qubits_(n_qubits), params_(std::move(params)),
      entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry &a, const Entry &b) { return a.label < b.label; });
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k].state.n_qubits() != n_qubits_) {
            throw ArgumentError("BasisFamily: state has wrong qubit count");
        }
        if (k > 0 && entries_[k].label == entries_[k - 1].label) {
            throw ArgumentError("BasisFamily: duplicate label " +
                                entries_[k].label.to_string());
        }
    }
}

const StateVector &BasisFamily::at(const BasisLabel &label) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), label,
        [](const Entry &e, const BasisLabel &key) { return e.label < key; });
    if (it == entries_.end() || it->label != label) {
        throw ArgumentError("BasisFamily: no state with label " +
                            label.to_string());
    }
    return it->state;
}

StateVector tetrahedron_state(double z_i, double phi_i, int sign) {
    if (sign != 1 && sign != -1) {
        throw ArgumentError("tetrahedron_state: sign must be +1 or -1");
    }
    check_range("z", z_i, -1.0, 1.0);
    const double up = std::sqrt(std::max(0.0, 1.0 + z_i));
    const double down = std::sqrt(std::max(0.0, 1.0 - z_i));
    const Complex lo = std::polar(1.0, -phi_i / 2);
    const Complex hi = std::polar(1.0, phi_i / 2);
    std::vector<Complex> amps(2);
    if (sign > 0) {
        amps[0] = up * lo / sqrt2;
        amps[1] = down * hi / sqrt2;
    } else {
        amps[0] = down * lo / sqrt2;
        amps[1] = -up * hi / sqrt2;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector single_qubit_m(const EjmParams &params, int i, int sign) {
    return tetrahedron_state(params.z_of(i), params.phi_of(i), sign);
}

StateVector two_qubit_ejm(const EjmParams &params, int i, bool primed) {
    const double z = params.z();
    const double root = std::sqrt(std::max(0.0, 3.0 * z * z - 1.0));
    const Complex prefactor = (1.0 - kI * root) / (2.0 * sqrt3 * std::abs(z));
    const double alpha = params.phi_of(i) - params.phi_z();
    const double parity = i % 2 == 0 ? 1.0 : -1.0;
    const Complex e_theta = std::polar(1.0, params.theta());
    const double outer_sign = primed ? -1.0 : 1.0;

    std::vector<Complex> amps{
        outer_sign * std::polar(1.0, -alpha),
        -(parity + e_theta) / sqrt2,
        -(parity - e_theta) / sqrt2,
        -outer_sign * std::polar(1.0, alpha),
    };
    for (auto &a : amps) {
        a *= prefactor;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

BasisFamily reference_bases(ReferenceKind kind, double theta) {
    if (kind == ReferenceKind::single_parameter) {
        check_range("theta", theta, 0.0, pi / 2);
    } else {
        theta = 0.0;
    }
    static constexpr double z_vertex[4] = {1.0, -1.0, -1.0, 1.0};
    static constexpr double phi_vertex[4] = {pi / 4, -pi / 4, 3 * pi / 4,
                                             -3 * pi / 4};
    const Complex e_theta = std::polar(1.0, theta);
    const Complex w_plus = (sqrt3 + e_theta) / (2.0 * sqrt2);
    const Complex w_minus = (sqrt3 - e_theta) / (2.0 * sqrt2);

    std::vector<BasisFamily::Entry> entries;
    for (int i = 0; i < 4; ++i) {
        const StateVector m = tetrahedron_state(z_vertex[i] / sqrt3, phi_vertex[i], +1);
        const StateVector mm = tetrahedron_state(z_vertex[i] / sqrt3, phi_vertex[i], -1);
        const StateVector a = qla::tensor_product(m, mm);
        const StateVector b = qla::tensor_product(mm, m);
        std::vector<Complex> amps(4);
        for (std::size_t k = 0; k < 4; ++k) {
            amps[k] = w_plus * a[k] + w_minus * b[k];
        }
        entries.push_back({BasisLabel{i, {}, std::nullopt},
                           StateVector::from_amplitudes(std::move(amps))});
    }
    return BasisFamily(2, std::nullopt, std::move(entries));
}

StateVector three_qubit_ejm(const EjmParams &params, int i, int k) {
    check_vertex(i);
    if (k != 0 && k != 1) {
        throw ArgumentError("three_qubit_ejm: k must be 0 or 1");
    }
    return combine(params, i, {}, k);
}

BasisFamily n_qubit_ejm(const EjmParams &params, std::size_t n,
                        std::size_t max_qubits) {
    if (n < 2) {
        throw ArgumentError("n_qubit_ejm: n must be at least 2");
    }
    if (n > max_qubits) {
        throw ResourceError("n_qubit_ejm: n = " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(max_qubits));
    }
    std::vector<BasisFamily::Entry> entries;
    if (n == 2) {
        for (int i = 0; i < 4; ++i) {
            entries.push_back({BasisLabel{i, {}, std::nullopt},
                               two_qubit_ejm(params, i, false)});
        }
        return BasisFamily(n, params, std::move(entries));
    }

    const bool odd = n % 2 == 1;
    const std::size_t pairs = odd ? (n - 1) / 2 - 1 : n / 2 - 1;
    std::size_t combos = 1;
    for (std::size_t p = 0; p < pairs; ++p) {
        combos *= 4;
    }
    entries.reserve(4 * combos * (odd ? 2 : 1));
    for (int i = 0; i < 4; ++i) {
        for (std::size_t c = 0; c < combos; ++c) {
            // Base-4 digits of c, most significant first.
            std::vector<int> js(pairs);
            std::size_t rest = c;
            for (std::size_t p = pairs; p-- > 0;) {
                js[p] = static_cast<int>(rest % 4);
                rest /= 4;
            }
            if (odd) {
                for (int l = 0; l < 2; ++l) {
                    entries.push_back({BasisLabel{i, js, l}, combine(params, i, js, l)});
                }
            } else {
                entries.push_back(
                    {BasisLabel{i, js, std::nullopt}, combine(params, i, js, std::nullopt)});
            }
        }
    }
    return BasisFamily(n, params, std::move(entries));
}

bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol) {
    return std::abs(std::abs(qla::inner(a, b)) - 1.0) < tol;
}

} // namespace ejm::bases
