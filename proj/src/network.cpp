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

#include "ejm/network.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <omp.h>

#include "ejm/analysis.hpp"
#include "ejm/errors.hpp"
#include "ejm/parallel.hpp"

namespace ejm::network {

namespace {

using qla::Complex;
using std::numbers::pi;
using std::numbers::sqrt2;

constexpr double kAgreementTol = 1e-9;

void check_m(int m) {
    if (m < 1 || m > 4) {
        throw ArgumentError("correlation index m must be in 1..4");
    }
}

void check_bits(const Bits &bits, const char *what) {
    for (int v : bits) {
        if (v != 0 && v != 1) {
            throw ArgumentError(std::string(what) + " must be bits");
        }
    }
}

Bits from_int(int v) { return {(v >> 2) & 1, (v >> 1) & 1, v & 1}; }

using Vec8 = std::array<Complex, 8>;

// Bob's projector contracted into the star state: chi_b = (I (x) <Psi_b|) |star>.
std::array<Vec8, 8> contract_bob(const StarScenario &scenario) {
    const StateVector star = star_state(scenario);
    std::array<Vec8, 8> chi{};
    for (int b = 0; b < 8; ++b) {
        const StateVector &bob = scenario.bob_state(from_int(b));
        for (std::size_t alice = 0; alice < 8; ++alice) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 8; ++k) {
                s += std::conj(bob[k]) * star[alice * 8 + k];
            }
            chi[static_cast<std::size_t>(b)][alice] = s;
        }
    }
    return chi;
}

// Applies a 2x2 operator to one qubit of a three-qubit vector.
Vec8 apply_local(const Operator &op, int qubit, const Vec8 &v) {
    const std::size_t mask = std::size_t{4} >> static_cast<std::size_t>(qubit);
    Vec8 out{};
    for (std::size_t idx = 0; idx < 8; ++idx) {
        if ((idx & mask) != 0U) {
            continue;
        }
        const Complex lo = v[idx];
        const Complex hi = v[idx | mask];
        out[idx] = op(0, 0) * lo + op(0, 1) * hi;
        out[idx | mask] = op(1, 0) * lo + op(1, 1) * hi;
    }
    return out;
}

// Projectors indexed [party][input][output].
using ProjectorSet = std::array<std::array<std::array<Operator, 2>, 2>, 3>;

ProjectorSet build_projectors(const StarScenario &scenario) {
    auto make = [&](int party, int input) {
        return std::array<Operator, 2>{
            dichotomic_projector(scenario.alice(party, input), 0),
            dichotomic_projector(scenario.alice(party, input), 1)};
    };
    return {std::array<std::array<Operator, 2>, 2>{make(0, 0), make(0, 1)},
            std::array<std::array<Operator, 2>, 2>{make(1, 0), make(1, 1)},
            std::array<std::array<Operator, 2>, 2>{make(2, 0), make(2, 1)}};
}

double born(const ProjectorSet &proj, const Vec8 &chi, const Bits &x,
            const Bits &a) {
    Vec8 v = chi;
    for (int p = 0; p < 3; ++p) {
        const auto pi_idx = static_cast<std::size_t>(p);
        v = apply_local(proj[pi_idx][static_cast<std::size_t>(x[pi_idx])]
                            [static_cast<std::size_t>(a[pi_idx])],
                        p, v);
    }
    Complex s = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        s += std::conj(chi[k]) * v[k];
    }
    return s.real();
}

std::array<double, 64> table_for(const ProjectorSet &proj,
                                 const std::array<Vec8, 8> &chi, const Bits &x) {
    std::array<double, 64> table{};
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            table[static_cast<std::size_t>(a * 8 + b)] =
                born(proj, chi[static_cast<std::size_t>(b)], x, from_int(a));
        }
    }
    return table;
}

// Contribution of one input triple to each I_m, before the 1/8 average.
std::array<double, 4> input_contribution(const std::array<double, 64> &table,
                                         const Bits &x) {
    std::array<double, 4> out{};
    for (int m = 1; m <= 4; ++m) {
        double correlator = 0.0;
        for (int a = 0; a < 8; ++a) {
            const Bits ab = from_int(a);
            for (int b = 0; b < 8; ++b) {
                const int parity = ab[0] + ab[1] + ab[2] + processed_bit(m, from_int(b));
                const double p = table[static_cast<std::size_t>(a * 8 + b)];
                correlator += (parity % 2 == 0) ? p : -p;
            }
        }
        const double sign = input_sign_exponent(m, x) % 2 == 0 ? 1.0 : -1.0;
        out[static_cast<std::size_t>(m - 1)] = sign * correlator;
    }
    return out;
}

} // namespace

StateVector psi_plus() {
    return StateVector::from_amplitudes({0.0, 1.0 / sqrt2, 1.0 / sqrt2, 0.0});
}

int processed_bit(int m, const Bits &b) {
    check_m(m);
    check_bits(b, "processed_bit: raw outputs");
    switch (m) {
    case 1:
        return b[1] ^ b[2] ^ 1;
    case 2:
        return b[2];
    case 3:
        return b[0] ^ b[2] ^ 1;
    default:
        return b[0] ^ b[1] ^ b[2] ^ 1;
    }
}

int input_sign_exponent(int m, const Bits &x) {
    check_m(m);
    check_bits(x, "input_sign_exponent: inputs");
    switch (m) {
    case 1:
        return 0;
    case 2:
        return x[0] + x[1];
    case 3:
        return x[0] + x[2];
    default:
        return x[1] + x[2];
    }
}

Operator dichotomic_projector(const Operator &observable, int output) {
    if (observable.dim() != 2 || !observable.is_hermitian()) {
        throw ContractError("dichotomic observable must be a Hermitian 2x2 matrix");
    }
    if (output != 0 && output != 1) {
        throw ArgumentError("dichotomic output must be 0 or 1");
    }
    const double offset = 0.5 * (observable(0, 0) + observable(1, 1)).real();
    const qla::BlochVector axis{observable(1, 0).real(), observable(1, 0).imag(),
                                0.5 * (observable(0, 0) - observable(1, 1)).real()};
    const double length = axis.norm();
    if (std::abs(offset) > qla::kHermitianTol ||
        std::abs(length - 1.0) > qla::kHermitianTol) {
        throw ContractError("dichotomic observable must have eigenvalues +1 and -1");
    }
    // +1 eigenspace for output 0.
    const double sign = output == 0 ? 1.0 : -1.0;
    const double nx = sign * axis.x / length;
    const double ny = sign * axis.y / length;
    const double nz = sign * axis.z / length;
    return Operator::from_entries({0.5 * (1.0 + nz), 0.5 * Complex{nx, -ny},
                                   0.5 * Complex{nx, ny}, 0.5 * (1.0 - nz)});
}

StarScenario StarScenario::standard(const EjmParams &params) {
    const Operator a0 = Complex{1.0 / sqrt2} * (qla::pauli_x() + qla::pauli_z());
    const Operator a1 = Complex{1.0 / sqrt2} * (qla::pauli_x() - qla::pauli_z());
    const std::array<Operator, 2> pair{a0, a1};
    return StarScenario(params, psi_plus(), {pair, pair, pair},
                        bases::n_qubit_ejm(params, 3));
}

StarScenario::StarScenario(EjmParams params, StateVector source,
                           std::array<std::array<Operator, 2>, 3> alice,
                           BasisFamily bob)
    : params_(params), source_(std::move(source)), alice_(std::move(alice)),
      bob_(std::move(bob)) {
    if (source_.n_qubits() != 2) {
        throw ArgumentError("StarScenario: sources must be two-qubit states");
    }
    for (const auto &pair : alice_) {
        for (const auto &obs : pair) {
            (void)dichotomic_projector(obs, 0);
        }
    }
    if (bob_.n_qubits() != 3 || bob_.size() != 8) {
        throw ArgumentError("StarScenario: Bob needs an eight-state three-qubit basis");
    }
    for (int b = 0; b < 8; ++b) {
        (void)bob_state(from_int(b));
    }
    const auto check = analysis::verify_orthonormal_complete(bob_);
    if (check.gram_error > 1e-9 || check.completeness_error > 1e-9) {
        throw ContractError("StarScenario: Bob's basis is not orthonormal and complete");
    }
}

const Operator &StarScenario::alice(int party, int input) const {
    if (party < 0 || party > 2 || input < 0 || input > 1) {
        throw ArgumentError("StarScenario::alice: index out of range");
    }
    return alice_[static_cast<std::size_t>(party)][static_cast<std::size_t>(input)];
}

const StateVector &StarScenario::bob_state(const Bits &b) const {
    check_bits(b, "Bob outputs");
    return bob_.at(bases::BasisLabel{2 * b[0] + b[1], {}, b[2]});
}

StateVector tilde_state(const StateVector &state) {
    if (state.n_qubits() != 3) {
        throw ArgumentError("tilde_state: expects a three-qubit state");
    }
    std::vector<Complex> out(8);
    for (std::size_t k = 0; k < 8; ++k) {
        out[7 - k] = std::conj(state[k]);
    }
    return StateVector::from_amplitudes(std::move(out));
}

StateVector star_state(const StarScenario &scenario) {
    const StateVector &src = scenario.source();
    const StateVector pairs =
        qla::tensor_product(qla::tensor_product(src, src), src);
    const int order[] = {0, 2, 4, 1, 3, 5};
    return qla::reorder_qubits(pairs, order);
}

double joint_probability(const StarScenario &scenario, const Bits &x,
                         const Bits &a, const Bits &b) {
    check_bits(x, "inputs");
    check_bits(a, "Alice outputs");
    check_bits(b, "Bob outputs");
    const StateVector star = star_state(scenario);
    const StateVector &bob = scenario.bob_state(b);
    Vec8 chi{};
    for (std::size_t alice = 0; alice < 8; ++alice) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < 8; ++k) {
            s += std::conj(bob[k]) * star[alice * 8 + k];
        }
        chi[alice] = s;
    }
    return born(build_projectors(scenario), chi, x, a);
}

std::array<double, 64> outcome_table(const StarScenario &scenario, const Bits &x) {
    check_bits(x, "inputs");
    return table_for(build_projectors(scenario), contract_bob(scenario), x);
}

double correlation_I_bruteforce(const StarScenario &scenario, int m) {
    check_m(m);
    return correlations_bruteforce(scenario)[static_cast<std::size_t>(m - 1)];
}

std::array<double, 4> correlations_bruteforce(const StarScenario &scenario) {
    const auto proj = build_projectors(scenario);
    const auto chi = contract_bob(scenario);
    std::array<std::array<double, 4>, 8> parts{};
#pragma omp parallel for num_threads(parallel::worker_count())
    for (int xi = 0; xi < 8; ++xi) {
        const Bits x = from_int(xi);
        parts[static_cast<std::size_t>(xi)] = input_contribution(table_for(proj, chi, x), x);
    }
    std::array<double, 4> out{};
    for (const auto &part : parts) {
        for (std::size_t m = 0; m < 4; ++m) {
            out[m] += part[m];
        }
    }
    for (auto &v : out) {
        v /= 8.0;
    }
    return out;
}

double correlation_I_analytic(const EjmParams &params, int m) {
    check_m(m);
    const double z = params.z();
    const double phi = params.phi();
    const double shift = phi - params.phi_z();
    const double g2 = std::sin(2.0 * params.gamma());
    const double lift = 1.0 + std::sin(params.theta());
    switch (m) {
    case 1:
        return z * g2 * std::cos(2.0 * shift) * std::sin(phi + pi / 4) / 8.0;
    case 2:
        return z * g2 * std::sin(phi + pi / 4) / 4.0;
    case 3:
        return z * lift * std::cos(shift + pi / 4) / (4.0 * sqrt2);
    default:
        return z * lift * std::sin(shift + pi / 4) / (4.0 * sqrt2);
    }
}

std::array<double, 4> correlations_analytic(const EjmParams &params) {
    return {correlation_I_analytic(params, 1), correlation_I_analytic(params, 2),
            correlation_I_analytic(params, 3), correlation_I_analytic(params, 4)};
}

std::string_view to_string(Method method) {
    return method == Method::analytic ? "analytic" : "brute_force";
}

CorrelationReport trilocal_score(const EjmParams &params, Method method,
                                 bool verify) {
    CorrelationReport report;
    report.method = method;
    std::array<double, 4> other{};
    if (method == Method::analytic) {
        report.I = correlations_analytic(params);
        if (verify) {
            other = correlations_bruteforce(StarScenario::standard(params));
        }
    } else {
        report.I = correlations_bruteforce(StarScenario::standard(params));
        if (verify) {
            other = correlations_analytic(params);
        }
    }
    if (verify) {
        for (std::size_t m = 0; m < 4; ++m) {
            if (std::abs(report.I[m] - other[m]) > kAgreementTol) {
                throw ContractError("trilocal_score: analytic and brute-force I_" +
                                    std::to_string(m + 1) + " disagree");
            }
        }
    }
    for (double v : report.I) {
        report.S += std::cbrt(std::abs(v));
    }
    report.violated = report.S > kTrilocalBound;
    return report;
}

double trilocal_score_factored(const EjmParams &params) {
    const double phi = params.phi();
    const double shift = phi - params.phi_z();
    const double g2 = std::sin(2.0 * params.gamma());
    const double lift = 1.0 + std::sin(params.theta());
    const double bracket =
        std::cbrt(std::abs(g2 * std::cos(2.0 * shift) * std::sin(phi + pi / 4))) +
        std::cbrt(std::abs(2.0 * g2 * std::sin(phi + pi / 4))) +
        std::cbrt(std::abs(sqrt2 * lift * std::cos(shift + pi / 4))) +
        std::cbrt(std::abs(sqrt2 * lift * std::sin(shift + pi / 4)));
    return std::cbrt(std::abs(params.z())) / 2.0 * bracket;
}

namespace reference {

std::array<double, 4> correlations_bruteforce(const StarScenario &scenario) {
    const auto proj = build_projectors(scenario);
    const auto chi = contract_bob(scenario);
    std::array<double, 4> out{};
    for (int xi = 0; xi < 8; ++xi) {
        const Bits x = from_int(xi);
        const auto part = input_contribution(table_for(proj, chi, x), x);
        for (std::size_t m = 0; m < 4; ++m) {
            out[m] += part[m];
        }
    }
    for (auto &v : out) {
        v /= 8.0;
    }
    return out;
}

} // namespace reference

} // namespace ejm::network
