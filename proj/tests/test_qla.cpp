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

#include <array>
#include <random>

#include "doctest.h"
#include "ejm/bases.hpp"
#include "ejm/errors.hpp"
#include "ejm/qla.hpp"
#include "support.hpp"

using namespace ejm;
using namespace ejm::qla;
using bases::EjmParams;
using support::pi;

namespace {

StateVector ket(std::vector<Complex> amps) { return StateVector::from_amplitudes(std::move(amps)); }

const double r2 = 1.0 / std::sqrt(2.0);

} // namespace

TEST_CASE("state construction checks norm and length") {
    CHECK_THROWS_AS(ket({1.0, 1.0}), ContractError);
    CHECK_THROWS_AS(ket({1.0, 0.0, 0.0}), ArgumentError);
    CHECK_THROWS_AS(ket({1.0}), ArgumentError);
    CHECK_THROWS_AS(StateVector::normalized({0.0, 0.0}), ArgumentError);
    const auto s = StateVector::normalized({3.0, 4.0});
    CHECK(std::abs(s[0] - 0.6) < 1e-15);
    CHECK(StateVector::basis(3, 5)[5] == Complex(1.0));
    CHECK(StateVector::basis(3, 5).n_qubits() == 3);
    CHECK_THROWS_AS(StateVector::basis(2, 4), ArgumentError);
}

TEST_CASE("tensor product follows the big-endian convention") {
    const auto s = tensor_product(StateVector::basis(1, 0), StateVector::basis(1, 1));
    REQUIRE(s.dim() == 4);
    CHECK(s[0] == Complex(0.0));
    CHECK(s[1] == Complex(1.0));
    CHECK(s[2] == Complex(0.0));
    CHECK(s[3] == Complex(0.0));

    const auto id = tensor_product(Operator::identity(2), Operator::identity(2));
    CHECK(max_abs_diff(id, Operator::identity(4)) == 0.0);

    const QuantumObject a = StateVector::basis(1, 0);
    const QuantumObject b = Operator::identity(2);
    CHECK_THROWS_AS(tensor_product(a, b), KindMismatchError);
    CHECK_THROWS_AS(tensor_product(a, b), ArgumentError);
    const auto both = tensor_product(a, a);
    CHECK(std::holds_alternative<StateVector>(both));
}

TEST_CASE("tensor product of tetrahedron states matches hand expansion") {
    // |m_0> (x) |-m_0> for the regular-tetrahedron vertex z = 1/sqrt(3), phi = pi/4.
    const double z = 1 / std::sqrt(3.0), phi = pi / 4;
    const auto plus = bases::tetrahedron_state(z, phi, +1);
    const auto minus = bases::tetrahedron_state(z, phi, -1);
    const auto prod = tensor_product(plus, minus);
    const Complex em = std::polar(1.0, -phi / 2), ep = std::polar(1.0, phi / 2);
    const std::array<Complex, 4> expect{
        0.5 * std::sqrt((1 + z) * (1 - z)) * em * em, -0.5 * (1 + z) * em * ep,
        0.5 * (1 - z) * ep * em, -0.5 * std::sqrt((1 - z) * (1 + z)) * ep * ep};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(prod[k] - expect[k]) < 1e-15);
    }
}

TEST_CASE("tensor product associativity") {
    // Dyadic amplitudes multiply without rounding, so grouping cannot matter.
    const auto a = ket({0.5, Complex(0.5, 0.5), Complex(0.0, -0.5), 0.0});
    const auto b = ket({Complex(0.0, 1.0), 0.0});
    const auto c = ket({0.0, -1.0});
    const auto left = tensor_product(tensor_product(a, b), c);
    const auto right = tensor_product(a, tensor_product(b, c));
    for (std::size_t k = 0; k < left.dim(); ++k) {
        CHECK(left[k] == right[k]);
    }
    const EjmParams p(0.85, 0.3, 0.8, 0.5);
    const auto x = bases::two_qubit_ejm(p, 1, false);
    const auto y = bases::single_qubit_m(p, 2, -1);
    const auto w = bases::single_qubit_m(p, 3, 1);
    const auto l2 = tensor_product(tensor_product(x, y), w);
    const auto r2v = tensor_product(x, tensor_product(y, w));
    for (std::size_t k = 0; k < l2.dim(); ++k) {
        CHECK(std::abs(l2[k] - r2v[k]) < 1e-15);
    }
}

TEST_CASE("partial trace") {
    const auto s01 = StateVector::basis(2, 1);
    const std::array<int, 1> q0{0};
    const std::array<int, 1> q1{1};
    const auto rho = partial_trace(s01, q0);
    CHECK(max_abs_diff(rho, Operator::from_entries({1, 0, 0, 0})) < 1e-15);

    const auto bell = ket({0.0, r2, r2, 0.0});
    CHECK(max_abs_diff(partial_trace(bell, q1), Operator::from_entries({0.5, 0, 0, 0.5})) < 1e-15);

    const std::array<int, 0> none{};
    const std::array<int, 1> bad{2};
    CHECK_THROWS_AS(partial_trace(bell, none), ArgumentError);
    CHECK_THROWS_AS(partial_trace(bell, bad), ArgumentError);

    SUBCASE("reduction of a three-qubit basis state") {
        const EjmParams p(0.8, 0.3, pi / 3, pi / 6);
        const auto psi = bases::three_qubit_ejm(p, 0, 0);
        const std::array<int, 1> last{2};
        const auto v = bloch_vector(partial_trace(psi, last));
        const double rho = std::sqrt(1 - 0.64);
        const BlochVector m0{rho * std::cos(0.3), rho * std::sin(0.3), 0.8};
        CHECK(max_abs_diff(v, 0.5 * m0) < 1e-12);
    }

    SUBCASE("tracing in stages equals tracing at once") {
        const EjmParams p(0.9, 1.2, 0.4, 0.7);
        const auto fam = bases::n_qubit_ejm(p, 4);
        for (const auto &e : fam.entries()) {
            const std::array<int, 2> keep01{0, 1};
            const std::array<int, 3> keep012{0, 1, 2};
            const auto once = partial_trace(e.state, keep01);
            const auto staged = partial_trace(partial_trace(e.state, keep012), keep01);
            CHECK(max_abs_diff(once, staged) <= 1e-13);
            CHECK(std::abs(once.trace() - 1.0) < 1e-12);
            CHECK(once.is_hermitian());
        }
    }

    SUBCASE("keep order does not matter") {
        const auto psi = bases::three_qubit_ejm(EjmParams(0.7, 0.2, 0.5, 0.9), 2, 1);
        const std::array<int, 2> a{0, 2};
        const std::array<int, 3> b{2, 0, 2};
        CHECK(max_abs_diff(partial_trace(psi, a), partial_trace(psi, b)) == 0.0);
    }
}

TEST_CASE("expectation values") {
    CHECK(expectation(StateVector::basis(1, 0), pauli_z()) == doctest::Approx(1.0));
    CHECK_THROWS_AS(expectation(StateVector::basis(2, 0), pauli_z()), ArgumentError);
    const auto lower = Operator::from_entries({0, 0, 1, 0});
    CHECK_THROWS_AS(expectation(StateVector::basis(1, 0), lower), ContractError);

    // Regular-tetrahedron vertex m_0 = (1,1,1)/sqrt(3).
    const auto m0 = bases::tetrahedron_state(1 / std::sqrt(3.0), pi / 4, +1);
    for (const auto *op : {&pauli_x(), &pauli_y(), &pauli_z()}) {
        CHECK(std::abs(expectation(m0, *op) - 1 / std::sqrt(3.0)) < 1e-12);
    }

    const EjmParams p(0.9, 0.4, pi / 3, 0.0);
    const auto phi0 = bases::two_qubit_ejm(p, 0, false);
    const auto zi = tensor_product(pauli_z(), Operator::identity(2));
    CHECK(std::abs(expectation(phi0, zi) - 0.25) < 1e-12);
}

TEST_CASE("Pauli algebra is exact") {
    const std::array<const Operator *, 3> s{&pauli_x(), &pauli_y(), &pauli_z()};
    for (int a = 0; a < 3; ++a) {
        CHECK(s[a]->is_hermitian(0.0));
        CHECK(s[a]->trace() == Complex(0.0));
        for (int b = 0; b < 3; ++b) {
            Operator expect = a == b ? Operator::identity(2) : Operator::zeros(2);
            for (int c = 0; c < 3; ++c) {
                const int eps = (a - b) * (b - c) * (c - a) / 2;
                if (eps != 0) {
                    expect += Complex(0.0, eps) * *s[c];
                }
            }
            CHECK(max_abs_diff((*s[a]) * (*s[b]), expect) == 0.0);
        }
    }
}

TEST_CASE("conjugation") {
    const auto s = ket({r2, Complex(0.0, r2)});
    const auto c = conjugate_amplitudes(s);
    CHECK(c[1] == Complex(0.0, -r2));
    const auto real = ket({0.6, 0.0, -0.8, 0.0});
    const auto rc = conjugate_amplitudes(real);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(rc[k] == real[k]);
    }
    const auto psi = bases::three_qubit_ejm(EjmParams(0.8, 0.3, 1.0, 0.5), 1, 0);
    const auto back = conjugate_amplitudes(conjugate_amplitudes(psi));
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        CHECK(back[k] == psi[k]);
    }
}

TEST_CASE("reorder and reduced Bloch vectors agree with partial trace") {
    const auto psi = bases::n_qubit_ejm(EjmParams(0.75, -0.6, 0.9, 0.3), 5).entries()[17].state;
    for (int q = 0; q < 5; ++q) {
        const std::array<int, 1> keep{q};
        const auto direct = reduced_bloch_vector(psi, q);
        const auto viaTrace = bloch_vector(partial_trace(psi, keep));
        CHECK(max_abs_diff(direct, viaTrace) < 1e-14);
        CHECK(direct.norm() <= 1 + 1e-10);
    }
    const std::array<int, 5> order{4, 3, 2, 1, 0};
    const auto rev = reorder_qubits(psi, order);
    CHECK(max_abs_diff(reduced_bloch_vector(rev, 0), reduced_bloch_vector(psi, 4)) < 1e-15);
    const std::array<int, 2> bad{0, 0};
    CHECK_THROWS_AS(reorder_qubits(StateVector::basis(2, 0), bad), ArgumentError);
}

TEST_CASE("property: reductions of random states have unit trace") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> amps(16);
        for (auto &a : amps) {
            a = {g(rng), g(rng)};
        }
        const auto s = StateVector::normalized(amps);
        const std::array<int, 2> keep{1, 3};
        const auto rho = partial_trace(s, keep);
        CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
        CHECK(rho.is_hermitian());
    }
}
