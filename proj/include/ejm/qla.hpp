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
 * Dense complex linear algebra for small multi-qubit systems.
 *
 * Index convention: the computational basis label j_1 j_2 ... j_n maps to
 * index sum_k j_k 2^(n-k). Qubit positions are 0-based from the left, so
 * position 0 is the most significant bit. All objects are immutable values.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace ejm::qla {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// Real 3-vector of Pauli expectations of a single-qubit state.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double norm() const;
    [[nodiscard]] double dot(const BlochVector &other) const;

    BlochVector &operator+=(const BlochVector &other);
    friend BlochVector operator+(BlochVector a, const BlochVector &b) {
        return a += b;
    }
    friend BlochVector operator-(const BlochVector &a, const BlochVector &b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend BlochVector operator-(const BlochVector &a) {
        return {-a.x, -a.y, -a.z};
    }
    friend BlochVector operator*(double s, const BlochVector &a) {
        return {s * a.x, s * a.y, s * a.z};
    }
};

/// Largest componentwise deviation between two Bloch vectors.
double max_abs_diff(const BlochVector &a, const BlochVector &b);

/// Unit-norm pure state on n qubits.
class StateVector {
  public:
    /// Wraps amplitudes that must already be normalized (within kNormTol)
    /// and have power-of-two length >= 2. Throws ContractError/ArgumentError.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    /// Rescales to unit norm. Throws ArgumentError on a zero vector.
    static StateVector normalized(std::vector<Complex> amplitudes);

    /// Computational basis state |index> on n qubits.
    static StateVector basis(std::size_t n_qubits, std::size_t index);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const {
        return amplitudes_[i];
    }

  private:
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Dense dim x dim complex matrix, row-major.
class Operator {
  public:
    static Operator zeros(std::size_t dim);
    static Operator identity(std::size_t dim);
    /// Builds from row-major entries; size must be a perfect square.
    static Operator from_entries(std::vector<Complex> entries);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] std::span<const Complex> entries() const { return entries_; }

    [[nodiscard]] Operator adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] bool is_hermitian(double tol = kHermitianTol) const;

    Operator &operator+=(const Operator &other);
    Operator &operator-=(const Operator &other);
    friend Operator operator+(Operator a, const Operator &b) { return a += b; }
    friend Operator operator-(Operator a, const Operator &b) { return a -= b; }
    friend Operator operator*(const Operator &a, const Operator &b);
    friend Operator operator*(Complex s, Operator a);

  private:
    Operator(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {}

    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Operator &a, const Operator &b);

const Operator &pauli_x();
const Operator &pauli_y();
const Operator &pauli_z();

/// <a|b>
Complex inner(const StateVector &a, const StateVector &b);
/// |a><b|
Operator outer(const StateVector &a, const StateVector &b);
/// op |state>, unnormalized.
std::vector<Complex> apply(const Operator &op, const StateVector &state);

StateVector tensor_product(const StateVector &a, const StateVector &b);
Operator tensor_product(const Operator &a, const Operator &b);

using QuantumObject = std::variant<StateVector, Operator>;
/// Runtime-typed product; throws KindMismatchError on mixed kinds.
QuantumObject tensor_product(const QuantumObject &a, const QuantumObject &b);

/// Reduced density matrix on the qubit positions in `keep` (deduplicated,
/// taken in ascending order). Throws ArgumentError on an empty set or an
/// out-of-range position.
Operator partial_trace(const StateVector &state, std::span<const int> keep);
Operator partial_trace(const Operator &rho, std::span<const int> keep);

/// <state|obs|state>. Throws ContractError for a non-Hermitian observable,
/// ArgumentError on a dimension mismatch.
double expectation(const StateVector &state, const Operator &obs);

StateVector conjugate_amplitudes(const StateVector &state);

/// New state whose qubit q is qubit order[q] of the input.
StateVector reorder_qubits(const StateVector &state, std::span<const int> order);

/// Bloch vector of a 2x2 density operator.
BlochVector bloch_vector(const Operator &rho);

/// Bloch vector of the single-qubit reduction at `qubit`, computed without
/// forming the full partial trace.
BlochVector reduced_bloch_vector(const StateVector &state, int qubit);

} // namespace ejm::qla
