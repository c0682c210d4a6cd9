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

#include "ejm/qla.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ejm/errors.hpp"

namespace ejm::qla {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && std::has_single_bit(n); }

std::size_t log2_exact(std::size_t n) {
    return static_cast<std::size_t>(std::countr_zero(n));
}

// Bit of qubit position q inside an n-qubit index.
std::size_t bit_of(std::size_t index, std::size_t n, std::size_t q) {
    return (index >> (n - 1 - q)) & 1U;
}

std::vector<int> normalized_keep(std::span<const int> keep, std::size_t n) {
    if (keep.empty()) {
        throw ArgumentError("partial_trace: keep set must be nonempty");
    }
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 0 || static_cast<std::size_t>(sorted.back()) >= n) {
        throw ArgumentError("partial_trace: qubit position out of range");
    }
    return sorted;
}

// Splits every full index into (kept-subsystem index, traced-subsystem index).
struct IndexSplit {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> traced;
    std::size_t kept_dim;
    std::size_t traced_dim;
};

IndexSplit split_indices(std::size_t n, const std::vector<int> &keep) {
    std::vector<bool> is_kept(n, false);
    for (int q : keep) {
        is_kept[static_cast<std::size_t>(q)] = true;
    }
    const std::size_t dim = std::size_t{1} << n;
    IndexSplit split{std::vector<std::size_t>(dim), std::vector<std::size_t>(dim),
                     std::size_t{1} << keep.size(),
                     std::size_t{1} << (n - keep.size())};
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t k = 0;
        std::size_t t = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t b = bit_of(idx, n, q);
            if (is_kept[q]) {
                k = (k << 1U) | b;
            } else {
                t = (t << 1U) | b;
            }
        }
        split.kept[idx] = k;
        split.traced[idx] = t;
    }
    return split;
}

} // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::dot(const BlochVector &other) const {
    return x * other.x + y * other.y + z * other.z;
}

BlochVector &BlochVector::operator+=(const BlochVector &other) {
    x += other.x;
    y += other.y;
    z += other.z;
    return *this;
}

double max_abs_diff(const BlochVector &a, const BlochVector &b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y),
                     std::abs(a.z - b.z)});
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    if (!is_power_of_two(amplitudes.size())) {
        throw ArgumentError("state length must be a power of two >= 2");
    }
    double norm2 = 0.0;
    for (const auto &a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw ContractError("state is not normalized");
    }
    const std::size_t n = log2_exact(amplitudes.size());
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
    if (!is_power_of_two(amplitudes.size())) {
        throw ArgumentError("state length must be a power of two >= 2");
    }
    double norm2 = 0.0;
    for (const auto &a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (norm2 == 0.0) {
        throw ArgumentError("cannot normalize the zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto &a : amplitudes) {
        a *= inv;
    }
    const std::size_t n = log2_exact(amplitudes.size());
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits > 30) {
        throw ArgumentError("basis: qubit count out of range");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw ArgumentError("basis: index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

Operator Operator::zeros(std::size_t dim) {
    if (dim == 0) {
        throw ArgumentError("operator dimension must be positive");
    }
    return Operator(dim, std::vector<Complex>(dim * dim));
}

Operator Operator::identity(std::size_t dim) {
    Operator op = zeros(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        op.entries_[i * dim + i] = 1.0;
    }
    return op;
}

Operator Operator::from_entries(std::vector<Complex> entries) {
    const auto dim = static_cast<std::size_t>(
        std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (dim == 0 || dim * dim != entries.size()) {
        throw ArgumentError("operator entries must form a square matrix");
    }
    return Operator(dim, std::move(entries));
}

Operator Operator::adjoint() const {
    Operator out = zeros(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.entries_[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return out;
}

Complex Operator::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += entries_[i * dim_ + i];
    }
    return t;
}

bool Operator::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            if (std::abs(entries_[r * dim_ + c] -
                         std::conj(entries_[c * dim_ + r])) > tol) {
                return false;
            }
        }
    }
    return true;
}

Operator &Operator::operator+=(const Operator &other) {
    if (other.dim_ != dim_) {
        throw ArgumentError("operator dimensions differ");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

Operator &Operator::operator-=(const Operator &other) {
    if (other.dim_ != dim_) {
        throw ArgumentError("operator dimensions differ");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

Operator operator*(const Operator &a, const Operator &b) {
    if (a.dim_ != b.dim_) {
        throw ArgumentError("operator dimensions differ");
    }
    const std::size_t d = a.dim_;
    Operator out = Operator::zeros(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex ark = a.entries_[r * d + k];
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                out.entries_[r * d + c] += ark * b.entries_[k * d + c];
            }
        }
    }
    return out;
}

Operator operator*(Complex s, Operator a) {
    for (auto &e : a.entries_) {
        e *= s;
    }
    return a;
}

double max_abs_diff(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("operator dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

const Operator &pauli_x() {
    static const Operator x = Operator::from_entries({0.0, 1.0, 1.0, 0.0});
    return x;
}

const Operator &pauli_y() {
    static const Operator y = Operator::from_entries(
        {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});
    return y;
}

const Operator &pauli_z() {
    static const Operator z = Operator::from_entries({1.0, 0.0, 0.0, -1.0});
    return z;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("inner: dimensions differ");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

Operator outer(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("outer: dimensions differ");
    }
    const std::size_t d = a.dim();
    std::vector<Complex> e(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            e[r * d + c] = a[r] * std::conj(b[c]);
        }
    }
    return Operator::from_entries(std::move(e));
}

std::vector<Complex> apply(const Operator &op, const StateVector &state) {
    if (op.dim() != state.dim()) {
        throw ArgumentError("apply: dimensions differ");
    }
    const std::size_t d = op.dim();
    std::vector<Complex> out(d);
    for (std::size_t r = 0; r < d; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            s += op(r, c) * state[c];
        }
        out[r] = s;
    }
    return out;
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    std::vector<Complex> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    // Products of unit vectors stay within rounding of unit norm.
    return StateVector::from_amplitudes(std::move(out));
}

Operator tensor_product(const Operator &a, const Operator &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t d = da * db;
    std::vector<Complex> e(d * d);
    for (std::size_t ra = 0; ra < da; ++ra) {
        for (std::size_t ca = 0; ca < da; ++ca) {
            const Complex x = a(ra, ca);
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    e[(ra * db + rb) * d + (ca * db + cb)] = x * b(rb, cb);
                }
            }
        }
    }
    return Operator::from_entries(std::move(e));
}

QuantumObject tensor_product(const QuantumObject &a, const QuantumObject &b) {
    if (a.index() != b.index()) {
        throw KindMismatchError(
            "tensor_product: cannot combine a state with an operator");
    }
    if (const auto *sa = std::get_if<StateVector>(&a)) {
        return tensor_product(*sa, std::get<StateVector>(b));
    }
    return tensor_product(std::get<Operator>(a), std::get<Operator>(b));
}

Operator partial_trace(const StateVector &state, std::span<const int> keep) {
    const std::size_t n = state.n_qubits();
    const auto kept = normalized_keep(keep, n);
    const auto split = split_indices(n, kept);

    // Amplitudes arranged as a kept_dim x traced_dim matrix M; rho = M M^dagger.
    std::vector<Complex> m(split.kept_dim * split.traced_dim);
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        m[split.kept[idx] * split.traced_dim + split.traced[idx]] = state[idx];
    }
    const std::size_t dk = split.kept_dim;
    const std::size_t dt = split.traced_dim;
    std::vector<Complex> rho(dk * dk);
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = 0; c < dk; ++c) {
            Complex s = 0.0;
            for (std::size_t t = 0; t < dt; ++t) {
                s += m[r * dt + t] * std::conj(m[c * dt + t]);
            }
            rho[r * dk + c] = s;
        }
    }
    return Operator::from_entries(std::move(rho));
}

Operator partial_trace(const Operator &rho, std::span<const int> keep) {
    if (!is_power_of_two(rho.dim())) {
        throw ArgumentError("partial_trace: operator dimension must be 2^n");
    }
    const std::size_t n = log2_exact(rho.dim());
    const auto kept = normalized_keep(keep, n);
    const auto split = split_indices(n, kept);
    const std::size_t dk = split.kept_dim;
    std::vector<Complex> out(dk * dk);
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            if (split.traced[r] == split.traced[c]) {
                out[split.kept[r] * dk + split.kept[c]] += rho(r, c);
            }
        }
    }
    return Operator::from_entries(std::move(out));
}

double expectation(const StateVector &state, const Operator &obs) {
    if (obs.dim() != state.dim()) {
        throw ArgumentError("expectation: dimensions differ");
    }
    if (!obs.is_hermitian()) {
        throw ContractError("expectation: observable is not Hermitian");
    }
    const auto applied = apply(obs, state);
    Complex s = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        s += std::conj(state[i]) * applied[i];
    }
    if (std::abs(s.imag()) > kHermitianTol) {
        throw ContractError("expectation: imaginary residue above tolerance");
    }
    return s.real();
}

StateVector conjugate_amplitudes(const StateVector &state) {
    std::vector<Complex> out(state.amplitudes().begin(),
                             state.amplitudes().end());
    for (auto &a : out) {
        a = std::conj(a);
    }
    return StateVector::from_amplitudes(std::move(out));
}

StateVector reorder_qubits(const StateVector &state, std::span<const int> order) {
    const std::size_t n = state.n_qubits();
    if (order.size() != n) {
        throw ArgumentError("reorder_qubits: order must list every qubit");
    }
    std::vector<bool> seen(n, false);
    for (int q : order) {
        if (q < 0 || static_cast<std::size_t>(q) >= n ||
            seen[static_cast<std::size_t>(q)]) {
            throw ArgumentError("reorder_qubits: order is not a permutation");
        }
        seen[static_cast<std::size_t>(q)] = true;
    }
    std::vector<Complex> out(state.dim());
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        std::size_t target = 0;
        for (std::size_t q = 0; q < n; ++q) {
            target = (target << 1U) |
                     bit_of(idx, n, static_cast<std::size_t>(order[q]));
        }
        out[target] = state[idx];
    }
    return StateVector::from_amplitudes(std::move(out));
}

BlochVector bloch_vector(const Operator &rho) {
    if (rho.dim() != 2) {
        throw ArgumentError("bloch_vector: expects a 2x2 operator");
    }
    const Complex off = rho(1, 0);
    return {2.0 * off.real(), 2.0 * off.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

BlochVector reduced_bloch_vector(const StateVector &state, int qubit) {
    const std::size_t n = state.n_qubits();
    if (qubit < 0 || static_cast<std::size_t>(qubit) >= n) {
        throw ArgumentError("reduced_bloch_vector: qubit out of range");
    }
    const std::size_t mask = std::size_t{1} << (n - 1 - static_cast<std::size_t>(qubit));
    double p0 = 0.0;
    double p1 = 0.0;
    Complex rho10 = 0.0;
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        if ((idx & mask) != 0U) {
            continue;
        }
        const Complex a0 = state[idx];
        const Complex a1 = state[idx | mask];
        p0 += std::norm(a0);
        p1 += std::norm(a1);
        rho10 += a1 * std::conj(a0);
    }
    return {2.0 * rho10.real(), 2.0 * rho10.imag(), p0 - p1};
}

} // namespace ejm::qla
