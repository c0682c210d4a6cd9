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

#include "ejm/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include <omp.h>

#include "ejm/errors.hpp"
#include "ejm/parallel.hpp"

namespace ejm::analysis {

namespace {

using qla::Complex;

// Which label entry selects the tetrahedron vertex seen at `qubit`, or
// nullopt when this label does not contribute to that qubit's tetrahedron.
std::optional<int> vertex_of(const BasisLabel &label, int qubit, std::size_t n) {
    const auto q = static_cast<std::size_t>(qubit);
    const bool odd = n % 2 == 1;
    if (odd && n >= 3 && q == n - 1) {
        if (label.l.value_or(0) != 0) {
            return std::nullopt;
        }
        return label.i;
    }
    if (q < 2) {
        return label.i;
    }
    const std::size_t block = (q - 2) / 2;
    if (block < label.j.size()) {
        return label.j[block];
    }
    return std::nullopt;
}

struct TetrahedronCheck {
    bool ok = true;
    bool degenerate = false;
};

TetrahedronCheck check_tetrahedron(const SymmetryReport &report, int qubit,
                                   std::size_t n) {
    std::array<std::optional<BlochVector>, 4> vertices;
    for (const auto &r : report.reductions) {
        if (r.qubit != qubit) {
            continue;
        }
        const auto v = vertex_of(r.label, qubit, n);
        if (!v || *v < 0 || *v > 3) {
            continue;
        }
        auto &slot = vertices[static_cast<std::size_t>(*v)];
        if (!slot) {
            slot = r.vector;
        } else if (qla::max_abs_diff(*slot, r.vector) > kGeometryTol) {
            return {false, false};
        }
    }
    double radius = 0.0;
    BlochVector sum;
    for (const auto &v : vertices) {
        if (!v) {
            return {false, false};
        }
        radius = std::max(radius, v->norm());
        sum += *v;
    }
    if (radius < kGeometryTol) {
        return {true, true};
    }
    if (sum.norm() > kGeometryTol) {
        return {false, false};
    }
    std::array<BlochVector, 3> edges;
    for (std::size_t e = 0; e < 3; ++e) {
        edges[e] = *vertices[0] + *vertices[e + 1];
    }
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
            const double la = edges[a].norm();
            const double lb = edges[b].norm();
            if (la < kGeometryTol || lb < kGeometryTol) {
                continue;
            }
            if (std::abs(edges[a].dot(edges[b])) / (la * lb) > kGeometryTol) {
                return {false, false};
            }
        }
    }
    return {true, false};
}

std::vector<double> distinct_radii(const std::vector<Reduction> &reductions) {
    std::vector<double> norms;
    norms.reserve(reductions.size());
    for (const auto &r : reductions) {
        norms.push_back(r.vector.norm());
    }
    std::sort(norms.begin(), norms.end());
    std::vector<double> radii;
    for (double v : norms) {
        if (radii.empty() || v - radii.back() > kGeometryTol) {
            radii.push_back(v);
        }
    }
    return radii;
}

bool has_mirror_pairs(const std::vector<Reduction> &reductions) {
    const auto count = static_cast<long>(reductions.size());
    bool all = true;
#pragma omp parallel for reduction(&& : all) num_threads(parallel::worker_count())
    for (long a = 0; a < count; ++a) {
        const BlochVector target = -reductions[static_cast<std::size_t>(a)].vector;
        bool found = false;
        for (const auto &r : reductions) {
            if (qla::max_abs_diff(r.vector, target) < kGeometryTol) {
                found = true;
                break;
            }
        }
        all = all && found;
    }
    return all;
}

} // namespace

TangleValue three_tangle(const StateVector &state) {
    if (state.n_qubits() != 3) {
        throw ArgumentError("three_tangle: expects a three-qubit state");
    }
    const auto a = [&](int j1, int j2, int j3) {
        return state[static_cast<std::size_t>(j1 * 4 + j2 * 2 + j3)];
    };
    const Complex p = a(0, 0, 0) * a(1, 1, 1) - a(0, 0, 1) * a(1, 1, 0);
    const Complex q = a(0, 1, 0) * a(1, 0, 1) - a(1, 0, 0) * a(0, 1, 1);
    const Complex quartic = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                            a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    const Complex cross = (a(0, 0, 0) * a(1, 1, 1) + a(0, 0, 1) * a(1, 1, 0)) *
                          (a(0, 1, 0) * a(1, 0, 1) + a(1, 0, 0) * a(0, 1, 1));
    const double raw = 4.0 * std::abs(p * p + q * q + 4.0 * quartic - 2.0 * cross);
    if (raw > 1.0 + 1e-12) {
        throw ContractError("three_tangle: value exceeds one; input is not a unit state");
    }
    return {std::min(raw, 1.0)};
}

double concurrence(const StateVector &state) {
    if (state.n_qubits() != 2) {
        throw ArgumentError("concurrence: expects a two-qubit state");
    }
    return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

const BlochVector &SymmetryReport::at(const BasisLabel &label, int qubit) const {
    for (const auto &r : reductions) {
        if (r.qubit == qubit && r.label == label) {
            return r.vector;
        }
    }
    throw ArgumentError("SymmetryReport: no reduction for " + label.to_string() +
                        " at qubit " + std::to_string(qubit));
}

SymmetryReport reduced_bloch_vectors(const BasisFamily &basis) {
    const auto &entries = basis.entries();
    const int n = static_cast<int>(basis.n_qubits());
    SymmetryReport report;
    report.reductions.resize(entries.size() * static_cast<std::size_t>(n));
    const auto count = static_cast<long>(entries.size());
#pragma omp parallel for num_threads(parallel::worker_count())
    for (long s = 0; s < count; ++s) {
        const auto &entry = entries[static_cast<std::size_t>(s)];
        for (int q = 0; q < n; ++q) {
            report.reductions[static_cast<std::size_t>(s * n + q)] = {
                entry.label, q, qla::reduced_bloch_vector(entry.state, q)};
        }
    }
    return report;
}

SymmetryReport symmetry_report(const BasisFamily &basis) {
    SymmetryReport report = reduced_bloch_vectors(basis);
    for (const auto &r : report.reductions) {
        report.vector_sum += r.vector;
    }
    report.radii = distinct_radii(report.reductions);
    report.mirror_pairs_ok = has_mirror_pairs(report.reductions);
    report.parallelepiped_ok = true;
    for (int q = 0; q < static_cast<int>(basis.n_qubits()); ++q) {
        const auto check = check_tetrahedron(report, q, basis.n_qubits());
        report.parallelepiped_ok = report.parallelepiped_ok && check.ok;
        report.degenerate = report.degenerate || check.degenerate;
    }
    return report;
}

CompletenessReport verify_orthonormal_complete(const BasisFamily &basis) {
    const auto &entries = basis.entries();
    const auto count = static_cast<long>(entries.size());
    const auto dim = static_cast<long>(entries.empty() ? 0 : entries.front().state.dim());
    const int workers = parallel::worker_count();

    double gram = 0.0;
#pragma omp parallel for reduction(max : gram) num_threads(workers)
    for (long r = 0; r < count; ++r) {
        const auto &a = entries[static_cast<std::size_t>(r)].state;
        for (long c = 0; c < count; ++c) {
            const Complex g = qla::inner(a, entries[static_cast<std::size_t>(c)].state);
            gram = std::max(gram, std::abs(g - (r == c ? 1.0 : 0.0)));
        }
    }

    double completeness = 0.0;
#pragma omp parallel for reduction(max : completeness) num_threads(workers)
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            Complex sum = 0.0;
            for (const auto &e : entries) {
                sum += e.state[static_cast<std::size_t>(r)] *
                       std::conj(e.state[static_cast<std::size_t>(c)]);
            }
            completeness = std::max(completeness, std::abs(sum - (r == c ? 1.0 : 0.0)));
        }
    }
    return {gram, completeness};
}

namespace reference {

SymmetryReport reduced_bloch_vectors(const BasisFamily &basis) {
    SymmetryReport report;
    const int n = static_cast<int>(basis.n_qubits());
    for (const auto &entry : basis.entries()) {
        for (int q = 0; q < n; ++q) {
            const int keep[] = {q};
            report.reductions.push_back(
                {entry.label, q, qla::bloch_vector(qla::partial_trace(entry.state, keep))});
        }
    }
    return report;
}

CompletenessReport verify_orthonormal_complete(const BasisFamily &basis) {
    const auto &entries = basis.entries();
    CompletenessReport out;
    for (std::size_t r = 0; r < entries.size(); ++r) {
        for (std::size_t c = 0; c < entries.size(); ++c) {
            const Complex g = qla::inner(entries[r].state, entries[c].state);
            out.gram_error = std::max(out.gram_error, std::abs(g - (r == c ? 1.0 : 0.0)));
        }
    }
    if (entries.empty()) {
        return out;
    }
    const std::size_t dim = entries.front().state.dim();
    auto sum = qla::Operator::zeros(dim);
    for (const auto &e : entries) {
        sum += qla::outer(e.state, e.state);
    }
    out.completeness_error = qla::max_abs_diff(sum, qla::Operator::identity(dim));
    return out;
}

} // namespace reference

} // namespace ejm::analysis
