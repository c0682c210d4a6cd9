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
 * Entanglement measures, single-qubit reductions, and the geometric
 * predicates (mirror-image tetrahedra, rectangular parallelepiped) of the
 * symmetric joint-measurement bases.
 */

#pragma once

#include <vector>

#include "ejm/bases.hpp"
#include "ejm/qla.hpp"

namespace ejm::analysis {

using bases::BasisFamily;
using bases::BasisLabel;
using qla::BlochVector;
using qla::StateVector;

/// Vectors, radii and sums are compared at this tolerance.
inline constexpr double kGeometryTol = 1e-9;

struct TangleValue {
    double value = 0.0;
};

/// Three-tangle of a three-qubit pure state from its eight amplitudes.
/// Throws ArgumentError on the wrong qubit count and ContractError when the
/// raw value exceeds one by more than 1e-12.
TangleValue three_tangle(const StateVector &state);

/// Pure-state concurrence 2|a00 a11 - a01 a10|.
double concurrence(const StateVector &state);

struct Reduction {
    BasisLabel label;
    int qubit = 0;
    BlochVector vector;
};

struct SymmetryReport {
    /// Ordered by (label, qubit).
    std::vector<Reduction> reductions;
    /// Distinct vector magnitudes, ascending, merged within kGeometryTol.
    std::vector<double> radii;
    BlochVector vector_sum;
    bool parallelepiped_ok = false;
    bool mirror_pairs_ok = false;
    /// Some tetrahedron had zero radius and was accepted vacuously.
    bool degenerate = false;

    [[nodiscard]] const BlochVector &at(const BasisLabel &label, int qubit) const;
};

/// Bloch vector of every single-qubit reduction of every basis state
/// (OpenMP over states). Only `reductions` is filled.
SymmetryReport reduced_bloch_vectors(const BasisFamily &basis);

/**
 * Full symmetry report.
 *
 * For each qubit position the four tetrahedron vertices t_0..t_3 are read off
 * the label entry that selects them (head index i for the first two qubits
 * and for the trailing single qubit with l = 0, j_s for the s-th paired
 * block). Together with their mirror images they form a parallelepiped iff
 * sum t_v = 0; it is rectangular iff the edges t_0+t_1, t_0+t_2, t_0+t_3 are
 * pairwise orthogonal. Vertex sets with zero radius pass vacuously.
 */
SymmetryReport symmetry_report(const BasisFamily &basis);

struct CompletenessReport {
    double gram_error = 0.0;
    double completeness_error = 0.0;
};

/// max|Gram - I| and max|sum_s |s><s| - I|, OpenMP over rows.
CompletenessReport verify_orthonormal_complete(const BasisFamily &basis);

namespace reference {

/// Serial versions kept as the baseline for tests and benchmarks.
SymmetryReport reduced_bloch_vectors(const BasisFamily &basis);
CompletenessReport verify_orthonormal_complete(const BasisFamily &basis);

} // namespace reference

} // namespace ejm::analysis
