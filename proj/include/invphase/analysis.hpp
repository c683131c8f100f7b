// Copyright 2026 The invphase Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file analysis.hpp
 * Identity verification, number-state trig sums and phase statistics.
 *
 * A failed identity is a report entry, not an exception. Interior windows
 * drop the top two one-sided labels and, for a Truncated two-sided lattice,
 * one label per edge.
 */

#include <optional>
#include <string>
#include <vector>

#include "invphase/fock.hpp"
#include "invphase/phase.hpp"

namespace invphase {

inline constexpr double kDefaultIdentityTol = 1e-12;
inline constexpr double kDefaultQuadratureTol = 1e-6;

struct BasisParams {
    int dim = 32;        ///< one-sided D
    int half_width = 16; ///< two-sided M
    Boundary boundary = Boundary::Cyclic;

    [[nodiscard]] FockBasis one_sided() const {
        return FockBasis::one_sided(dim);
    }
    [[nodiscard]] FockBasis two_sided() const {
        return FockBasis::two_sided(half_width, boundary);
    }
    [[nodiscard]] FockBasis for_family(PhaseKind kind) const {
        return needs_two_sided(kind) ? two_sided() : one_sided();
    }
};

struct VerifyParams {
    BasisParams basis;
    /// Representation used by the two unitary product identities.
    UnitaryConstruction unitary = UnitaryConstruction::Direct;
    double tol = kDefaultIdentityTol;
};

struct IdentityReport {
    std::string name;
    std::string statement;
    double residual_full = 0.0;
    double residual_interior = 0.0;
    std::vector<int> excluded_rows;
    /// Columns (inside the interior window) carrying an entry above tol.
    std::vector<int> discrepant_columns;
    /// Whether a failure here fails a verification run.
    bool gating = false;
    bool passed = false;
};

/// Labels removed from interior comparisons on this basis.
[[nodiscard]] std::vector<int> interior_exclusions(const FockBasis &basis);

/// The twelve identity checks, in a fixed order.
[[nodiscard]] std::vector<IdentityReport> verify_all(const VerifyParams &params);

/// Labels of columns where |a - b| exceeds tol outside excluded rows/cols.
[[nodiscard]] std::vector<int>
discrepant_columns(const Op &a, const Op &b, double tol,
                   std::span<const int> excluded_labels = {});

struct TrigStats {
    int n = 0;
    double cos_sq = 0.0;
    double sin_sq = 0.0;
    double sum = 0.0;
    bool claim_holds = false;
    std::optional<double> k; ///< Measured family only
};

struct LabelRange {
    int first = 0;
    int last = 0;

    friend bool operator==(const LabelRange &, const LabelRange &) = default;
};

/// Widest n range trig_sum_table accepts for this family and basis.
[[nodiscard]] LabelRange trig_range_limit(const PhaseFamily &family,
                                          const BasisParams &params);

/// <n|cos^2|n>, <n|sin^2|n> for each n in range. Throws DomainError when the
/// range leaves trig_range_limit or is empty.
[[nodiscard]] std::vector<TrigStats>
trig_sum_table(const PhaseFamily &family, const BasisParams &params,
               LabelRange range, double tol = kDefaultIdentityTol);

struct PhaseStatistics {
    double mean_cos = 0.0;
    double mean_sin = 0.0;
    double var_cos = 0.0;
    double var_sin = 0.0;
    double trig_sum = 0.0;
    std::optional<int> n_context; ///< Measured family only
};

/// Expectations are divided by <ket|ket>. Throws ContractError when the ket's
/// basis kind does not match the family.
[[nodiscard]] PhaseStatistics phase_statistics(const PhaseFamily &family,
                                               const Ket &ket);

struct PhaseSample {
    double phi = 0.0;
    double density = 0.0;
};

/// |sum_n e^{-i n phi} c_n|^2 / 2pi on `bins` points over [-pi, pi).
/// Throws DomainError for bins < 4, ContractError for a two-sided ket.
[[nodiscard]] std::vector<PhaseSample> phase_distribution(const Ket &ket,
                                                          int bins);

} // namespace invphase
