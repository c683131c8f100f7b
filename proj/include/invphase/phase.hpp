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
 * @file phase.hpp
 * Exponential phase operators e^{+i phi}, e^{-i phi} and their cosine / sine
 * combinations.
 *
 *   Susskind-Glogower (one-sided)
 *     Direct            e^{+} = sum |n><n+1|,   e^{-} = sum |n+1><n|
 *     FromAnnihilation  e^{+} = a N^{-1/2},     e^{-} = N^{1/2} a^-1
 *     FromCreation      e^{+} = a^+-1 N^{1/2},  e^{-} = N^{-1/2} a^+
 *
 *   Unitary (two-sided)
 *     Direct            pure lattice shift (plus one wrap entry if Cyclic)
 *     FromInverses      e^{+} = a^+-1 |N^{1/2}|, e^{-} = |N^{1/2}| a^-1
 *
 *   Measured (one-sided)
 *     e^{+} = 2k a^+-1,  e^{-} = 2k a^-1, with k a scalar fixed by the photon
 *     number n of the state the pair is meant for.
 *
 * cos = (e^{+} + e^{-}) / 2 and sin = (e^{+} - e^{-}) / 2i for every family.
 */

#include <string_view>

#include "invphase/fock.hpp"

namespace invphase {

enum class PhaseKind {
    SgDirect,
    SgFromAnnihilation,
    SgFromCreation,
    UnitaryDirect,
    UnitaryFromInverses,
    Measured,
};

/// How the measured-phase scalar k depends on n.
///   Paper       k = (1/2) sqrt(n(n+1)) / (n + 1/2)
///   Normalized  k such that <n|cos^2|n> + <n|sin^2|n> = 1 exactly
enum class KConvention { Paper, Normalized };

struct PhaseFamily {
    PhaseKind kind = PhaseKind::SgDirect;
    KConvention k = KConvention::Paper; // Measured only

    friend bool operator==(const PhaseFamily &, const PhaseFamily &) = default;
};

[[nodiscard]] std::string_view to_string(PhaseKind kind);
[[nodiscard]] std::string_view to_string(KConvention k);
[[nodiscard]] bool needs_two_sided(PhaseKind kind) noexcept;

struct ExpPhasePair {
    Op plus;  ///< e^{+i phi}
    Op minus; ///< e^{-i phi}
    PhaseFamily family;
};

enum class SgConstruction { Direct, FromAnnihilation, FromCreation };
enum class UnitaryConstruction { Direct, FromInverses };

/// Throws ContractError on a two-sided basis.
[[nodiscard]] ExpPhasePair sg_pair(const FockBasis &basis,
                                   SgConstruction construction);

/// Throws ContractError on a one-sided basis.
[[nodiscard]] ExpPhasePair unitary_pair(const FockBasis &basis,
                                        UnitaryConstruction construction);

/// Throws ContractError on a two-sided basis and DomainError unless
/// 0 <= n_context < dim - 1.
[[nodiscard]] ExpPhasePair measured_pair(const FockBasis &basis,
                                         KConvention k, int n_context);

/// Throws DomainError for n < 0.
[[nodiscard]] double k_of_n(int n, KConvention k);

/// Builds the pair for any family. n_context is only read for Measured.
[[nodiscard]] ExpPhasePair make_pair(const PhaseFamily &family,
                                     const FockBasis &basis,
                                     int n_context = 0);

[[nodiscard]] Op cosine(const ExpPhasePair &pair);
[[nodiscard]] Op sine(const ExpPhasePair &pair);

/// Max-abs entry of e^{-} - (e^{+})^dagger.
[[nodiscard]] double adjoint_defect(const ExpPhasePair &pair);

} // namespace invphase
