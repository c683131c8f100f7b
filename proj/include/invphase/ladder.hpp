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
 * @file ladder.hpp
 * Ladder operators, their one-sided inverses and the square-root number
 * operators as matrices on a truncated lattice.
 *
 * One-sided lattice (n = 0 .. D-1):
 *   a        <n-1|a|n>     = sqrt(n)
 *   a^-1     <n+1|a^-1|n>  = 1/sqrt(n+1)   column D-1 is zero (truncated)
 *   a^+-1    <n-1|a^+-1|n> = 1/sqrt(n)     column 0 is zero
 *   N^{1/2}, N^{-1/2}      diagonal sqrt(n), 1/sqrt(n) (0 at n = 0)
 *
 * Two-sided lattice (n = -M .. M): the negative branch uses |n|, i.e.
 * |N^{1/2}| = diag sqrt|n| and the extended inverses carry 1/sqrt|n|. The
 * weight 1/sqrt|0| does not exist, so the column whose image is n = 0 is
 * zero. Edge columns are zero (Truncated) or wrap around (Cyclic).
 */

#include <string_view>

#include "invphase/fock.hpp"

namespace invphase {

enum class Ladder {
    Annihilate,
    Create,
    InvAnnihilate,
    InvCreate,
    Number,
    SqrtNumber,
    InvSqrtNumber,
    AbsSqrtNumber,
    VacuumProjector,
    Identity,
};

[[nodiscard]] std::string_view to_string(Ladder which);

struct LadderSpec {
    FockBasis basis;
    Ladder which;
};

/// SqrtNumber/InvSqrtNumber need a one-sided basis, AbsSqrtNumber a
/// two-sided one; everything else is allowed on both.
[[nodiscard]] bool is_permitted(const LadderSpec &spec) noexcept;

/// Throws ContractError when !is_permitted(spec). On a two-sided basis
/// InvAnnihilate/InvCreate delegate to build_extended_inverse.
[[nodiscard]] Op build(const LadderSpec &spec);
[[nodiscard]] inline Op build(const FockBasis &basis, Ladder which) {
    return build(LadderSpec{basis, which});
}

enum class ExtendedInverse { InvAnnihilate, InvCreate };

/// a^-1 / a^+-1 on the two-sided lattice. Throws ContractError on a
/// one-sided basis.
[[nodiscard]] Op build_extended_inverse(const FockBasis &basis,
                                        ExtendedInverse which);

/// A square root and reciprocal square root of k whose double product is
/// exactly 1.
///
/// Both members are faithful roundings (within one ulp) of sqrt(k) and
/// 1/sqrt(k). The correctly rounded sqrt(k) is kept whenever some reciprocal
/// candidate reaches 1 exactly; otherwise the root moves by one ulp. With this
/// pairing every product that cancels a weight against its inverse (a a^-1,
/// N^{-1/2} N^{1/2}, a^+-1 |N^{1/2}|, ...) lands on exactly 1.0. k = 0 gives
/// {0, 0}.
struct RootPair {
    double root;
    double inverse;
};
[[nodiscard]] RootPair root_pair(unsigned k);

} // namespace invphase
