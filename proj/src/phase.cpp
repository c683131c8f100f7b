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
#include "invphase/phase.hpp"

#include <cmath>
#include <string>

#include "invphase/ladder.hpp"

namespace invphase {

namespace {

void require_one_sided(const FockBasis &basis, const char *what) {
    if (!basis.is_one_sided()) {
        throw ContractError(std::string(what) +
                            " phase operators need a one-sided basis, got " +
                            basis.describe());
    }
}

Op lowering_shift(const FockBasis &basis) {
    OpBuilder b(basis);
    for (int n = basis.min_label(); n < basis.max_label(); ++n) {
        b.set(n, n + 1, 1.0);
    }
    if (basis.is_two_sided() && basis.boundary() == Boundary::Cyclic) {
        b.set(basis.max_label(), basis.min_label(), 1.0);
    }
    return std::move(b).build();
}

} // namespace

std::string_view to_string(PhaseKind kind) {
    switch (kind) {
    case PhaseKind::SgDirect:
        return "sg";
    case PhaseKind::SgFromAnnihilation:
        return "sg-annihilation";
    case PhaseKind::SgFromCreation:
        return "sg-creation";
    case PhaseKind::UnitaryDirect:
        return "unitary";
    case PhaseKind::UnitaryFromInverses:
        return "unitary-inverse";
    case PhaseKind::Measured:
        return "measured";
    }
    return "unknown";
}

std::string_view to_string(KConvention k) {
    return k == KConvention::Paper ? "paper" : "normalized";
}

bool needs_two_sided(PhaseKind kind) noexcept {
    return kind == PhaseKind::UnitaryDirect ||
           kind == PhaseKind::UnitaryFromInverses;
}

ExpPhasePair sg_pair(const FockBasis &basis, SgConstruction construction) {
    require_one_sided(basis, "Susskind-Glogower");
    switch (construction) {
    case SgConstruction::Direct: {
        Op plus = lowering_shift(basis);
        Op minus = adjoint(plus);
        return {std::move(plus), std::move(minus), {PhaseKind::SgDirect}};
    }
    case SgConstruction::FromAnnihilation: {
        const Op a = build(basis, Ladder::Annihilate);
        const Op a_inv = build(basis, Ladder::InvAnnihilate);
        return {a * build(basis, Ladder::InvSqrtNumber),
                build(basis, Ladder::SqrtNumber) * a_inv,
                {PhaseKind::SgFromAnnihilation}};
    }
    case SgConstruction::FromCreation: {
        const Op ad = build(basis, Ladder::Create);
        const Op ad_inv = build(basis, Ladder::InvCreate);
        return {ad_inv * build(basis, Ladder::SqrtNumber),
                build(basis, Ladder::InvSqrtNumber) * ad,
                {PhaseKind::SgFromCreation}};
    }
    }
    throw ContractError("unknown Susskind-Glogower construction");
}

ExpPhasePair unitary_pair(const FockBasis &basis,
                          UnitaryConstruction construction) {
    if (!basis.is_two_sided()) {
        throw ContractError("unitary phase operators need a two-sided basis, "
                            "got " + basis.describe());
    }
    if (construction == UnitaryConstruction::Direct) {
        Op plus = lowering_shift(basis);
        Op minus = adjoint(plus);
        return {std::move(plus), std::move(minus), {PhaseKind::UnitaryDirect}};
    }
    const Op amplitude = build(basis, Ladder::AbsSqrtNumber);
    return {build_extended_inverse(basis, ExtendedInverse::InvCreate) *
                amplitude,
            amplitude *
                build_extended_inverse(basis, ExtendedInverse::InvAnnihilate),
            {PhaseKind::UnitaryFromInverses}};
}

double k_of_n(int n, KConvention k) {
    if (n < 0) {
        throw DomainError("k is defined for n >= 0, got " +
                          std::to_string(n));
    }
    const double x = n;
    if (k == KConvention::Paper) {
        return 0.5 * std::sqrt(x * (x + 1.0)) / (x + 0.5);
    }
    // <n|cos^2 + sin^2|n> = 2 k^2 (<n|a^+-1 a^-1|n> + <n|a^-1 a^+-1|n>)
    //                     = 2 k^2 (1/(n+1) + [n > 0] / n)
    const double diagonal_sum = 1.0 / (x + 1.0) + (n > 0 ? 1.0 / x : 0.0);
    return std::sqrt(1.0 / (2.0 * diagonal_sum));
}

ExpPhasePair measured_pair(const FockBasis &basis, KConvention k,
                           int n_context) {
    require_one_sided(basis, "measured");
    if (n_context < 0 || n_context >= basis.max_label()) {
        throw DomainError("measured phase needs 0 <= n_context < " +
                          std::to_string(basis.max_label()) + " on " +
                          basis.describe() + ", got " +
                          std::to_string(n_context));
    }
    const double two_k = 2.0 * k_of_n(n_context, k);
    return {scale(two_k, build(basis, Ladder::InvCreate)),
            scale(two_k, build(basis, Ladder::InvAnnihilate)),
            {PhaseKind::Measured, k}};
}

ExpPhasePair make_pair(const PhaseFamily &family, const FockBasis &basis,
                       int n_context) {
    switch (family.kind) {
    case PhaseKind::SgDirect:
        return sg_pair(basis, SgConstruction::Direct);
    case PhaseKind::SgFromAnnihilation:
        return sg_pair(basis, SgConstruction::FromAnnihilation);
    case PhaseKind::SgFromCreation:
        return sg_pair(basis, SgConstruction::FromCreation);
    case PhaseKind::UnitaryDirect:
        return unitary_pair(basis, UnitaryConstruction::Direct);
    case PhaseKind::UnitaryFromInverses:
        return unitary_pair(basis, UnitaryConstruction::FromInverses);
    case PhaseKind::Measured:
        return measured_pair(basis, family.k, n_context);
    }
    throw ContractError("unknown phase family");
}

Op cosine(const ExpPhasePair &pair) {
    return scale(0.5, pair.plus + pair.minus);
}

Op sine(const ExpPhasePair &pair) {
    // (plus - minus) / 2i = -i/2 (plus - minus)
    return scale(Complex(0.0, -0.5), pair.plus - pair.minus);
}

double adjoint_defect(const ExpPhasePair &pair) {
    return residual_norm(pair.minus, adjoint(pair.plus));
}

} // namespace invphase
