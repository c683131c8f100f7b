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
#include "invphase/ladder.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace invphase {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double root_of(int n) { return root_pair(static_cast<unsigned>(std::abs(n))).root; }
double inverse_root_of(int n) {
    return root_pair(static_cast<unsigned>(std::abs(n))).inverse;
}

Op diagonal(const FockBasis &basis, double (*weight)(int)) {
    OpBuilder b(basis);
    for (int n : basis.labels()) {
        b.set(n, n, weight(n));
    }
    return std::move(b).build();
}

Op annihilate(const FockBasis &basis) {
    OpBuilder b(basis);
    for (int n : basis.labels()) {
        int target = n - 1;
        if (!basis.contains(target)) {
            if (basis.boundary() != Boundary::Cyclic) {
                continue;
            }
            target = basis.max_label();
        }
        b.set(target, n, root_of(n));
    }
    return std::move(b).build();
}

Op one_sided_inverse(const FockBasis &basis, Ladder which) {
    OpBuilder b(basis);
    if (which == Ladder::InvAnnihilate) {
        for (int n = 0; n < basis.max_label(); ++n) {
            b.set(n + 1, n, inverse_root_of(n + 1));
        }
    } else {
        for (int n = 1; n <= basis.max_label(); ++n) {
            b.set(n - 1, n, inverse_root_of(n));
        }
    }
    return std::move(b).build();
}

} // namespace

std::string_view to_string(Ladder which) {
    switch (which) {
    case Ladder::Annihilate:
        return "annihilate";
    case Ladder::Create:
        return "create";
    case Ladder::InvAnnihilate:
        return "inv_annihilate";
    case Ladder::InvCreate:
        return "inv_create";
    case Ladder::Number:
        return "number";
    case Ladder::SqrtNumber:
        return "sqrt_number";
    case Ladder::InvSqrtNumber:
        return "inv_sqrt_number";
    case Ladder::AbsSqrtNumber:
        return "abs_sqrt_number";
    case Ladder::VacuumProjector:
        return "vacuum_projector";
    case Ladder::Identity:
        return "identity";
    }
    return "unknown";
}

RootPair root_pair(unsigned k) {
    if (k == 0) {
        return {0.0, 0.0};
    }
    const double kd = static_cast<double>(k);
    const double nearest = std::sqrt(kd);
    const double recip = 1.0 / nearest;

    // The other double bracketing sqrt(k): sign of nearest^2 - k, exact via fma.
    const double root_other = std::fma(nearest, nearest, -kd) > 0.0
                                  ? std::nextafter(nearest, 0.0)
                                  : std::nextafter(nearest, kInf);
    // Same for 1/sqrt(k) using the sign of v^2 k - 1, with v^2 split exactly.
    const auto above_inverse = [kd](double v) {
        const double sq = v * v;
        const double tail = std::fma(v, v, -sq);
        return std::fma(sq, kd, -1.0) + tail * kd > 0.0;
    };
    double inv_below = recip;
    while (above_inverse(inv_below)) {
        inv_below = std::nextafter(inv_below, 0.0);
    }
    while (!above_inverse(std::nextafter(inv_below, kInf))) {
        inv_below = std::nextafter(inv_below, kInf);
    }
    const double inv_above = std::nextafter(inv_below, kInf);

    for (double root : {nearest, root_other}) {
        for (double inverse : {recip == inv_above ? inv_above : inv_below,
                               recip == inv_above ? inv_below : inv_above}) {
            if (root * inverse == 1.0) {
                return {root, inverse};
            }
        }
    }
    // Not reached for any k tested (1 .. 1e6); keep the plain roundings.
    return {nearest, recip};
}

bool is_permitted(const LadderSpec &spec) noexcept {
    switch (spec.which) {
    case Ladder::SqrtNumber:
    case Ladder::InvSqrtNumber:
        return spec.basis.is_one_sided();
    case Ladder::AbsSqrtNumber:
        return spec.basis.is_two_sided();
    default:
        return true;
    }
}

Op build(const LadderSpec &spec) {
    if (!is_permitted(spec)) {
        throw ContractError(
            std::string(to_string(spec.which)) + " is not defined on " +
            spec.basis.describe() +
            ": sqrt_number/inv_sqrt_number need a one-sided basis, "
            "abs_sqrt_number a two-sided basis");
    }
    const FockBasis &basis = spec.basis;
    switch (spec.which) {
    case Ladder::Annihilate:
        return annihilate(basis);
    case Ladder::Create:
        return adjoint(annihilate(basis));
    case Ladder::InvAnnihilate:
        return basis.is_one_sided()
                   ? one_sided_inverse(basis, Ladder::InvAnnihilate)
                   : build_extended_inverse(basis,
                                            ExtendedInverse::InvAnnihilate);
    case Ladder::InvCreate:
        return basis.is_one_sided()
                   ? one_sided_inverse(basis, Ladder::InvCreate)
                   : build_extended_inverse(basis, ExtendedInverse::InvCreate);
    case Ladder::Number:
        return diagonal(basis, [](int n) { return static_cast<double>(n); });
    case Ladder::SqrtNumber:
    case Ladder::AbsSqrtNumber:
        return diagonal(basis, root_of);
    case Ladder::InvSqrtNumber:
        return diagonal(basis, inverse_root_of);
    case Ladder::VacuumProjector:
        return std::move(OpBuilder(basis).set(0, 0, 1.0)).build();
    case Ladder::Identity:
        return Op::identity(basis);
    }
    throw ContractError("unknown ladder operator");
}

Op build_extended_inverse(const FockBasis &basis, ExtendedInverse which) {
    if (!basis.is_two_sided()) {
        throw ContractError("extended inverses need a two-sided basis, got " +
                            basis.describe());
    }
    const bool cyclic = basis.boundary() == Boundary::Cyclic;
    OpBuilder b(basis);
    for (int n : basis.labels()) {
        if (which == ExtendedInverse::InvAnnihilate) {
            // |n> -> |n+1> / sqrt|n+1|; weight taken from the image label.
            int target = n + 1;
            if (!basis.contains(target)) {
                if (!cyclic) {
                    continue;
                }
                target = basis.min_label();
            }
            b.set(target, n, inverse_root_of(target));
        } else {
            // |n> -> |n-1> / sqrt|n|; weight taken from the source label.
            int target = n - 1;
            if (!basis.contains(target)) {
                if (!cyclic) {
                    continue;
                }
                target = basis.max_label();
            }
            b.set(target, n, inverse_root_of(n));
        }
    }
    return std::move(b).build();
}

} // namespace invphase
