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
#include "invphase/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "invphase/kernels.hpp"
#include "invphase/ladder.hpp"

namespace invphase {

namespace {

struct Comparison {
    Op lhs;
    Op rhs;
};

IdentityReport evaluate(std::string name, std::string statement,
                        const std::vector<Comparison> &comparisons,
                        const FockBasis &basis, double tol, bool gating) {
    IdentityReport r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.excluded_rows = interior_exclusions(basis);
    r.gating = gating;

    std::set<int> columns;
    for (const auto &c : comparisons) {
        r.residual_full = std::max(r.residual_full, residual_norm(c.lhs, c.rhs));
        r.residual_interior = std::max(
            r.residual_interior, residual_norm(c.lhs, c.rhs, r.excluded_rows));
        for (int col : discrepant_columns(c.lhs, c.rhs, tol, r.excluded_rows)) {
            columns.insert(col);
        }
    }
    r.discrepant_columns.assign(columns.begin(), columns.end());
    r.passed = r.residual_interior <= tol;
    return r;
}

Op vacuum_gap(const FockBasis &basis) {
    return Op::identity(basis) - build(basis, Ladder::VacuumProjector);
}

double real_expectation(const Op &op, const Ket &ket, double norm_sq) {
    return expectation(op, ket).real() / norm_sq;
}

} // namespace

std::vector<int> interior_exclusions(const FockBasis &basis) {
    if (basis.is_one_sided()) {
        return {basis.max_label() - 1, basis.max_label()};
    }
    if (basis.boundary() == Boundary::Truncated) {
        return {basis.min_label(), basis.max_label()};
    }
    return {};
}

std::vector<int> discrepant_columns(const Op &a, const Op &b, double tol,
                                    std::span<const int> excluded_labels) {
    const FockBasis &basis = a.basis();
    if (!(basis == b.basis())) {
        throw ContractError("discrepant_columns: basis mismatch");
    }
    std::vector<bool> skip(basis.dim(), false);
    for (int label : excluded_labels) {
        skip[basis.index_of(label)] = true;
    }
    std::vector<int> out;
    for (std::size_t j = 0; j < basis.dim(); ++j) {
        if (skip[j]) {
            continue;
        }
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            if (!skip[i] && std::abs(a(i, j) - b(i, j)) > tol) {
                out.push_back(basis.label_of(j));
                break;
            }
        }
    }
    return out;
}

std::vector<IdentityReport> verify_all(const VerifyParams &params) {
    const FockBasis one = params.basis.one_sided();
    const FockBasis two = params.basis.two_sided();
    const double tol = params.tol;

    const Op id = Op::identity(one);
    const Op gap = vacuum_gap(one);
    const Op a = build(one, Ladder::Annihilate);
    const Op ad = build(one, Ladder::Create);
    const Op a_inv = build(one, Ladder::InvAnnihilate);
    const Op ad_inv = build(one, Ladder::InvCreate);
    const Op root = build(one, Ladder::SqrtNumber);
    const Op inv_root = build(one, Ladder::InvSqrtNumber);

    std::vector<IdentityReport> out;
    out.reserve(12);

    out.push_back(evaluate("one_sided_right_inverse",
                           "a a^-1 = a^+-1 a^+ = I",
                           {{a * a_inv, id}, {ad_inv * ad, id}}, one, tol,
                           true));
    out.push_back(evaluate("one_sided_left_inverse",
                           "a^-1 a = a^+ a^+-1 = I - |0><0|",
                           {{a_inv * a, gap}, {ad * ad_inv, gap}}, one, tol,
                           false));

    const ExpPhasePair sg = sg_pair(one, SgConstruction::Direct);
    out.push_back(evaluate("sg_shift_lower_after_raise", "e^{+} e^{-} = I",
                           {{sg.plus * sg.minus, id}}, one, tol, true));
    out.push_back(evaluate("sg_shift_raise_after_lower",
                           "e^{-} e^{+} = I - |0><0|",
                           {{sg.minus * sg.plus, gap}}, one, tol, true));

    out.push_back(evaluate("sg_annihilation_form_lower_after_raise",
                           "a N^{-1/2} N^{1/2} a^-1 = I",
                           {{a * inv_root * root * a_inv, id}}, one, tol,
                           true));
    out.push_back(evaluate("sg_annihilation_form_raise_after_lower",
                           "N^{1/2} a^-1 a N^{-1/2} = I - |0><0|",
                           {{root * a_inv * a * inv_root, gap}}, one, tol,
                           true));
    out.push_back(evaluate("sg_creation_form_lower_after_raise",
                           "a^+-1 N^{1/2} N^{-1/2} a^+ = I",
                           {{ad_inv * root * inv_root * ad, id}}, one, tol,
                           true));
    out.push_back(evaluate("sg_creation_form_raise_after_lower",
                           "N^{-1/2} a^+ a^+-1 N^{1/2} = I - |0><0|",
                           {{inv_root * ad * ad_inv * root, gap}}, one, tol,
                           true));

    {
        const ExpPhasePair ann =
            sg_pair(one, SgConstruction::FromAnnihilation);
        const ExpPhasePair cre = sg_pair(one, SgConstruction::FromCreation);
        out.push_back(evaluate(
            "sg_representation_agreement",
            "shift sums = a N^{-1/2}, N^{1/2} a^-1 = a^+-1 N^{1/2}, N^{-1/2} a^+",
            {{ann.plus, sg.plus},
             {ann.minus, sg.minus},
             {cre.plus, sg.plus},
             {cre.minus, sg.minus}},
            one, tol, false));
    }

    const Op id2 = Op::identity(two);
    const ExpPhasePair direct = unitary_pair(two, UnitaryConstruction::Direct);
    const ExpPhasePair inverse =
        unitary_pair(two, UnitaryConstruction::FromInverses);
    const ExpPhasePair &chosen =
        params.unitary == UnitaryConstruction::Direct ? direct : inverse;
    // Only the exact shift on a cyclic lattice is expected to be unitary
    // everywhere; the inverse form loses the n = 0 crossing.
    const bool unitary_gating =
        params.unitary == UnitaryConstruction::Direct &&
        two.boundary() == Boundary::Cyclic;
    const char *form = params.unitary == UnitaryConstruction::Direct
                           ? " (lattice shift)"
                           : " (a^+-1 |N^{1/2}|, |N^{1/2}| a^-1)";
    out.push_back(evaluate("unitary_lower_after_raise",
                           std::string("e_U^{+} e_U^{-} = I") + form,
                           {{chosen.plus * chosen.minus, id2}}, two, tol,
                           unitary_gating));
    out.push_back(evaluate("unitary_raise_after_lower",
                           std::string("e_U^{-} e_U^{+} = I") + form,
                           {{chosen.minus * chosen.plus, id2}}, two, tol,
                           unitary_gating));
    out.push_back(evaluate(
        "unitary_representation_agreement",
        "a^+-1 |N^{1/2}|, |N^{1/2}| a^-1 = lattice shifts",
        {{inverse.plus, direct.plus}, {inverse.minus, direct.minus}}, two, tol,
        false));
    return out;
}

LabelRange trig_range_limit(const PhaseFamily &family,
                            const BasisParams &params) {
    if (needs_two_sided(family.kind)) {
        const FockBasis two = params.two_sided();
        if (two.boundary() == Boundary::Truncated) {
            return {two.min_label() + 1, two.max_label() - 1};
        }
        return {two.min_label(), two.max_label()};
    }
    // Both raising and lowering must stay on the lattice.
    return {0, params.one_sided().max_label() - 1};
}

std::vector<TrigStats> trig_sum_table(const PhaseFamily &family,
                                      const BasisParams &params,
                                      LabelRange range, double tol) {
    const LabelRange limit = trig_range_limit(family, params);
    if (range.first > range.last || range.first < limit.first ||
        range.last > limit.last) {
        throw DomainError("n range " + std::to_string(range.first) + ".." +
                          std::to_string(range.last) + " must lie within " +
                          std::to_string(limit.first) + ".." +
                          std::to_string(limit.last));
    }
    const FockBasis basis = params.for_family(family.kind);
    const bool measured = family.kind == PhaseKind::Measured;

    std::optional<Op> cos_sq;
    std::optional<Op> sin_sq;
    auto rebuild = [&](int n_context) {
        const ExpPhasePair pair = make_pair(family, basis, n_context);
        const Op c = cosine(pair);
        const Op s = sine(pair);
        cos_sq = c * c;
        sin_sq = s * s;
    };
    if (!measured) {
        rebuild(0);
    }

    std::vector<TrigStats> rows;
    for (int n = range.first; n <= range.last; ++n) {
        if (measured) {
            rebuild(n);
        }
        const Ket ket = number_state(basis, n);
        TrigStats row;
        row.n = n;
        row.cos_sq = expectation(*cos_sq, ket).real();
        row.sin_sq = expectation(*sin_sq, ket).real();
        row.sum = row.cos_sq + row.sin_sq;
        row.claim_holds = std::abs(row.sum - 1.0) < tol;
        if (measured) {
            row.k = k_of_n(n, family.k);
        }
        rows.push_back(row);
    }
    return rows;
}

PhaseStatistics phase_statistics(const PhaseFamily &family, const Ket &ket) {
    const FockBasis &basis = ket.basis();
    if (needs_two_sided(family.kind) != basis.is_two_sided()) {
        throw ContractError(std::string("phase family ") +
                            std::string(to_string(family.kind)) +
                            " does not act on " + basis.describe());
    }
    const double norm_sq = ket.norm() * ket.norm();
    if (norm_sq == 0.0) {
        throw DomainError("phase statistics of the zero ket");
    }

    PhaseStatistics stats;
    int n_context = 0;
    if (family.kind == PhaseKind::Measured) {
        const double mean_n =
            real_expectation(build(basis, Ladder::Number), ket, norm_sq);
        n_context = static_cast<int>(std::lround(mean_n));
        stats.n_context = n_context;
    }
    const ExpPhasePair pair = make_pair(family, basis, n_context);
    const Op c = cosine(pair);
    const Op s = sine(pair);
    stats.mean_cos = real_expectation(c, ket, norm_sq);
    stats.mean_sin = real_expectation(s, ket, norm_sq);
    const double cos_sq = real_expectation(c * c, ket, norm_sq);
    const double sin_sq = real_expectation(s * s, ket, norm_sq);
    stats.var_cos = cos_sq - stats.mean_cos * stats.mean_cos;
    stats.var_sin = sin_sq - stats.mean_sin * stats.mean_sin;
    stats.trig_sum = cos_sq + sin_sq;
    return stats;
}

std::vector<PhaseSample> phase_distribution(const Ket &ket, int bins) {
    if (bins < 4) {
        throw DomainError("phase distribution needs bins >= 4, got " +
                          std::to_string(bins));
    }
    if (!ket.basis().is_one_sided()) {
        throw ContractError("phase distribution needs a one-sided ket");
    }
    const auto count = static_cast<std::size_t>(bins);
    std::vector<double> density(count);
    kernels::parallel::phase_density(ket.amps(), ket.basis().min_label(),
                                     density);
    std::vector<PhaseSample> out(count);
    for (std::size_t j = 0; j < count; ++j) {
        out[j] = {kernels::phase_grid_point(j, count), density[j]};
    }
    return out;
}

} // namespace invphase
