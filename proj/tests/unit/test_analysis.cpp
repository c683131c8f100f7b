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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "invphase/analysis.hpp"
#include "invphase/states.hpp"

using namespace invphase;

namespace {

const IdentityReport &find(const std::vector<IdentityReport> &reports,
                           const std::string &name) {
    const auto it = std::find_if(reports.begin(), reports.end(),
                                 [&](const auto &r) { return r.name == name; });
    REQUIRE(it != reports.end());
    return *it;
}

// <alpha|e^{+i phi}|alpha> for real alpha, summed directly:
// e^{-alpha^2} sum_n alpha^{2n+1} / sqrt(n! (n+1)!)
double sg_mean_cos_oracle(double alpha, int cutoff) {
    long double sum = 0.0L;
    for (int n = 0; n < cutoff; ++n) {
        sum += std::exp(static_cast<long double>(
            (2 * n + 1) * std::log(alpha) - alpha * alpha -
            0.5 * (std::lgamma(n + 1.0) + std::lgamma(n + 2.0))));
    }
    return static_cast<double>(sum);
}

// Frozen from an exact rational evaluation of 2 k^2 (1/n + 1/(n+1)) under
// KConvention::Paper: the sum is 2/(2n+1).
constexpr double kMeasuredPaperSums[] = {
    0.0,                 0.6666666666666666,  0.4,
    0.2857142857142857,  0.2222222222222222,  0.18181818181818182,
    0.15384615384615385, 0.13333333333333333, 0.11764705882352941,
    0.10526315789473684, 0.09523809523809523};

} // namespace

TEST_SUITE("verify_all") {
    TEST_CASE("twelve reports in a fixed order") {
        const auto reports = verify_all({});
        REQUIRE(reports.size() == 12);
        CHECK(reports.front().name == "one_sided_right_inverse");
        CHECK(reports.back().name == "unitary_representation_agreement");
        for (const auto &r : reports) {
            CHECK(r.residual_interior <= r.residual_full);
        }
    }

    TEST_CASE("unconditional one-sided identities are exact in the interior") {
        for (int dim : {8, 16, 64}) {
            VerifyParams p;
            p.basis.dim = dim;
            const auto reports = verify_all(p);
            for (const char *name :
                 {"one_sided_right_inverse", "sg_shift_lower_after_raise",
                  "sg_annihilation_form_lower_after_raise",
                  "sg_creation_form_lower_after_raise"}) {
                const auto &r = find(reports, name);
                CAPTURE(dim);
                CAPTURE(name);
                CHECK(r.passed);
                CHECK(r.gating);
                CHECK(r.residual_interior == 0.0);
                CHECK(r.excluded_rows == std::vector<int>{dim - 2, dim - 1});
            }
            // The representation-agreement record always carries the n = 0 gap.
            for (const auto &r : reports) {
                if (r.name != "unitary_representation_agreement") {
                    CHECK(r.passed);
                }
            }
        }
    }

    TEST_CASE("right inverse: top diagonal entry is a truncation artifact") {
        VerifyParams p;
        p.basis.dim = 16;
        const auto reports = verify_all(p);
        const auto &r = find(reports, "one_sided_right_inverse");
        CHECK(r.residual_full == 1.0);
        CHECK(r.residual_interior == 0.0);
        CHECK(r.discrepant_columns.empty());
    }

    TEST_CASE("inverse-form unitary products fail only at the n = 0 crossing") {
        VerifyParams p;
        p.basis.half_width = 6;
        p.unitary = UnitaryConstruction::FromInverses;
        const auto reports = verify_all(p);
        const auto &lower_after_raise = find(reports, "unitary_lower_after_raise");
        const auto &raise_after_lower = find(reports, "unitary_raise_after_lower");
        CHECK_FALSE(lower_after_raise.passed);
        CHECK_FALSE(lower_after_raise.gating);
        CHECK(lower_after_raise.discrepant_columns == std::vector<int>{-1});
        CHECK(lower_after_raise.residual_interior == 1.0);
        CHECK(raise_after_lower.discrepant_columns == std::vector<int>{0});

        const auto &agreement = find(reports, "unitary_representation_agreement");
        CHECK_FALSE(agreement.passed);
        CHECK(agreement.discrepant_columns == std::vector<int>{-1, 0});
    }

    TEST_CASE("direct cyclic unitary products are exact and gating") {
        VerifyParams p;
        p.basis.half_width = 6;
        const auto reports = verify_all(p);
        for (const char *name :
             {"unitary_lower_after_raise", "unitary_raise_after_lower"}) {
            const auto &r = find(reports, name);
            CHECK(r.gating);
            CHECK(r.passed);
            CHECK(r.residual_full == 0.0);
            CHECK(r.excluded_rows.empty());
        }
    }

    TEST_CASE("truncated lattice: edges excluded, still passes") {
        VerifyParams p;
        p.basis.half_width = 5;
        p.basis.boundary = Boundary::Truncated;
        const auto reports = verify_all(p);
        const auto &r = find(reports, "unitary_lower_after_raise");
        CHECK(r.excluded_rows == std::vector<int>{-5, 5});
        CHECK(r.residual_full == 1.0);
        CHECK(r.residual_interior == 0.0);
        CHECK(r.passed);
        CHECK_FALSE(r.gating);
    }
}

TEST_SUITE("trig_sum_table") {
    TEST_CASE("Susskind-Glogower: 1 for n >= 1, quarter each at the vacuum") {
        BasisParams params;
        params.dim = 16;
        for (PhaseKind kind : {PhaseKind::SgDirect, PhaseKind::SgFromAnnihilation,
                               PhaseKind::SgFromCreation}) {
            const auto rows = trig_sum_table({kind}, params, {0, 14});
            REQUIRE(rows.size() == 15);
            CHECK(rows[0].cos_sq == 0.25);
            CHECK(rows[0].sin_sq == 0.25);
            CHECK(rows[0].sum == 0.5);
            CHECK_FALSE(rows[0].claim_holds);
            for (std::size_t i = 1; i < rows.size(); ++i) {
                CHECK(std::abs(rows[i].sum - 1.0) <= 1e-12);
                CHECK(rows[i].claim_holds);
                CHECK(rows[i].cos_sq >= -1e-12);
                CHECK(rows[i].sin_sq >= -1e-12);
                CHECK_FALSE(rows[i].k.has_value());
            }
            CHECK(rows[3].n == 3);
        }
    }

    TEST_CASE("unitary cyclic: exactly 1 on every label") {
        for (int m : {4, 16}) {
            BasisParams params;
            params.half_width = m;
            const auto rows = trig_sum_table({PhaseKind::UnitaryDirect}, params,
                                             {-m, m});
            REQUIRE(rows.size() == static_cast<std::size_t>(2 * m + 1));
            for (const auto &row : rows) {
                CHECK(row.sum == 1.0);
            }
        }
    }

    TEST_CASE("measured, paper k: frozen oracle sums, claim fails") {
        BasisParams params;
        params.dim = 16;
        const auto rows = trig_sum_table({PhaseKind::Measured, KConvention::Paper},
                                         params, {0, 10});
        for (const auto &row : rows) {
            CAPTURE(row.n);
            CHECK(std::abs(row.sum - kMeasuredPaperSums[row.n]) <= 1e-12);
            if (row.n > 0) {
                CHECK(std::abs(row.sum - 2.0 / (2 * row.n + 1)) <= 1e-12);
            }
            CHECK_FALSE(row.claim_holds);
            REQUIRE(row.k.has_value());
        }
    }

    TEST_CASE("measured, normalized k: sum is 1 including the vacuum") {
        BasisParams params;
        params.dim = 16;
        for (const auto &row : trig_sum_table({PhaseKind::Measured,
                                               KConvention::Normalized},
                                              params, {0, 14})) {
            CHECK(std::abs(row.sum - 1.0) <= 1e-12);
            CHECK(row.claim_holds);
        }
    }

    TEST_CASE("interior statistics do not depend on the truncation") {
        BasisParams small;
        small.dim = 16;
        BasisParams large;
        large.dim = 64;
        for (PhaseFamily family :
             {PhaseFamily{PhaseKind::SgDirect}, PhaseFamily{PhaseKind::SgFromCreation},
              PhaseFamily{PhaseKind::Measured, KConvention::Paper},
              PhaseFamily{PhaseKind::Measured, KConvention::Normalized}}) {
            const auto a = trig_sum_table(family, small, {0, 12});
            const auto b = trig_sum_table(family, large, {0, 12});
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(std::abs(a[i].cos_sq - b[i].cos_sq) <= 1e-12);
                CHECK(std::abs(a[i].sin_sq - b[i].sin_sq) <= 1e-12);
            }
        }
    }

    TEST_CASE("ranges touching the boundary are rejected") {
        BasisParams params;
        params.dim = 16;
        CHECK_NOTHROW((void)trig_sum_table({PhaseKind::SgDirect}, params, {0, 14}));
        CHECK_THROWS_AS((void)trig_sum_table({PhaseKind::SgDirect}, params, {0, 15}),
                        DomainError);
        CHECK_THROWS_AS((void)trig_sum_table({PhaseKind::SgDirect}, params, {-1, 3}),
                        DomainError);
        CHECK_THROWS_AS((void)trig_sum_table({PhaseKind::SgDirect}, params, {5, 4}),
                        DomainError);
        params.boundary = Boundary::Truncated;
        params.half_width = 4;
        CHECK(trig_range_limit({PhaseKind::UnitaryDirect}, params) == LabelRange{-3, 3});
        CHECK_THROWS_AS(
            (void)trig_sum_table({PhaseKind::UnitaryDirect}, params, {-4, 0}),
            DomainError);
    }
}

TEST_SUITE("phase_statistics") {
    TEST_CASE("number states carry no phase") {
        const auto basis = FockBasis::one_sided(16);
        const auto stats = phase_statistics({PhaseKind::SgDirect}, number_state(basis, 5));
        CHECK(stats.mean_cos == 0.0);
        CHECK(stats.mean_sin == 0.0);
        CHECK(stats.var_cos == doctest::Approx(0.5));
        CHECK(stats.trig_sum == doctest::Approx(1.0));
        CHECK_FALSE(stats.n_context.has_value());
    }

    TEST_CASE("large coherent amplitude approaches the classical phase") {
        const double oracle = sg_mean_cos_oracle(4.0, 400);
        CHECK(oracle == doctest::Approx(0.991952675815746).epsilon(1e-13));
        const Ket k = prepare({CoherentState{4.0}, FockBasis::one_sided(64)});
        const auto stats = phase_statistics({PhaseKind::SgDirect}, k);
        CHECK(std::abs(stats.mean_cos - oracle) <= 1e-10);
        CHECK(std::abs(stats.mean_cos - 1.0) <= 0.05);
        CHECK(std::abs(stats.mean_sin) <= 1e-12);
    }

    TEST_CASE("squeezed vacuum: single shifts average to zero") {
        const Ket k = prepare({SqueezedVacuumState{0.8, 0.0}, FockBasis::one_sided(64)});
        const auto stats = phase_statistics({PhaseKind::SgDirect}, k);
        CHECK(std::abs(stats.mean_cos) <= 1e-10);
        CHECK(std::abs(stats.mean_sin) <= 1e-10);
        // Phase-dependent noise: cos and sin fluctuations differ.
        CHECK(std::abs(stats.var_cos - stats.var_sin) > 1e-3);
    }

    TEST_CASE("measured family rounds <N> for its context") {
        const Ket k = prepare({CoherentState{2.0}, FockBasis::one_sided(32)});
        const auto stats =
            phase_statistics({PhaseKind::Measured, KConvention::Paper}, k);
        REQUIRE(stats.n_context.has_value());
        CHECK(*stats.n_context == 4);
    }

    TEST_CASE("unitary family on a two-sided number state") {
        const auto basis = FockBasis::two_sided(5);
        const auto stats =
            phase_statistics({PhaseKind::UnitaryDirect}, number_state(basis, -3));
        CHECK(stats.mean_cos == 0.0);
        CHECK(stats.trig_sum == 1.0);
    }

    TEST_CASE("family and basis kind must match") {
        CHECK_THROWS_AS((void)phase_statistics({PhaseKind::UnitaryDirect},
                                               number_state(FockBasis::one_sided(8), 1)),
                        ContractError);
        CHECK_THROWS_AS((void)phase_statistics({PhaseKind::SgDirect},
                                               number_state(FockBasis::two_sided(3), 1)),
                        ContractError);
    }
}

TEST_SUITE("phase_distribution") {
    TEST_CASE("number state is flat") {
        const auto samples =
            phase_distribution(number_state(FockBasis::one_sided(16), 7), 64);
        REQUIRE(samples.size() == 64);
        for (const auto &s : samples) {
            CHECK(s.density == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
        }
    }

    TEST_CASE("coherent state peaks at its phase and matches direct evaluation") {
        const auto basis = FockBasis::one_sided(48);
        const Ket k = prepare({CoherentState{3.0}, basis});
        const auto samples = phase_distribution(k, 256);
        const auto peak = std::max_element(
            samples.begin(), samples.end(),
            [](const auto &a, const auto &b) { return a.density < b.density; });
        CHECK(peak->phi == 0.0);

        for (std::size_t j = 0; j < samples.size(); j += 17) {
            Complex overlap{};
            for (int n = 0; n < 48; ++n) {
                overlap += std::exp(Complex(0.0, -n * samples[j].phi)) * k.amp(n);
            }
            CHECK(samples[j].density ==
                  doctest::Approx(std::norm(overlap) / (2.0 * std::numbers::pi))
                      .epsilon(1e-12));
        }
    }

    TEST_CASE("integrates to one") {
        const auto basis = FockBasis::one_sided(64);
        for (const StateKind &kind :
             {StateKind{CoherentState{Complex(1.0, 2.0)}},
              StateKind{SqueezedVacuumState{0.8, 0.5}}, StateKind{NumberState{4}}}) {
            const Ket k = prepare({kind, basis});
            const auto samples = phase_distribution(k, 256);
            // Periodic trapezoid: the closing endpoint equals the first sample.
            double integral = 0.0;
            const double h = 2.0 * std::numbers::pi / 256;
            for (std::size_t j = 0; j < samples.size(); ++j) {
                const double next = samples[(j + 1) % samples.size()].density;
                integral += 0.5 * h * (samples[j].density + next);
            }
            CHECK(std::abs(integral - 1.0) <= 1e-6);
        }
    }

    TEST_CASE("needs at least four bins") {
        const Ket k = number_state(FockBasis::one_sided(8), 1);
        CHECK_THROWS_AS((void)phase_distribution(k, 3), DomainError);
        CHECK_THROWS_AS((void)phase_distribution(number_state(FockBasis::two_sided(3), 0), 8),
                        ContractError);
    }
}
