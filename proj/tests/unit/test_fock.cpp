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

#include <array>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "invphase/fock.hpp"
#include "invphase/ladder.hpp"

#ifdef INVPHASE_HAVE_EIGEN
#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#endif

using namespace invphase;
using invphase::testing::random_ket;
using invphase::testing::random_op;

TEST_SUITE("FockBasis") {
    TEST_CASE("dimension and label ranges") {
        const auto one = FockBasis::one_sided(8);
        CHECK(one.dim() == 8);
        CHECK(one.min_label() == 0);
        CHECK(one.max_label() == 7);
        CHECK(one.boundary() == Boundary::Truncated);
        CHECK_THROWS_AS((void)one.half_width(), ContractError);

        const auto two = FockBasis::two_sided(3);
        CHECK(two.dim() == 7);
        CHECK(two.min_label() == -3);
        CHECK(two.max_label() == 3);
        CHECK(two.boundary() == Boundary::Cyclic);
        CHECK(two.half_width() == 3);
    }

    TEST_CASE("too-small lattices are rejected") {
        CHECK_THROWS_AS((void)FockBasis::one_sided(3), DomainError);
        CHECK_THROWS_AS((void)FockBasis::two_sided(1), DomainError);
    }

    TEST_CASE("index_of is a bijection onto rows") {
        for (const auto &basis :
             {FockBasis::one_sided(4), FockBasis::one_sided(17),
              FockBasis::two_sided(2), FockBasis::two_sided(9)}) {
            std::vector<bool> hit(basis.dim(), false);
            for (int n : basis.labels()) {
                const auto row = basis.index_of(n);
                REQUIRE(row < basis.dim());
                CHECK_FALSE(hit[row]);
                hit[row] = true;
                CHECK(basis.label_of(row) == n);
            }
            CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
        }
    }

    TEST_CASE("bases compare by kind, extent and boundary") {
        CHECK(FockBasis::one_sided(8) == FockBasis::one_sided(8));
        CHECK_FALSE(FockBasis::one_sided(8) == FockBasis::one_sided(9));
        CHECK_FALSE(FockBasis::two_sided(4, Boundary::Cyclic) ==
                    FockBasis::two_sided(4, Boundary::Truncated));
    }
}

TEST_SUITE("number_state") {
    TEST_CASE("vacuum on a one-sided basis") {
        const Ket k = number_state(FockBasis::one_sided(8), 0);
        CHECK(k.amps()[0] == Complex(1.0));
        for (std::size_t i = 1; i < 8; ++i) {
            CHECK(k.amps()[i] == Complex(0.0));
        }
        CHECK(k.norm() == 1.0);
    }

    TEST_CASE("lowest two-sided label sits in row 0") {
        const Ket k = number_state(FockBasis::two_sided(3), -3);
        CHECK(k.amps()[0] == Complex(1.0));
        CHECK(k.amp(-3) == Complex(1.0));
    }

    TEST_CASE("label off the lattice names the valid range") {
        const auto basis = FockBasis::one_sided(8);
        CHECK_THROWS_WITH_AS((void)number_state(basis, 8),
                             doctest::Contains("[0, 7]"), DomainError);
        CHECK_THROWS_AS((void)number_state(basis, -1), DomainError);
    }
}

TEST_SUITE("algebra") {
    TEST_CASE("apply with identity and zero") {
        std::mt19937_64 rng(7);
        const auto basis = FockBasis::one_sided(12);
        const Ket k = random_ket(basis, rng);
        const Ket same = Op::identity(basis) * k;
        const Ket none = Op::zero(basis) * k;
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            CHECK(same.amps()[i] == k.amps()[i]);
            CHECK(none.amps()[i] == Complex(0.0));
        }
    }

    TEST_CASE("annihilation lowers |1> to |0>") {
        const auto basis = FockBasis::one_sided(8);
        const Ket out = build(basis, Ladder::Annihilate) * number_state(basis, 1);
        CHECK(out.amp(0) == Complex(1.0));
        CHECK(out.norm() == 1.0);
    }

    TEST_CASE("expectation of N in |5> is 5") {
        const auto basis = FockBasis::one_sided(8);
        CHECK(expectation(build(basis, Ladder::Number), number_state(basis, 5)) ==
              Complex(5.0));
    }

    TEST_CASE("expectation does not normalize") {
        const auto basis = FockBasis::one_sided(4);
        const Ket k(basis, {2.0, 0.0, 0.0, 0.0});
        CHECK(expectation(Op::identity(basis), k) == Complex(4.0));
    }

    TEST_CASE("residual_norm of identical operators is zero") {
        const auto basis = FockBasis::one_sided(16);
        CHECK(residual_norm(Op::identity(basis), Op::identity(basis)) == 0.0);
    }

    TEST_CASE("residual_norm deletes rows and columns") {
        const auto basis = FockBasis::one_sided(4);
        const Op x = std::move(OpBuilder(basis).set(3, 0, 5.0).set(1, 2, 0.5))
                         .build();
        const Op z = Op::zero(basis);
        CHECK(residual_norm(x, z) == 5.0);
        // Dropping label 3 (its row) or label 0 (its column) hides the 5.0.
        const std::array<int, 1> row3{3};
        CHECK(residual_norm(x, z, row3) == 0.5);
        const std::array<int, 1> col0{0};
        CHECK(residual_norm(x, z, col0) == 0.5);
        const std::array<int, 2> both{1, 3};
        CHECK(residual_norm(x, z, both) == 0.0);
    }

    TEST_CASE("right inverse of a: exact away from the truncated top state") {
        const auto basis = FockBasis::one_sided(16);
        const Op product =
            build(basis, Ladder::Annihilate) * build(basis, Ladder::InvAnnihilate);
        // a^-1 |15> would be |16>, which is not in the basis, so the last
        // diagonal entry is 0 instead of 1.
        CHECK(residual_norm(product, Op::identity(basis)) == 1.0);
        const std::array<int, 1> top{15};
        CHECK(residual_norm(product, Op::identity(basis), top) == 0.0);
    }

    TEST_CASE("basis mismatch is a contract error") {
        const auto one = FockBasis::one_sided(5);
        const auto two = FockBasis::two_sided(2);
        CHECK_THROWS_AS((void)compose(Op::identity(one), Op::identity(two)),
                        ContractError);
        CHECK_THROWS_AS((void)apply(Op::identity(one), number_state(two, 0)),
                        ContractError);
        CHECK_THROWS_AS(
            (void)residual_norm(Op::identity(one), Op::identity(two)),
            ContractError);
        CHECK_THROWS_AS((void)(Op::identity(one) + Op::identity(two)),
                        ContractError);
    }

    TEST_CASE("excluded labels must lie on the lattice") {
        const auto basis = FockBasis::one_sided(5);
        const std::array<int, 1> bad{7};
        CHECK_THROWS_AS((void)residual_norm(Op::identity(basis),
                                            Op::identity(basis), bad),
                        ContractError);
    }

    TEST_CASE("ket validation") {
        const auto basis = FockBasis::one_sided(4);
        CHECK_THROWS_AS(Ket(basis, {1.0, 0.0}), ContractError);
        CHECK_THROWS_AS(Ket(basis, {1.0, 0.0, NAN, 0.0}), DomainError);
        CHECK_THROWS_AS((void)Ket::zero(basis).normalized(), DomainError);
    }
}

TEST_SUITE("algebra properties") {
    TEST_CASE("adjoint is an involution") {
        std::mt19937_64 rng(11);
        for (int dim : {4, 9, 33}) {
            const Op x = random_op(FockBasis::one_sided(dim), rng);
            const Op back = adjoint(adjoint(x));
            CHECK(residual_norm(back, x) == 0.0);
        }
    }

    TEST_CASE("compose is associative on random triples") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 12; ++trial) {
            const int dim = 4 + static_cast<int>(rng() % 61); // 4 .. 64
            const auto basis = FockBasis::one_sided(dim);
            const Op a = random_op(basis, rng);
            const Op b = random_op(basis, rng);
            const Op c = random_op(basis, rng);
            CAPTURE(dim);
            CHECK(residual_norm((a * b) * c, a * (b * c)) <= 1e-12);
        }
    }

    TEST_CASE("hermitian expectations are real") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 10; ++trial) {
            const auto basis = trial % 2 ? FockBasis::one_sided(20)
                                         : FockBasis::two_sided(6);
            const Op h = testing::hermitian_part(random_op(basis, rng));
            const Ket k = random_ket(basis, rng);
            CHECK(std::abs(expectation(h, k).imag()) <= 1e-12);
        }
    }

    TEST_CASE("residual of an operator with itself is zero for any exclusion") {
        std::mt19937_64 rng(14);
        const auto basis = FockBasis::two_sided(5);
        const Op x = random_op(basis, rng);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> excluded;
            for (int n : basis.labels()) {
                if (rng() % 3 == 0) {
                    excluded.push_back(n);
                }
            }
            CHECK(residual_norm(x, x, excluded) == 0.0);
        }
    }
}

TEST_SUITE("exponential") {
    TEST_CASE("exp(0) is the identity") {
        const auto basis = FockBasis::one_sided(6);
        CHECK(residual_norm(exponential(Op::zero(basis)), Op::identity(basis)) ==
              0.0);
    }

    TEST_CASE("diagonal generator") {
        const auto basis = FockBasis::one_sided(6);
        OpBuilder b(basis);
        for (int n = 0; n < 6; ++n) {
            b.set(n, n, Complex(0.3 * n, -1.1 * n));
        }
        const Op e = exponential(std::move(b).build());
        for (int n = 0; n < 6; ++n) {
            const Complex expect = std::exp(Complex(0.3 * n, -1.1 * n));
            CHECK(std::abs(e.at(n, n) - expect) <= 1e-13 * std::abs(expect));
        }
    }

    TEST_CASE("anti-hermitian generator gives a unitary") {
        std::mt19937_64 rng(21);
        const auto basis = FockBasis::one_sided(24);
        const Op x = random_op(basis, rng);
        const Op g = scale(3.0, x - adjoint(x));
        const Op u = exponential(g);
        CHECK(residual_norm(u * adjoint(u), Op::identity(basis)) <= 1e-12);
    }

#ifdef INVPHASE_HAVE_EIGEN
    TEST_CASE("agrees with Eigen's matrix exponential") {
        std::mt19937_64 rng(22);
        for (int dim : {5, 16, 40}) {
            const auto basis = FockBasis::one_sided(dim);
            const Op x = scale(4.0, random_op(basis, rng));
            Eigen::MatrixXcd m(dim, dim);
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    m(i, j) = x(i, j);
                }
            }
            const Eigen::MatrixXcd ref = m.exp();
            const Op e = exponential(x);
            double worst = 0.0;
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    worst = std::max(worst, std::abs(e(i, j) - ref(i, j)));
                }
            }
            CAPTURE(dim);
            CHECK(worst <= 1e-11 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
        }
    }
#endif
}
