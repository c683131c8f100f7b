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

#include <random>

#include "invphase/fock.hpp"

namespace invphase::testing {

/// Dense random operator with entries uniform in the unit square, scaled by
/// 1/sqrt(dim) so products stay O(1).
inline Op random_op(const FockBasis &basis, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double s = 1.0 / std::sqrt(static_cast<double>(basis.dim()));
    std::vector<Complex> e(basis.dim() * basis.dim());
    for (auto &v : e) {
        v = Complex(u(rng), u(rng)) * s;
    }
    return Op(basis, std::move(e));
}

inline Ket random_ket(const FockBasis &basis, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> amps(basis.dim());
    for (auto &v : amps) {
        v = Complex(u(rng), u(rng));
    }
    return Ket(basis, std::move(amps));
}

inline Op hermitian_part(const Op &op) { return 0.5 * (op + adjoint(op)); }

} // namespace invphase::testing
