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
#include "invphase/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "invphase/ladder.hpp"

namespace invphase {

namespace {

// Largest dimension the squeezed-coherent search will try (padded to 2x).
constexpr int kMaxExponentialDim = 256;
constexpr int kMaxSeriesDim = 1 << 20;

void require_valid_squeeze(double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw DomainError("squeeze parameter must be finite and >= 0, got " +
                          std::to_string(r));
    }
}

double norm_of(std::span<const Complex> amps) {
    double sum = 0.0;
    for (const auto &a : amps) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

// e^{-|alpha|^2/2} alpha^n / sqrt(n!)
std::vector<Complex> coherent_amplitudes(Complex alpha, int dim) {
    std::vector<Complex> c(static_cast<std::size_t>(dim));
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < dim; ++n) {
        c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    }
    return c;
}

// c_0 = 1/sqrt(cosh r), c_{n+1} = -e^{i theta} tanh r sqrt(n/(n+1)) c_{n-1}
std::vector<Complex> squeezed_vacuum_amplitudes(double r, double theta,
                                                int dim) {
    std::vector<Complex> c(static_cast<std::size_t>(dim));
    c[0] = 1.0 / std::sqrt(std::cosh(r));
    const Complex ratio = -std::polar(std::tanh(r), theta);
    for (int n = 1; n + 1 < dim; n += 2) {
        c[n + 1] = ratio * std::sqrt(static_cast<double>(n) / (n + 1)) *
                   c[n - 1];
    }
    return c;
}

template <class Next> int series_dimension(Next next_weight) {
    double kept = 0.0;
    for (int dim = 1; dim <= kMaxSeriesDim; ++dim) {
        kept += next_weight(dim - 1);
        if (std::sqrt(kept) >= kMinKeptNorm) {
            return std::max(dim, 4);
        }
    }
    return kMaxSeriesDim;
}

int coherent_dimension(Complex alpha) {
    // Poisson weights e^{-x} x^n / n!, built iteratively.
    const double x = std::norm(alpha);
    double weight = std::exp(-x);
    return series_dimension([&](int n) {
        if (n > 0) {
            weight *= x / n;
        }
        return weight;
    });
}

int squeezed_vacuum_dimension(double r) {
    const double t2 = std::tanh(r) * std::tanh(r);
    double weight = 1.0 / std::cosh(r);
    return series_dimension([&](int n) {
        if (n % 2 == 1) {
            return 0.0;
        }
        if (n > 0) {
            weight *= t2 * (n - 1) / n;
        }
        return weight;
    });
}

Ket checked(const FockBasis &basis, std::vector<Complex> amps,
            const StateKind &kind) {
    const double kept = norm_of(amps);
    if (!(kept >= kMinKeptNorm)) {
        throw TruncationError(kept, minimum_dimension(kind));
    }
    return Ket(basis, std::move(amps)).normalized();
}

} // namespace

TruncationError::TruncationError(double kept_norm, int required_dim)
    : DomainError("basis keeps only " + std::to_string(kept_norm) +
                  " of the state norm (need >= 0.999); use dim >= " +
                  std::to_string(required_dim)),
      kept_norm_(kept_norm), required_dim_(required_dim) {}

int minimum_dimension(const StateKind &kind) {
    return std::visit(
        [](const auto &s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NumberState>) {
                return std::max(s.n + 1, 4);
            } else if constexpr (std::is_same_v<T, CoherentState>) {
                return coherent_dimension(s.alpha);
            } else if constexpr (std::is_same_v<T, SqueezedVacuumState>) {
                require_valid_squeeze(s.r);
                return squeezed_vacuum_dimension(s.r);
            } else {
                require_valid_squeeze(s.r);
                int dim = std::max(coherent_dimension(s.alpha),
                                   squeezed_vacuum_dimension(s.r));
                while (dim < kMaxExponentialDim) {
                    const auto basis = FockBasis::one_sided(dim);
                    const Ket k =
                        squeezed_by_exponential(basis, s.alpha, s.r, s.theta);
                    if (k.norm() >= kMinKeptNorm) {
                        return dim;
                    }
                    dim = std::min(2 * dim, kMaxExponentialDim);
                }
                return dim;
            }
        },
        kind);
}

Ket prepare(const StateSpec &spec) {
    const FockBasis &basis = spec.basis;
    if (!basis.is_one_sided()) {
        throw ContractError("states are prepared on a one-sided basis, got " +
                            basis.describe());
    }
    const int dim = static_cast<int>(basis.dim());
    return std::visit(
        [&](const auto &s) -> Ket {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NumberState>) {
                return number_state(basis, s.n);
            } else if constexpr (std::is_same_v<T, CoherentState>) {
                return checked(basis, coherent_amplitudes(s.alpha, dim),
                               spec.kind);
            } else if constexpr (std::is_same_v<T, SqueezedVacuumState>) {
                require_valid_squeeze(s.r);
                return checked(basis,
                               squeezed_vacuum_amplitudes(s.r, s.theta, dim),
                               spec.kind);
            } else {
                require_valid_squeeze(s.r);
                const Ket raw =
                    squeezed_by_exponential(basis, s.alpha, s.r, s.theta);
                return checked(
                    basis, {raw.amps().begin(), raw.amps().end()}, spec.kind);
            }
        },
        spec.kind);
}

Op displacement_operator(const FockBasis &basis, Complex alpha) {
    const Op a = build(basis, Ladder::Annihilate);
    const Op ad = build(basis, Ladder::Create);
    return exponential(alpha * ad - std::conj(alpha) * a);
}

Op squeeze_operator(const FockBasis &basis, double r, double theta) {
    const Complex xi = std::polar(r, theta);
    const Op a = build(basis, Ladder::Annihilate);
    const Op ad = build(basis, Ladder::Create);
    return exponential(0.5 * (std::conj(xi) * (a * a) - xi * (ad * ad)));
}

Ket squeezed_by_exponential(const FockBasis &basis, Complex alpha, double r,
                            double theta) {
    if (!basis.is_one_sided()) {
        throw ContractError("squeezed states need a one-sided basis");
    }
    const auto padded =
        FockBasis::one_sided(2 * static_cast<int>(basis.dim()));
    Ket psi = number_state(padded, 0);
    if (alpha != Complex{}) {
        psi = displacement_operator(padded, alpha) * psi;
    }
    if (r != 0.0) {
        psi = squeeze_operator(padded, r, theta) * psi;
    }
    return Ket(basis, {psi.amps().begin(), psi.amps().begin() +
                                               static_cast<std::ptrdiff_t>(
                                                   basis.dim())});
}

double bogoliubov_residual(const Ket &ket, double r, double theta) {
    const FockBasis &basis = ket.basis();
    if (!basis.is_one_sided()) {
        throw ContractError("bogoliubov_residual needs a one-sided basis");
    }
    const Op combination =
        std::cosh(r) * build(basis, Ladder::Annihilate) +
        std::polar(std::sinh(r), theta) * build(basis, Ladder::Create);
    const Ket image = combination * ket;
    // Rows D-2 and D-1 see truncated neighbours.
    return norm_of(image.amps().first(basis.dim() - 2));
}

} // namespace invphase
