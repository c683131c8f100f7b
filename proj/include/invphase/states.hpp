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
 * @file states.hpp
 * Number, coherent and squeezed states on a one-sided basis.
 *
 * Conventions, with xi = r e^{i theta}:
 *   D(alpha) = exp(alpha a^+ - alpha* a)
 *   S(xi)    = exp((xi* a^2 - xi a^+2) / 2)
 *   squeezed vacuum    S(xi)|0>, annihilated by cosh r a + e^{i theta} sinh r a^+
 *   squeezed coherent  S(xi) D(alpha)|0>   (squeeze applied after displacement)
 */

#include <variant>

#include "invphase/fock.hpp"

namespace invphase {

struct NumberState {
    int n = 0;
};
struct CoherentState {
    Complex alpha;
};
struct SqueezedVacuumState {
    double r = 0.0;
    double theta = 0.0;
};
struct SqueezedCoherentState {
    Complex alpha;
    double r = 0.0;
    double theta = 0.0;
};

using StateKind = std::variant<NumberState, CoherentState, SqueezedVacuumState,
                               SqueezedCoherentState>;

struct StateSpec {
    StateKind kind;
    FockBasis basis;
};

/// Thrown when the basis keeps less than 0.999 of the state's norm.
class TruncationError : public DomainError {
  public:
    TruncationError(double kept_norm, int required_dim);

    [[nodiscard]] double kept_norm() const noexcept { return kept_norm_; }
    [[nodiscard]] int required_dim() const noexcept { return required_dim_; }

  private:
    double kept_norm_;
    int required_dim_;
};

/// Minimum kept norm (before renormalization) accepted by prepare().
inline constexpr double kMinKeptNorm = 0.999;

/// Unit-norm ket for the spec. Throws ContractError on a two-sided basis,
/// DomainError for invalid parameters (r < 0, n off the lattice) and
/// TruncationError when the basis is too small.
[[nodiscard]] Ket prepare(const StateSpec &spec);

/// Smallest one-sided dimension keeping at least kMinKeptNorm of the norm.
[[nodiscard]] int minimum_dimension(const StateKind &kind);

[[nodiscard]] Op displacement_operator(const FockBasis &basis, Complex alpha);
[[nodiscard]] Op squeeze_operator(const FockBasis &basis, double r,
                                  double theta);

/// S(xi) D(alpha)|0>, by matrix exponentials on a padded basis of twice the
/// dimension, projected back onto `basis`. Not normalized.
[[nodiscard]] Ket squeezed_by_exponential(const FockBasis &basis,
                                          Complex alpha, double r,
                                          double theta);

/// Norm of (cosh r a + e^{i theta} sinh r a^+)|ket> over rows 0 .. D-3.
[[nodiscard]] double bogoliubov_residual(const Ket &ket, double r,
                                         double theta);

} // namespace invphase
