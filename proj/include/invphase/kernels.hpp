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
 * @file kernels.hpp
 * Dense inner loops behind the operator algebra.
 *
 * `serial::` holds the plain reference loops, kept for testing and as the
 * benchmark baseline. `parallel::` holds the OpenMP versions that the library
 * uses. Both accumulate every output entry over k in increasing order, so for
 * finite inputs they agree bit for bit.
 *
 * All matrices are square, row-major, n x n.
 */

#include <complex>
#include <cstddef>
#include <span>

namespace invphase::kernels {

using Complex = std::complex<double>;

namespace serial {
/// c = a * b
void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t n);
/// y = a * x
void gemv(std::span<const Complex> a, std::span<const Complex> x,
          std::span<Complex> y, std::size_t n);
/// density[j] = |sum_n amps[n] e^{-i n phi_j}|^2 / (2 pi),
/// phi_j = -pi + 2 pi j / bins, n counted from first_label.
void phase_density(std::span<const Complex> amps, int first_label,
                   std::span<double> density);
} // namespace serial

namespace parallel {
void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t n);
void gemv(std::span<const Complex> a, std::span<const Complex> x,
          std::span<Complex> y, std::size_t n);
void phase_density(std::span<const Complex> amps, int first_label,
                   std::span<double> density);
} // namespace parallel

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

/// Grid point used by phase_density.
double phase_grid_point(std::size_t j, std::size_t bins);

} // namespace invphase::kernels
