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
#include "invphase/kernels.hpp"

#include <algorithm>
#include <cstddef>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invphase::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

// Row-parallel i-k-j loop. Zero entries of `a` are skipped; the ladder and
// phase matrices are mostly zeros.
void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t n) {
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        Complex *crow = c.data() + static_cast<std::size_t>(i) * n;
        std::fill(crow, crow + n, Complex{});
        const Complex *arow = a.data() + static_cast<std::size_t>(i) * n;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = arow[k];
            if (aik == Complex{}) {
                continue;
            }
            const Complex *brow = b.data() + k * n;
            const double ar = aik.real();
            const double ai = aik.imag();
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[j].real();
                const double bi = brow[j].imag();
                crow[j] = {crow[j].real() + (ar * br - ai * bi),
                           crow[j].imag() + (ar * bi + ai * br)};
            }
        }
    }
}

void gemv(std::span<const Complex> a, std::span<const Complex> x,
          std::span<Complex> y, std::size_t n) {
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const Complex *arow = a.data() + static_cast<std::size_t>(i) * n;
        Complex sum{};
        for (std::size_t k = 0; k < n; ++k) {
            sum += arow[k] * x[k];
        }
        y[static_cast<std::size_t>(i)] = sum;
    }
}

void phase_density(std::span<const Complex> amps, int first_label,
                   std::span<double> density) {
    const auto bins = static_cast<std::ptrdiff_t>(density.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < bins; ++j) {
        const double phi = phase_grid_point(static_cast<std::size_t>(j),
                                            density.size());
        Complex overlap{};
        for (std::size_t m = 0; m < amps.size(); ++m) {
            const double n = first_label + static_cast<double>(m);
            overlap += amps[m] * std::polar(1.0, -n * phi);
        }
        density[static_cast<std::size_t>(j)] =
            std::norm(overlap) / (2.0 * std::numbers::pi);
    }
}

} // namespace parallel
} // namespace invphase::kernels
