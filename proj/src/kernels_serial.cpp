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

#include <numbers>

namespace invphase::kernels {

double phase_grid_point(std::size_t j, std::size_t bins) {
    return -std::numbers::pi +
           2.0 * std::numbers::pi * static_cast<double>(j) /
               static_cast<double>(bins);
}

namespace serial {

void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const Complex x = a[i * n + k];
                const Complex y = b[k * n + j];
                re += x.real() * y.real() - x.imag() * y.imag();
                im += x.real() * y.imag() + x.imag() * y.real();
            }
            c[i * n + j] = {re, im};
        }
    }
}

void gemv(std::span<const Complex> a, std::span<const Complex> x,
          std::span<Complex> y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        Complex sum{};
        for (std::size_t k = 0; k < n; ++k) {
            sum += a[i * n + k] * x[k];
        }
        y[i] = sum;
    }
}

void phase_density(std::span<const Complex> amps, int first_label,
                   std::span<double> density) {
    const std::size_t bins = density.size();
    for (std::size_t j = 0; j < bins; ++j) {
        const double phi = phase_grid_point(j, bins);
        Complex overlap{};
        for (std::size_t m = 0; m < amps.size(); ++m) {
            const double n = first_label + static_cast<double>(m);
            overlap += amps[m] * std::polar(1.0, -n * phi);
        }
        density[j] = std::norm(overlap) / (2.0 * std::numbers::pi);
    }
}

} // namespace serial
} // namespace invphase::kernels
