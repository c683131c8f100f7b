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
#include "invphase/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "invphase/kernels.hpp"

namespace invphase {

namespace {

void require_same_basis(const FockBasis &a, const FockBasis &b,
                        const char *what) {
    if (!(a == b)) {
        throw ContractError(std::string(what) + ": basis mismatch (" +
                            a.describe() + " vs " + b.describe() + ")");
    }
}

double one_norm(const Op &op) {
    double best = 0.0;
    for (std::size_t col = 0; col < op.dim(); ++col) {
        double sum = 0.0;
        for (std::size_t row = 0; row < op.dim(); ++row) {
            sum += std::abs(op(row, col));
        }
        best = std::max(best, sum);
    }
    return best;
}

double max_abs(std::span<const Complex> values) {
    double best = 0.0;
    for (const auto &v : values) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

} // namespace

// FockBasis

FockBasis FockBasis::one_sided(int dim) {
    if (dim < 4) {
        throw DomainError("one-sided basis needs dim >= 4, got " +
                          std::to_string(dim));
    }
    return FockBasis(false, dim, Boundary::Truncated);
}

FockBasis FockBasis::two_sided(int half_width, Boundary boundary) {
    if (half_width < 2) {
        throw DomainError("two-sided basis needs half_width >= 2, got " +
                          std::to_string(half_width));
    }
    return FockBasis(true, half_width, boundary);
}

std::size_t FockBasis::dim() const noexcept {
    return two_sided_ ? static_cast<std::size_t>(2 * extent_ + 1)
                      : static_cast<std::size_t>(extent_);
}

int FockBasis::min_label() const noexcept { return two_sided_ ? -extent_ : 0; }

int FockBasis::max_label() const noexcept {
    return two_sided_ ? extent_ : extent_ - 1;
}

bool FockBasis::contains(int n) const noexcept {
    return n >= min_label() && n <= max_label();
}

int FockBasis::half_width() const {
    if (!two_sided_) {
        throw ContractError("half_width requested on a one-sided basis");
    }
    return extent_;
}

std::size_t FockBasis::index_of(int n) const {
    if (!contains(n)) {
        throw DomainError("label " + std::to_string(n) +
                          " outside lattice [" + std::to_string(min_label()) +
                          ", " + std::to_string(max_label()) + "]");
    }
    return static_cast<std::size_t>(n - min_label());
}

int FockBasis::label_of(std::size_t row) const {
    if (row >= dim()) {
        throw DomainError("row " + std::to_string(row) +
                          " outside basis of dimension " +
                          std::to_string(dim()));
    }
    return static_cast<int>(row) + min_label();
}

std::vector<int> FockBasis::labels() const {
    std::vector<int> out(dim());
    std::iota(out.begin(), out.end(), min_label());
    return out;
}

std::string FockBasis::describe() const {
    if (!two_sided_) {
        return "one-sided(dim=" + std::to_string(extent_) + ")";
    }
    return "two-sided(half_width=" + std::to_string(extent_) + ", " +
           (boundary_ == Boundary::Cyclic ? "cyclic" : "truncated") + ")";
}

// Ket

Ket::Ket(FockBasis basis, std::vector<Complex> amps)
    : basis_(basis), amps_(std::move(amps)) {
    if (amps_.size() != basis_.dim()) {
        throw ContractError("ket length " + std::to_string(amps_.size()) +
                            " does not match " + basis_.describe());
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("ket amplitude is not finite");
        }
    }
}

Ket Ket::zero(const FockBasis &basis) {
    return Ket(basis, std::vector<Complex>(basis.dim()));
}

double Ket::norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Ket Ket::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw DomainError("cannot normalize the zero ket");
    }
    std::vector<Complex> out(amps_);
    for (auto &a : out) {
        a /= n;
    }
    return Ket(basis_, std::move(out));
}

// Op

Op::Op(FockBasis basis, std::vector<Complex> entries)
    : basis_(basis), entries_(std::move(entries)) {
    if (entries_.size() != basis_.dim() * basis_.dim()) {
        throw ContractError("operator storage does not match " +
                            basis_.describe());
    }
}

Op Op::zero(const FockBasis &basis) {
    return Op(basis, std::vector<Complex>(basis.dim() * basis.dim()));
}

Op Op::identity(const FockBasis &basis) {
    const std::size_t n = basis.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = 1.0;
    }
    return Op(basis, std::move(e));
}

OpBuilder::OpBuilder(FockBasis basis)
    : basis_(basis), entries_(basis.dim() * basis.dim()) {}

OpBuilder &OpBuilder::set(int row, int col, Complex value) {
    entries_[basis_.index_of(row) * basis_.dim() + basis_.index_of(col)] =
        value;
    return *this;
}

Op OpBuilder::build() && { return Op(basis_, std::move(entries_)); }

// Algebra

Ket number_state(const FockBasis &basis, int n) {
    std::vector<Complex> amps(basis.dim());
    amps[basis.index_of(n)] = 1.0;
    return Ket(basis, std::move(amps));
}

Ket apply(const Op &op, const Ket &ket) {
    require_same_basis(op.basis(), ket.basis(), "apply");
    std::vector<Complex> out(op.dim());
    kernels::parallel::gemv(op.data(), ket.amps(), out, op.dim());
    return Ket(op.basis(), std::move(out));
}

Op compose(const Op &left, const Op &right) {
    require_same_basis(left.basis(), right.basis(), "compose");
    std::vector<Complex> out(left.dim() * left.dim());
    kernels::parallel::gemm(left.data(), right.data(), out, left.dim());
    return Op(left.basis(), std::move(out));
}

Op adjoint(const Op &op) {
    const std::size_t n = op.dim();
    std::vector<Complex> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[j * n + i] = std::conj(op(i, j));
        }
    }
    return Op(op.basis(), std::move(out));
}

Op add(const Op &a, const Op &b) {
    require_same_basis(a.basis(), b.basis(), "add");
    std::vector<Complex> out(a.data().begin(), a.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b.data()[i];
    }
    return Op(a.basis(), std::move(out));
}

Op subtract(const Op &a, const Op &b) {
    require_same_basis(a.basis(), b.basis(), "subtract");
    std::vector<Complex> out(a.data().begin(), a.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b.data()[i];
    }
    return Op(a.basis(), std::move(out));
}

Op scale(Complex factor, const Op &op) {
    std::vector<Complex> out(op.data().begin(), op.data().end());
    for (auto &v : out) {
        v *= factor;
    }
    return Op(op.basis(), std::move(out));
}

Complex inner(const Ket &bra, const Ket &ket) {
    require_same_basis(bra.basis(), ket.basis(), "inner");
    Complex sum{};
    for (std::size_t i = 0; i < ket.amps().size(); ++i) {
        sum += std::conj(bra.amps()[i]) * ket.amps()[i];
    }
    return sum;
}

Complex expectation(const Op &op, const Ket &ket) {
    return inner(ket, apply(op, ket));
}

double residual_norm(const Op &a, const Op &b,
                     std::span<const int> excluded_labels) {
    require_same_basis(a.basis(), b.basis(), "residual_norm");
    const FockBasis &basis = a.basis();
    std::vector<bool> skip(basis.dim(), false);
    for (int label : excluded_labels) {
        if (!basis.contains(label)) {
            throw ContractError("excluded label " + std::to_string(label) +
                                " is not on " + basis.describe());
        }
        skip[basis.index_of(label)] = true;
    }
    double best = 0.0;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        if (skip[i]) {
            continue;
        }
        for (std::size_t j = 0; j < basis.dim(); ++j) {
            if (skip[j]) {
                continue;
            }
            best = std::max(best, std::abs(a(i, j) - b(i, j)));
        }
    }
    return best;
}

Op exponential(const Op &op) {
    // Scale so the 1-norm is <= 1/2; 30 Taylor terms then reach far below
    // double epsilon before squaring back.
    const double norm = one_norm(op);
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Op scaled = scale(std::ldexp(1.0, -squarings), op);

    Op result = Op::identity(op.basis());
    Op term = Op::identity(op.basis());
    for (int k = 1; k <= 30; ++k) {
        term = scale(1.0 / k, compose(term, scaled));
        result = add(result, term);
        if (max_abs(term.data()) < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = compose(result, result);
    }
    return result;
}

} // namespace invphase
