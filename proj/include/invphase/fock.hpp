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
 * @file fock.hpp
 * Truncated Fock bases, kets and dense operators.
 *
 * Two lattices are supported:
 *   one-sided  n = 0 .. D-1        row = n
 *   two-sided  n = -M .. M         row = n + M, dimension 2M+1
 *
 * Every Ket and Op is tagged with the basis it lives on. Mixing bases in a
 * product is a ContractError; asking for a label outside the lattice is a
 * DomainError.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace invphase {

using Complex = std::complex<double>;

/// Violated precondition that is a programming error (basis mismatch,
/// operator requested on the wrong kind of lattice).
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Argument outside the mathematical domain (label off the lattice,
/// truncation too small, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

enum class Boundary { Truncated, Cyclic };

class FockBasis {
  public:
    /// n = 0 .. dim-1. Requires dim >= 4.
    static FockBasis one_sided(int dim);
    /// n = -half_width .. half_width. Requires half_width >= 2.
    static FockBasis two_sided(int half_width,
                               Boundary boundary = Boundary::Cyclic);

    [[nodiscard]] bool is_one_sided() const noexcept { return !two_sided_; }
    [[nodiscard]] bool is_two_sided() const noexcept { return two_sided_; }
    [[nodiscard]] std::size_t dim() const noexcept;
    [[nodiscard]] int min_label() const noexcept;
    [[nodiscard]] int max_label() const noexcept;
    [[nodiscard]] bool contains(int n) const noexcept;
    /// One-sided lattices always report Truncated.
    [[nodiscard]] Boundary boundary() const noexcept { return boundary_; }
    /// Throws ContractError on a one-sided basis.
    [[nodiscard]] int half_width() const;

    [[nodiscard]] std::size_t index_of(int n) const;
    [[nodiscard]] int label_of(std::size_t row) const;
    [[nodiscard]] std::vector<int> labels() const;

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const FockBasis &, const FockBasis &) = default;

  private:
    FockBasis(bool two_sided, int extent, Boundary boundary)
        : two_sided_(two_sided), extent_(extent), boundary_(boundary) {}

    bool two_sided_;
    int extent_; // D for one-sided, M for two-sided
    Boundary boundary_;
};

class Ket {
  public:
    /// Throws ContractError if the length does not match the basis and
    /// DomainError if any amplitude is not finite.
    Ket(FockBasis basis, std::vector<Complex> amps);

    static Ket zero(const FockBasis &basis);

    [[nodiscard]] const FockBasis &basis() const noexcept { return basis_; }
    [[nodiscard]] std::span<const Complex> amps() const noexcept {
        return amps_;
    }
    [[nodiscard]] Complex amp(int label) const {
        return amps_[basis_.index_of(label)];
    }
    [[nodiscard]] double norm() const;
    [[nodiscard]] Ket normalized() const;

  private:
    FockBasis basis_;
    std::vector<Complex> amps_;
};

/// Dense dim x dim complex matrix, row-major, over a FockBasis.
class Op {
  public:
    Op(FockBasis basis, std::vector<Complex> entries);

    static Op zero(const FockBasis &basis);
    static Op identity(const FockBasis &basis);

    [[nodiscard]] const FockBasis &basis() const noexcept { return basis_; }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.dim(); }
    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return entries_;
    }

    /// Entry by row/column index.
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim() + col];
    }
    /// Entry <row|op|col> by lattice label.
    [[nodiscard]] Complex at(int row, int col) const {
        return (*this)(basis_.index_of(row), basis_.index_of(col));
    }

  private:
    FockBasis basis_;
    std::vector<Complex> entries_;
};

/// Accumulates <row|op|col> entries by label, then freezes into an Op.
class OpBuilder {
  public:
    explicit OpBuilder(FockBasis basis);

    OpBuilder &set(int row, int col, Complex value);
    [[nodiscard]] Op build() &&;

  private:
    FockBasis basis_;
    std::vector<Complex> entries_;
};

[[nodiscard]] Ket number_state(const FockBasis &basis, int n);

[[nodiscard]] Ket apply(const Op &op, const Ket &ket);
[[nodiscard]] Op compose(const Op &left, const Op &right);
[[nodiscard]] Op adjoint(const Op &op);
[[nodiscard]] Op add(const Op &a, const Op &b);
[[nodiscard]] Op subtract(const Op &a, const Op &b);
[[nodiscard]] Op scale(Complex factor, const Op &op);

/// <ket|op|ket>; the ket is not normalized first.
[[nodiscard]] Complex expectation(const Op &op, const Ket &ket);
[[nodiscard]] Complex inner(const Ket &bra, const Ket &ket);

/// Max-abs entry of (a - b) after deleting the rows and columns whose
/// lattice labels are listed in excluded_labels.
[[nodiscard]] double residual_norm(const Op &a, const Op &b,
                                   std::span<const int> excluded_labels = {});

/// Matrix exponential by scaling and squaring of a Taylor series.
[[nodiscard]] Op exponential(const Op &op);

inline Op operator*(const Op &l, const Op &r) { return compose(l, r); }
inline Ket operator*(const Op &op, const Ket &ket) { return apply(op, ket); }
inline Op operator*(Complex c, const Op &op) { return scale(c, op); }
inline Op operator+(const Op &a, const Op &b) { return add(a, b); }
inline Op operator-(const Op &a, const Op &b) { return subtract(a, b); }

} // namespace invphase
