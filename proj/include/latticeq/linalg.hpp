// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "latticeq/rational.hpp"

namespace latticeq {

/// Dense matrix of exact rationals. Small and boring: the systems solved here
/// are at most a few thousand rows.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact Gauss-Jordan elimination with row pivoting by first nonzero entry.
/// Zero entries are skipped, so sparse inputs eliminate cheaply. No floating
/// point is involved at any step.
///
/// Solves A x = rhs for a single right-hand side. Throws DimensionError on
/// shape mismatch and Error("singular matrix") when no unique solution exists.
std::vector<Rational> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& rhs);

/// Determinant by the same elimination. Throws DimensionError if not square.
Rational determinant(const RationalMatrix& a);

/// Exact inverse. Throws Error("singular matrix") if rank-deficient.
RationalMatrix inverse(const RationalMatrix& a);

}  // namespace latticeq
