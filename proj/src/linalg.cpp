// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "latticeq/linalg.hpp"

#include <optional>

#include "latticeq/errors.hpp"

namespace latticeq {

namespace {

// Gauss-Jordan reduction of `a`, mirroring every row operation onto `rhs`
// (which must have the same row count). Pivot for each column is the first
// still-unused row with a nonzero entry. On success, column c of the original
// system is solved by rhs row pivot_of_col[c].
//
// Returns the determinant of `a` (scaled pivots times permutation sign), or
// nullopt if `a` is singular.
std::optional<Rational> gauss_jordan(RationalMatrix& a, RationalMatrix& rhs,
                                     std::vector<std::size_t>& pivot_of_col) {
    const std::size_t n = a.rows();
    std::vector<bool> used(n, false);
    pivot_of_col.assign(a.cols(), 0);
    Rational det(1);

    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::size_t pivot = n;
        for (std::size_t r = 0; r < n; ++r) {
            if (!used[r] && !a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return std::nullopt;
        used[pivot] = true;
        pivot_of_col[col] = pivot;

        const Rational p = a.at(pivot, col);
        if (p != Rational(1)) {
            det *= p;
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (!a.at(pivot, j).is_zero()) a.at(pivot, j) /= p;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                if (!rhs.at(pivot, j).is_zero()) rhs.at(pivot, j) /= p;
            }
        }

        for (std::size_t r = 0; r < n; ++r) {
            if (r == pivot || a.at(r, col).is_zero()) continue;
            const Rational f = a.at(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                if (!a.at(pivot, j).is_zero()) a.at(r, j) -= f * a.at(pivot, j);
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                if (!rhs.at(pivot, j).is_zero()) rhs.at(r, j) -= f * rhs.at(pivot, j);
            }
        }
    }

    // Permutation sign: pivot_of_col is a bijection column -> row.
    std::vector<bool> seen(n, false);
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        if (seen[c]) continue;
        std::size_t cycle_len = 0;
        std::size_t j = c;
        while (!seen[j]) {
            seen[j] = true;
            j = pivot_of_col[j];
            ++cycle_len;
        }
        if (cycle_len % 2 == 0) negate = !negate;
    }
    return negate ? -det : det;
}

RationalMatrix square_copy(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("matrix is not square");
    return a;
}

}  // namespace

std::vector<Rational> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& rhs) {
    RationalMatrix m = square_copy(a);
    if (rhs.size() != a.rows()) {
        throw DimensionError("right-hand side has " + std::to_string(rhs.size()) +
                             " entries, expected " + std::to_string(a.rows()));
    }
    RationalMatrix b(a.rows(), 1);
    for (std::size_t r = 0; r < rhs.size(); ++r) b.at(r, 0) = rhs[r];

    std::vector<std::size_t> pivot_of_col;
    if (!gauss_jordan(m, b, pivot_of_col)) throw Error("singular matrix");

    std::vector<Rational> x(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) x[c] = b.at(pivot_of_col[c], 0);
    return x;
}

Rational determinant(const RationalMatrix& a) {
    RationalMatrix m = square_copy(a);
    RationalMatrix b(a.rows(), 0);
    std::vector<std::size_t> pivot_of_col;
    auto det = gauss_jordan(m, b, pivot_of_col);
    return det ? *det : Rational(0);
}

RationalMatrix inverse(const RationalMatrix& a) {
    RationalMatrix m = square_copy(a);
    const std::size_t n = a.rows();
    RationalMatrix b(n, n);
    for (std::size_t r = 0; r < n; ++r) b.at(r, r) = Rational(1);

    std::vector<std::size_t> pivot_of_col;
    if (!gauss_jordan(m, b, pivot_of_col)) throw Error("singular matrix");

    RationalMatrix inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t j = 0; j < n; ++j) inv.at(c, j) = b.at(pivot_of_col[c], j);
    }
    return inv;
}

}  // namespace latticeq
