// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latticeq/linalg.hpp"
#include "latticeq/rational.hpp"

namespace latticeq {

/// Hard cap on qubit counts for state tables and basis matrices: the dense
/// structures are 2^n (and 2^n x 2^n) in size.
inline constexpr int kMaxQubits = 20;

/// A product of distinct qubit variables q_i (1-based indices), stored as a
/// bit set. The empty product is the constant term. Multilinearity (q_i^2 =
/// q_i) is built into the representation: a variable is either present or not.
class Monomial {
public:
    static Monomial constant() { return Monomial(0); }

    static Monomial variable(int index);

    static Monomial from_indices(const std::vector<int>& indices);

    int degree() const { return __builtin_popcount(mask_); }
    bool is_constant() const { return mask_ == 0; }
    bool contains(int index) const { return (mask_ >> (index - 1)) & 1u; }

    /// 1-based variable indices in increasing order.
    std::vector<int> indices() const;

    /// True when every variable of the monomial is 1 in the assignment
    /// (bit i-1 of `varmask` holds the value of q_i).
    bool evaluates_true(std::uint32_t varmask) const { return (mask_ & ~varmask) == 0; }

    /// Product of two monomials; shared variables collapse (q_i * q_i = q_i).
    Monomial operator*(const Monomial& o) const { return Monomial(mask_ | o.mask_); }

    std::uint32_t mask() const { return mask_; }

    /// "1" for the constant term, else "q1*q3" style.
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.mask_ == b.mask_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.mask_ != b.mask_; }

private:
    explicit Monomial(std::uint32_t mask) : mask_(mask) {}

    std::uint32_t mask_;
};

/// Canonical monomial order: by degree, then lexicographically by the sorted
/// variable-index sequence. This is the column order of the basis matrix and
/// the term order of the canonical polynomial text form.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        std::uint32_t x = a.mask() ^ b.mask();
        if (x == 0) return false;
        // The smaller differing index belongs to the lexicographically
        // smaller index sequence (common lower indices are shared).
        return (a.mask() & (x & -x)) != 0;
    }
};

/// All 2^n monomials over q1..qn in canonical column order:
/// constant, q1..qn, then all degree-2 products, ..., up to q1*...*qn.
std::vector<Monomial> monomial_column_order(int qubit_count);

/// Assignment mask (bit i-1 = q_i) for row `row` of the n-qubit state table.
/// Rows count in binary with q1 as the most significant bit.
std::uint32_t state_varmask(int qubit_count, std::uint64_t row);

/// The ordered table of all 2^n computational basis states. Row r is the
/// n-bit binary expansion of r with q1 as the most significant bit.
class StateTable {
public:
    static StateTable build(int qubit_count);

    int qubit_count() const { return qubit_count_; }
    std::uint64_t row_count() const { return std::uint64_t(1) << qubit_count_; }

    /// Values of q1..qn at row r, each 0 or 1.
    std::vector<std::uint8_t> row(std::uint64_t r) const;

    std::uint32_t row_varmask(std::uint64_t r) const { return state_varmask(qubit_count_, r); }

private:
    explicit StateTable(int n) : qubit_count_(n) {}

    int qubit_count_;
};

/// The 2^n x 2^n 0/1 matrix whose entry (r, c) is the c-th canonical monomial
/// evaluated at the r-th basis state. Full rank with determinant +-1.
class BasisMatrix {
public:
    static BasisMatrix build(int qubit_count);

    int qubit_count() const { return qubit_count_; }
    std::uint64_t dim() const { return std::uint64_t(1) << qubit_count_; }
    const std::vector<Monomial>& column_order() const { return columns_; }

    int entry(std::uint64_t row, std::uint64_t col) const {
        std::uint64_t bit = row * dim() + col;
        return (bits_[bit >> 6] >> (bit & 63)) & 1u;
    }

    RationalMatrix to_rational_matrix() const;

private:
    BasisMatrix(int n, std::vector<Monomial> columns, std::vector<std::uint64_t> bits)
        : qubit_count_(n), columns_(std::move(columns)), bits_(std::move(bits)) {}

    int qubit_count_;
    std::vector<Monomial> columns_;
    std::vector<std::uint64_t> bits_;  // row-major, packed
};

/// Multilinear polynomial over 0/1 qubit variables: degree <= 1 per variable,
/// exact rational coefficients, no zero terms stored. Evaluation at any
/// basis-state assignment is exact.
class MultilinearPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    static MultilinearPolynomial zero(int variable_count) {
        return MultilinearPolynomial(variable_count, {});
    }

    static MultilinearPolynomial constant(int variable_count, const Rational& value);

    /// The polynomial q_index over `variable_count` variables.
    static MultilinearPolynomial variable(int variable_count, int index);

    static MultilinearPolynomial from_terms(int variable_count, TermMap terms);

    int variable_count() const { return variable_count_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a monomial; zero when the term is absent.
    Rational coefficient(const Monomial& m) const;

    /// Exact value at a 0/1 assignment of q1..qn. Throws DimensionError if the
    /// assignment length does not match variable_count().
    Rational evaluate(const std::vector<std::uint8_t>& assignment) const;

    /// Fast path: assignment packed as bit i-1 = q_i. No length check.
    Rational evaluate_mask(std::uint32_t varmask) const;

    /// Same polynomial viewed over a larger variable set.
    MultilinearPolynomial with_variable_count(int variable_count) const;

    MultilinearPolynomial operator+(const MultilinearPolynomial& o) const;
    MultilinearPolynomial operator-(const MultilinearPolynomial& o) const;
    MultilinearPolynomial operator*(const MultilinearPolynomial& o) const;
    MultilinearPolynomial scaled(const Rational& factor) const;

    /// Canonical text form: terms in canonical order, exact coefficients,
    /// e.g. "1 - 2*q1 - q2 + 2*q1*q2 - q2*q3 + 2*q1*q2*q3". Zero prints "0".
    std::string str() const;

    friend bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
        return a.variable_count_ == b.variable_count_ && a.terms_ == b.terms_;
    }

private:
    MultilinearPolynomial(int variable_count, TermMap terms)
        : variable_count_(variable_count), terms_(std::move(terms)) {}

    int variable_count_;
    TermMap terms_;
};

/// Builds the n-qubit state table. 1 <= n <= kMaxQubits.
StateTable state_table(int qubit_count);

/// Builds the n-qubit basis matrix. 1 <= n <= kMaxQubits.
BasisMatrix basis_matrix(int qubit_count);

/// Solves B_n c = values exactly by rational elimination. `values` must hold
/// one entry per state-table row, in row order. The result is in basis-matrix
/// column order.
std::vector<Rational> solve_coefficients(int qubit_count, const std::vector<Rational>& values);

/// The unique multilinear polynomial taking the given values on the state
/// table rows.
MultilinearPolynomial poly_from_values(int qubit_count, const std::vector<Rational>& values);

}  // namespace latticeq
