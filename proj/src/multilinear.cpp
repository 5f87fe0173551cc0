// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "latticeq/multilinear.hpp"

#include <algorithm>

#include "latticeq/errors.hpp"

namespace latticeq {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw ResourceLimitError("qubit count " + std::to_string(n) + " outside supported range 1.." +
                                 std::to_string(kMaxQubits));
    }
}

}  // namespace

Monomial Monomial::variable(int index) {
    if (index < 1 || index > 32) throw DimensionError("variable index out of range: " + std::to_string(index));
    return Monomial(std::uint32_t(1) << (index - 1));
}

Monomial Monomial::from_indices(const std::vector<int>& indices) {
    Monomial m = constant();
    for (int i : indices) m = m * variable(i);
    return m;
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string Monomial::str() const {
    if (is_constant()) return "1";
    std::string out;
    for (int i : indices()) {
        if (!out.empty()) out += "*";
        out += "q" + std::to_string(i);
    }
    return out;
}

std::vector<Monomial> monomial_column_order(int qubit_count) {
    check_qubit_count(qubit_count);
    std::vector<Monomial> order;
    order.reserve(std::size_t(1) << qubit_count);
    for (int degree = 0; degree <= qubit_count; ++degree) {
        // Combinations of {1..n} of the given size, in lexicographic order.
        std::vector<int> combo(degree);
        for (int i = 0; i < degree; ++i) combo[i] = i + 1;
        while (true) {
            order.push_back(Monomial::from_indices(combo));
            int i = degree - 1;
            while (i >= 0 && combo[i] == qubit_count - (degree - 1 - i)) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < degree; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return order;
}

std::uint32_t state_varmask(int qubit_count, std::uint64_t row) {
    std::uint32_t mask = 0;
    for (int i = 1; i <= qubit_count; ++i) {
        if ((row >> (qubit_count - i)) & 1u) mask |= std::uint32_t(1) << (i - 1);
    }
    return mask;
}

StateTable StateTable::build(int qubit_count) {
    check_qubit_count(qubit_count);
    return StateTable(qubit_count);
}

std::vector<std::uint8_t> StateTable::row(std::uint64_t r) const {
    std::vector<std::uint8_t> bits(qubit_count_);
    for (int i = 1; i <= qubit_count_; ++i) {
        bits[i - 1] = static_cast<std::uint8_t>((r >> (qubit_count_ - i)) & 1u);
    }
    return bits;
}

StateTable state_table(int qubit_count) { return StateTable::build(qubit_count); }

BasisMatrix BasisMatrix::build(int qubit_count) {
    check_qubit_count(qubit_count);
    std::vector<Monomial> columns = monomial_column_order(qubit_count);
    const std::uint64_t dim = std::uint64_t(1) << qubit_count;
    std::vector<std::uint64_t> bits((dim * dim + 63) / 64, 0);
    for (std::uint64_t r = 0; r < dim; ++r) {
        const std::uint32_t varmask = state_varmask(qubit_count, r);
        for (std::uint64_t c = 0; c < dim; ++c) {
            if (columns[c].evaluates_true(varmask)) {
                std::uint64_t bit = r * dim + c;
                bits[bit >> 6] |= std::uint64_t(1) << (bit & 63);
            }
        }
    }
    return BasisMatrix(qubit_count, std::move(columns), std::move(bits));
}

RationalMatrix BasisMatrix::to_rational_matrix() const {
    RationalMatrix m(dim(), dim());
    for (std::uint64_t r = 0; r < dim(); ++r) {
        for (std::uint64_t c = 0; c < dim(); ++c) {
            if (entry(r, c)) m.at(r, c) = Rational(1);
        }
    }
    return m;
}

BasisMatrix basis_matrix(int qubit_count) { return BasisMatrix::build(qubit_count); }

MultilinearPolynomial MultilinearPolynomial::constant(int variable_count, const Rational& value) {
    TermMap terms;
    if (!value.is_zero()) terms.emplace(Monomial::constant(), value);
    return MultilinearPolynomial(variable_count, std::move(terms));
}

MultilinearPolynomial MultilinearPolynomial::variable(int variable_count, int index) {
    if (index < 1 || index > variable_count) {
        throw DimensionError("variable q" + std::to_string(index) + " outside 1..q" +
                             std::to_string(variable_count));
    }
    TermMap terms;
    terms.emplace(Monomial::variable(index), Rational(1));
    return MultilinearPolynomial(variable_count, std::move(terms));
}

MultilinearPolynomial MultilinearPolynomial::from_terms(int variable_count, TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        const auto idx = it->first.indices();
        if (!idx.empty() && idx.back() > variable_count) {
            throw DimensionError("monomial " + it->first.str() + " exceeds variable count " +
                                 std::to_string(variable_count));
        }
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    return MultilinearPolynomial(variable_count, std::move(terms));
}

Rational MultilinearPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultilinearPolynomial::evaluate(const std::vector<std::uint8_t>& assignment) const {
    if (static_cast<int>(assignment.size()) != variable_count_) {
        throw DimensionError("assignment has " + std::to_string(assignment.size()) +
                             " bits, polynomial has " + std::to_string(variable_count_) + " variables");
    }
    std::uint32_t varmask = 0;
    for (int i = 0; i < variable_count_; ++i) {
        if (assignment[i]) varmask |= std::uint32_t(1) << i;
    }
    return evaluate_mask(varmask);
}

Rational MultilinearPolynomial::evaluate_mask(std::uint32_t varmask) const {
    Rational sum(0);
    for (const auto& [mono, coeff] : terms_) {
        if (mono.evaluates_true(varmask)) sum += coeff;
    }
    return sum;
}

MultilinearPolynomial MultilinearPolynomial::with_variable_count(int variable_count) const {
    return from_terms(variable_count, terms_);
}

MultilinearPolynomial MultilinearPolynomial::operator+(const MultilinearPolynomial& o) const {
    TermMap out = terms_;
    for (const auto& [mono, coeff] : o.terms_) {
        auto [it, inserted] = out.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return MultilinearPolynomial(std::max(variable_count_, o.variable_count_), std::move(out));
}

MultilinearPolynomial MultilinearPolynomial::operator-(const MultilinearPolynomial& o) const {
    return *this + o.scaled(Rational(-1));
}

MultilinearPolynomial MultilinearPolynomial::operator*(const MultilinearPolynomial& o) const {
    TermMap out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;  // multilinear reduction: q_i * q_i = q_i
            Rational c = ca * cb;
            auto [it, inserted] = out.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return MultilinearPolynomial(std::max(variable_count_, o.variable_count_), std::move(out));
}

MultilinearPolynomial MultilinearPolynomial::scaled(const Rational& factor) const {
    if (factor.is_zero()) return zero(variable_count_);
    TermMap out;
    for (const auto& [mono, coeff] : terms_) out.emplace(mono, coeff * factor);
    return MultilinearPolynomial(variable_count_, std::move(out));
}

std::string MultilinearPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        const Rational mag = coeff.abs();
        if (first) {
            if (coeff.sign() < 0) out += "-";
            first = false;
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
        }
        if (mono.is_constant()) {
            out += mag.str();
        } else {
            if (mag != Rational(1)) out += mag.str() + "*";
            out += mono.str();
        }
    }
    return out;
}

std::vector<Rational> solve_coefficients(int qubit_count, const std::vector<Rational>& values) {
    check_qubit_count(qubit_count);
    const std::uint64_t dim = std::uint64_t(1) << qubit_count;
    if (values.size() != dim) {
        throw DimensionError("expected " + std::to_string(dim) + " values for " +
                             std::to_string(qubit_count) + " qubits, got " + std::to_string(values.size()));
    }
    BasisMatrix basis = basis_matrix(qubit_count);
    return solve_linear_system(basis.to_rational_matrix(), values);
}

MultilinearPolynomial poly_from_values(int qubit_count, const std::vector<Rational>& values) {
    std::vector<Rational> coeffs = solve_coefficients(qubit_count, values);
    const std::vector<Monomial> columns = monomial_column_order(qubit_count);
    MultilinearPolynomial::TermMap terms;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (!coeffs[i].is_zero()) terms.emplace(columns[i], coeffs[i]);
    }
    return MultilinearPolynomial::from_terms(qubit_count, std::move(terms));
}

}  // namespace latticeq
