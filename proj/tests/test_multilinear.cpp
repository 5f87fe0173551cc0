// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "latticeq/errors.hpp"
#include "latticeq/multilinear.hpp"

using latticeq::BasisMatrix;
using latticeq::Monomial;
using latticeq::MultilinearPolynomial;
using latticeq::Rational;

namespace {

// Test-local oracle, independent of the elimination path under test: the
// coefficient of monomial S is the inclusion-exclusion sum of the values over
// the states whose variable sets are subsets of S.
std::vector<Rational> oracle_coefficients(int n, const std::vector<Rational>& values) {
    std::vector<Rational> out;
    for (const Monomial& mono : latticeq::monomial_column_order(n)) {
        Rational c(0);
        const std::uint32_t s = mono.mask();
        for (std::uint32_t t = 0;; t = ((t | ~s) + 1) & s) {  // submasks of s ascending
            std::uint64_t row = 0;
            for (int i = 1; i <= n; ++i) {
                if ((t >> (i - 1)) & 1u) row |= std::uint64_t(1) << (n - i);
            }
            const int flips = mono.degree() - __builtin_popcount(t);
            c += (flips % 2 == 0) ? values[row] : -values[row];
            if (t == s) break;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<Rational> random_values(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-999, 999), den(1, 60);
    std::vector<Rational> values;
    for (int i = 0; i < (1 << n); ++i) values.emplace_back(num(rng), den(rng));
    return values;
}

MultilinearPolynomial random_poly(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    MultilinearPolynomial::TermMap terms;
    for (const Monomial& mono : latticeq::monomial_column_order(n)) {
        const Rational c(num(rng), den(rng));
        if (!c.is_zero()) terms.emplace(mono, c);
    }
    return MultilinearPolynomial::from_terms(n, std::move(terms));
}

const std::vector<Rational> kCubicDeltaA{1, 1, 0, -1, -1, -1, 0, 1};
const std::vector<Rational> kCubicDeltaB{0, 1, 1, 1, 0, -1, -1, -1};
const std::vector<Rational> kFccDeltaA{{1, 2}, {-1, 2}, {-1, 2}, {1, 2}};
const std::vector<Rational> kFccDeltaB{{1, 2}, {1, 2}, {-1, 2}, {-1, 2}};

}  // namespace

TEST_CASE("state table counts in binary with q1 most significant") {
    const auto t3 = latticeq::state_table(3);
    REQUIRE(t3.row_count() == 8);
    const std::vector<std::vector<std::uint8_t>> expected{
        {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
    for (std::uint64_t r = 0; r < 8; ++r) CHECK(t3.row(r) == expected[r]);

    const auto t2 = latticeq::state_table(2);
    CHECK(t2.row(0) == std::vector<std::uint8_t>{0, 0});
    CHECK(t2.row(1) == std::vector<std::uint8_t>{0, 1});
    CHECK(t2.row(2) == std::vector<std::uint8_t>{1, 0});
    CHECK(t2.row(3) == std::vector<std::uint8_t>{1, 1});

    const auto t1 = latticeq::state_table(1);
    CHECK(t1.row(0) == std::vector<std::uint8_t>{0});
    CHECK(t1.row(1) == std::vector<std::uint8_t>{1});

    CHECK_THROWS_AS(latticeq::state_table(0), latticeq::ResourceLimitError);
    CHECK_THROWS_AS(latticeq::state_table(21), latticeq::ResourceLimitError);
}

TEST_CASE("monomial column order is degree-major, lexicographic within degree") {
    const auto cols = latticeq::monomial_column_order(3);
    std::vector<std::string> names;
    for (const auto& m : cols) names.push_back(m.str());
    CHECK(names == std::vector<std::string>{"1", "q1", "q2", "q3", "q1*q2", "q1*q3", "q2*q3", "q1*q2*q3"});

    // Lexicographic comparison is on index sequences, not on bit masks:
    // {1,4} precedes {2,3}.
    latticeq::MonomialLess less;
    CHECK(less(Monomial::from_indices({1, 4}), Monomial::from_indices({2, 3})));
    CHECK(!less(Monomial::from_indices({2, 3}), Monomial::from_indices({1, 4})));
    CHECK(less(Monomial::from_indices({1, 3}), Monomial::from_indices({1, 4})));
    CHECK(less(Monomial::from_indices({3}), Monomial::from_indices({1, 2})));
}

TEST_CASE("basis matrices match the published 2- and 3-qubit forms") {
    const std::vector<std::vector<int>> b3{
        {1, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 1, 0, 0, 0, 0},
        {1, 0, 1, 0, 0, 0, 0, 0},
        {1, 0, 1, 1, 0, 0, 1, 0},
        {1, 1, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 1, 0, 1, 0, 0},
        {1, 1, 1, 0, 1, 0, 0, 0},
        {1, 1, 1, 1, 1, 1, 1, 1},
    };
    const BasisMatrix m3 = latticeq::basis_matrix(3);
    for (std::uint64_t r = 0; r < 8; ++r) {
        for (std::uint64_t c = 0; c < 8; ++c) CHECK(m3.entry(r, c) == b3[r][c]);
    }

    const std::vector<std::vector<int>> b2{{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}};
    const BasisMatrix m2 = latticeq::basis_matrix(2);
    for (std::uint64_t r = 0; r < 4; ++r) {
        for (std::uint64_t c = 0; c < 4; ++c) CHECK(m2.entry(r, c) == b2[r][c]);
    }

    const BasisMatrix m1 = latticeq::basis_matrix(1);
    CHECK(m1.entry(0, 0) == 1);
    CHECK(m1.entry(0, 1) == 0);
    CHECK(m1.entry(1, 0) == 1);
    CHECK(m1.entry(1, 1) == 1);

    CHECK_THROWS_AS(latticeq::basis_matrix(0), latticeq::ResourceLimitError);
    CHECK_THROWS_AS(latticeq::basis_matrix(21), latticeq::ResourceLimitError);
}

TEST_CASE("solve_coefficients reproduces the published coefficient vectors") {
    CHECK(latticeq::solve_coefficients(3, kCubicDeltaA) ==
          std::vector<Rational>{1, -2, -1, 0, 2, 0, -1, 2});
    CHECK(latticeq::solve_coefficients(2, kFccDeltaA) ==
          std::vector<Rational>{{1, 2}, -1, -1, 2});
    CHECK(latticeq::solve_coefficients(2, {1, 1, 1, 1}) == std::vector<Rational>{1, 0, 0, 0});
    CHECK_THROWS_AS(latticeq::solve_coefficients(3, kFccDeltaA), latticeq::DimensionError);
}

TEST_CASE("poly_from_values matches the independent inclusion-exclusion oracle") {
    // Cubic delta-b, solved independently: the polynomial's cross terms are
    // -2 q1q2, -2 q1q3, -1 q2q3.
    const auto db = latticeq::poly_from_values(3, kCubicDeltaB);
    CHECK(db.str() == "q2 + q3 - 2*q1*q2 - 2*q1*q3 - q2*q3 + 2*q1*q2*q3");
    CHECK(latticeq::solve_coefficients(3, kCubicDeltaB) == oracle_coefficients(3, kCubicDeltaB));

    const auto da = latticeq::poly_from_values(3, kCubicDeltaA);
    CHECK(da.str() == "1 - 2*q1 - q2 + 2*q1*q2 - q2*q3 + 2*q1*q2*q3");

    CHECK(latticeq::poly_from_values(2, kFccDeltaB).str() == "1/2 - q1");

    const auto zero = latticeq::poly_from_values(2, {0, 0, 0, 0});
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");
}

TEST_CASE("evaluate") {
    const auto db = latticeq::poly_from_values(2, kFccDeltaB);  // 1/2 - q1
    CHECK(db.evaluate({0, 1}) == Rational(1, 2));
    CHECK(db.evaluate({1, 0}) == Rational(-1, 2));
    CHECK(MultilinearPolynomial::zero(3).evaluate({1, 0, 1}) == Rational(0));
    CHECK_THROWS_AS(db.evaluate({0, 1, 1}), latticeq::DimensionError);
}

TEST_CASE("polynomial algebra with multilinear reduction") {
    const auto q4 = MultilinearPolynomial::variable(5, 4);
    const auto q5 = MultilinearPolynomial::variable(5, 5);
    const auto one = MultilinearPolynomial::constant(5, Rational(1));

    CHECK((q4 * q5) * (q4 * q5) == q4 * q5);
    CHECK(((one - q4) * q5).str() == "q5 - q4*q5");
    CHECK((MultilinearPolynomial::variable(2, 1) * MultilinearPolynomial::variable(2, 2)).str() ==
          "q1*q2");

    // Every product stays multilinear: no repeated index inside a monomial is
    // representable, so check degree bookkeeping instead.
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto p = random_poly(rng, 4) * random_poly(rng, 4);
        for (const auto& [mono, coeff] : p.terms()) {
            CHECK(mono.degree() <= 4);
            CHECK(!coeff.is_zero());
        }
    }
}

TEST_CASE("round trip: poly_from_values then evaluate reproduces the inputs exactly") {
    std::mt19937_64 rng(20260808);
    for (int n = 1; n <= 8; ++n) {
        const int reps = 200;
        for (int rep = 0; rep < reps; ++rep) {
            const auto values = random_values(rng, n);
            const auto p = latticeq::poly_from_values(n, values);
            bool all_equal = true;
            for (std::uint64_t r = 0; r < (std::uint64_t(1) << n); ++r) {
                all_equal = all_equal &&
                            p.evaluate_mask(latticeq::state_varmask(n, r)) == values[r];
            }
            CHECK(all_equal);
        }
    }
}

TEST_CASE("basis matrix determinant is +-1 up to 10 qubits") {
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        const Rational det = latticeq::determinant(latticeq::basis_matrix(n).to_rational_matrix());
        CHECK(det.abs() == Rational(1));
    }
}

TEST_CASE("basis matrix inverse entries lie in {-1, 0, +1}") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto inv = latticeq::inverse(latticeq::basis_matrix(n).to_rational_matrix());
        bool ok = true;
        for (std::size_t r = 0; r < inv.rows(); ++r) {
            for (std::size_t c = 0; c < inv.cols(); ++c) {
                ok = ok && inv.at(r, c).abs() <= Rational(1) && inv.at(r, c).is_integer();
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("evaluation is a ring homomorphism on random polynomials") {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto p = random_poly(rng, n);
            const auto q = random_poly(rng, n);
            for (std::uint64_t r = 0; r < (std::uint64_t(1) << n); ++r) {
                const std::uint32_t s = latticeq::state_varmask(n, r);
                CHECK((p + q).evaluate_mask(s) == p.evaluate_mask(s) + q.evaluate_mask(s));
                CHECK((p * q).evaluate_mask(s) == p.evaluate_mask(s) * q.evaluate_mask(s));
            }
        }
    }
}
