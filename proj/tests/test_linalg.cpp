// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "latticeq/errors.hpp"
#include "latticeq/linalg.hpp"

using latticeq::Rational;
using latticeq::RationalMatrix;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace

TEST_CASE("solves a 3x3 integer system exactly") {
    const auto a = from_rows({{2, 1, -1}, {-3, -1, 2}, {-2, 1, 2}});
    const auto x = latticeq::solve_linear_system(a, {8, -11, -3});
    CHECK(x == std::vector<Rational>{2, 3, -1});
    CHECK(latticeq::determinant(a) == Rational(-1));
}

TEST_CASE("solves with rational entries") {
    const auto a = from_rows({{{1, 2}, {1, 3}}, {{1, 4}, {1, 5}}});
    CHECK(latticeq::determinant(a) == Rational(1, 60));
    const auto x = latticeq::solve_linear_system(a, {Rational(1), Rational(0)});
    // Verify by substitution.
    CHECK(Rational(1, 2) * x[0] + Rational(1, 3) * x[1] == Rational(1));
    CHECK(Rational(1, 4) * x[0] + Rational(1, 5) * x[1] == Rational(0));
}

TEST_CASE("inverse times original is the identity") {
    const auto a = from_rows({{2, 1, -1}, {-3, -1, 2}, {-2, 1, 2}});
    const auto inv = latticeq::inverse(a);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            Rational sum(0);
            for (std::size_t k = 0; k < 3; ++k) sum += a.at(r, k) * inv.at(k, c);
            CHECK(sum == (r == c ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("singular and ill-shaped inputs") {
    const auto singular = from_rows({{1, 2}, {2, 4}});
    CHECK(latticeq::determinant(singular) == Rational(0));
    CHECK_THROWS_AS(latticeq::solve_linear_system(singular, {1, 1}), latticeq::Error);
    CHECK_THROWS_AS(latticeq::inverse(singular), latticeq::Error);

    const auto a = from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(latticeq::solve_linear_system(a, {1, 2, 3}), latticeq::DimensionError);
    RationalMatrix rect(2, 3);
    CHECK_THROWS_AS(latticeq::determinant(rect), latticeq::DimensionError);
}
