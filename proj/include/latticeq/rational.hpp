// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "latticeq/errors.hpp"

namespace latticeq {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; the canonical zero is 0/1. All arithmetic is exact — there is
/// no floating point anywhere on this path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by intent, mirrors integer literals
    Rational(long num, long den);

    /// Parses "p/q" or an integer string "p". Strict: optional leading '-',
    /// decimal digits only, denominator positive. Throws SpecParseError.
    static Rational from_string(std::string_view text);

    static Rational from_mpz(mpz_class num, mpz_class den);

    /// Canonical text: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // invariant: canonical (lowest terms, positive denominator)
};

/// Decimal rendering used by XYZ export: exact when the denominator divides
/// 10^max_frac_digits, otherwise rounded to that many fractional digits with
/// round-half-even. Trailing zeros and a trailing '.' are trimmed.
std::string to_decimal_string(const Rational& r, int max_frac_digits = 6);

}  // namespace latticeq
