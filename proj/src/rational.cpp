// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "latticeq/rational.hpp"

#include <cctype>

namespace latticeq {

namespace {

bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_mpz(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
    mpq_class q(std::move(num));
    q /= mpq_class(std::move(den));
    return Rational(std::move(q));
}

Rational Rational::from_string(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    std::string_view num_part = s;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
        has_den = true;
    }
    if (!is_digit_run(num_part) || (has_den && !is_digit_run(den_part))) {
        throw SpecParseError("malformed rational literal: \"" + std::string(text) +
                             "\" (expected \"p\", \"-p\", \"p/q\" or \"-p/q\")");
    }
    mpz_class num(std::string(num_part), 10);
    mpz_class den = has_den ? mpz_class(std::string(den_part), 10) : mpz_class(1);
    if (sgn(den) == 0) {
        throw SpecParseError("malformed rational literal: \"" + std::string(text) +
                             "\" (zero denominator)");
    }
    if (negative) num = -num;
    return from_mpz(std::move(num), std::move(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::string to_decimal_string(const Rational& r, int max_frac_digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(max_frac_digits));

    mpz_class num = ::abs(r.numerator()) * scale;
    const mpz_class& den = r.denominator();

    // Round-half-even division num / den.
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class twice = rem * 2;
    int cmp = ::cmp(twice, den);
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    mpz_class int_part = q / scale;
    mpz_class frac_part = q % scale;

    std::string out;
    if (r.sign() < 0 && sgn(q) != 0) out += '-';
    out += int_part.get_str();
    if (frac_part != 0) {
        std::string frac = frac_part.get_str();
        frac.insert(frac.begin(), static_cast<size_t>(max_frac_digits) - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out += '.';
        out += frac;
    }
    return out;
}

}  // namespace latticeq
