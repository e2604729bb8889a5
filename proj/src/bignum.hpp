#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace negcyc {

// Arbitrary-precision kernel. Counts are exact naturals, proportions exact
// rationals kept in lowest terms (mpq canonical form, denominator > 0).
using BigNat = mpz_class;
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "a/b" or a bare integer "a". Canonicalizes; rejects b = 0.
Rational parse_rational(std::string_view text);

// Fixed-point decimal rendering of a rational, `frac_digits` places,
// round half away from zero, trailing zeros trimmed down to one decimal.
std::string decimal_round(const Rational& q, unsigned frac_digits);

// Directed fixed-point rendering (floor / ceil at `frac_digits` places).
// Lower endpoints of enclosures print rounded down, upper endpoints up, so
// the printed interval still brackets the true value.
std::string decimal_directed(const Rational& q, unsigned frac_digits, bool round_up);

inline BigNat pow2(unsigned long e) {
    BigNat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace negcyc
