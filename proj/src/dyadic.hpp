#pragma once

#include <cstdint>
#include <string>

#include "bignum.hpp"

namespace negcyc {

enum class Round { down, up };  // toward -infinity / toward +infinity

// A dyadic rational mant * 2^exp with directed rounding to a requested
// mantissa width. All operations round outward in the caller's chosen
// direction, so a pair of dyadics can bracket any real computation.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    explicit Dyadic(const BigInt& m, int64_t e = 0) : mant_(m), exp_(e) {}
    explicit Dyadic(long v) : mant_(v), exp_(0) {}

    static Dyadic from_rational(const Rational& q, unsigned prec, Round dir);
    static Dyadic from_ratio(const BigInt& num, const BigInt& den, unsigned prec, Round dir);

    const BigInt& mant() const { return mant_; }
    int64_t exp2() const { return exp_; }
    int sign() const { return sgn(mant_); }
    bool is_zero() const { return mant_ == 0; }

    Rational to_rational() const;
    size_t mant_bits() const { return mpz_sizeinbase(mant_.get_mpz_t(), 2); }

    // Rounds this value to at most `prec` mantissa bits in direction `dir`.
    Dyadic rounded(unsigned prec, Round dir) const;

    Dyadic neg() const { return Dyadic(-mant_, exp_); }

    static Dyadic add(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir);
    static Dyadic sub(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir);
    static Dyadic mul(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir);
    static Dyadic div(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir);
    // Square root of a non-negative value.
    static Dyadic sqrt(const Dyadic& a, unsigned prec, Round dir);
    // a^k for a >= 0 by binary powering, each step rounded in `dir`.
    static Dyadic pow_ui(const Dyadic& a, uint64_t k, unsigned prec, Round dir);

    // Three-way comparison of exact values (no rounding).
    static int cmp(const Dyadic& a, const Dyadic& b);
    static int cmp(const Dyadic& a, const Rational& q);

private:
    BigInt mant_;
    int64_t exp_;
};

}  // namespace negcyc
