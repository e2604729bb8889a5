#pragma once

#include <cstdint>

#include "bignum.hpp"
#include "dyadic.hpp"

namespace negcyc {

// A pair of exact rationals certified to bracket a real value. Arithmetic
// rounds endpoints outward, so the result interval always contains the true
// result of the operation on any members of the inputs.
struct RealEnclosure {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

// Working interval over dyadics; converts to RealEnclosure at the boundary.
class Interval {
public:
    Interval() = default;
    Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static Interval exact(const BigInt& v) { return Interval(Dyadic(v), Dyadic(v)); }
    static Interval exact_ui(unsigned long v) { return Interval(Dyadic(BigInt(v)), Dyadic(BigInt(v))); }
    static Interval from_rational(const Rational& q, unsigned prec);
    static Interval from_ratio(const BigInt& num, const BigInt& den, unsigned prec);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }

    RealEnclosure to_enclosure() const { return {lo_.to_rational(), hi_.to_rational()}; }

    bool is_point() const { return Dyadic::cmp(lo_, hi_) == 0; }
    // strictly positive / negative over the whole interval
    bool positive() const { return lo_.sign() > 0; }

    static Interval add(const Interval& a, const Interval& b, unsigned prec);
    static Interval sub(const Interval& a, const Interval& b, unsigned prec);
    static Interval mul(const Interval& a, const Interval& b, unsigned prec);
    static Interval div(const Interval& a, const Interval& b, unsigned prec);
    static Interval sqrt(const Interval& a, unsigned prec);
    static Interval pow_ui(const Interval& a, uint64_t k, unsigned prec);

    // -1: every a < every b; +1: every a > every b; 0: overlap (undecided).
    static int compare(const Interval& a, const Interval& b);
    int compare_to(const Rational& q) const;

private:
    Dyadic lo_, hi_;
};

// Hard-coded certified constants, 1300 decimal digits each: the stored
// truncation t satisfies t/10^1300 < value < (t+1)/10^1300. Requesting
// `prec` mantissa bits rounds the bracket outward to dyadics; usable up to
// roughly 4300 bits, comfortably past the 4096-bit escalation ceiling.
Interval pi_interval(unsigned prec);
Interval e_interval(unsigned prec);

// The raw digit strings (integer part + 1300 fractional digits), exposed so
// tests can recompute the constants independently and confirm the brackets.
extern const char* const kPiDigits;
extern const char* const kEDigits;
inline constexpr unsigned kConstantFracDigits = 1300;

}  // namespace negcyc
