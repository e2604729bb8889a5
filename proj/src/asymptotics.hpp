#pragma once

#include <cstdint>
#include <vector>

#include "bignum.hpp"
#include "enclosure.hpp"

namespace negcyc {

// h(n) = (1 + 1/(22n)) / sqrt(pi n), the asymptotic majorant of p(n).
// Certification works in the squared form
//     p(n) < h(n)  <=>  pi * n * p(n)^2 < (1 + 1/(22n))^2,
// which is exact-rational except for the pi bracket, so no square roots
// enter the verdict. Precision escalates 128 -> 4096 bits by doubling; a
// still-straddling comparison is reported undecided, never forced.

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMaxPrecisionBits = 4096;

enum class Verdict { certified_true, certified_false, undecided };

const char* verdict_str(Verdict v);

struct BoundReport {
    uint64_t n = 0;
    Rational p_value;         // exact reduced p(n)
    RealEnclosure h;          // h(n) at `precision_bits`
    Verdict verdict = Verdict::undecided;
    unsigned precision_bits = 0;
};

// Exact unreduced parts of p(n) = (2n-1)!! / (2^n n!).
struct ProportionParts {
    BigNat num, den;
};
ProportionParts proportion_parts(uint64_t n);

// Enclosure of h(n) with relative width at most 2^-precision_bits.
// Throws on a widening failure (cannot happen for precision <= 4096).
RealEnclosure h_enclosure(uint64_t n, unsigned precision_bits);

BoundReport certify_upper_bound(uint64_t n);

// Enclosure of p(n)/h(n).
RealEnclosure ratio_p_over_h(uint64_t n, unsigned precision_bits);

enum class CheckResult { certified_true, certified_false, undecided };

// Certifies the two-sided factorial bounds
//   sqrt(2 pi n) (n/e)^n < n! < (1 + 1/(11n)) sqrt(2 pi n) (n/e)^n
// at working precision max(precision_bits, n log2(n)/2 + 64).
CheckResult check_stirling_bounds(uint64_t n, unsigned precision_bits = kDefaultPrecisionBits);

// Log-spaced grid of `steps` integers from 1 to max_n inclusive, nearest
// rounding, duplicates removed. Built with integer k-th roots, so the grid
// is identical on every platform.
std::vector<uint64_t> log_grid(uint64_t max_n, unsigned steps);

}  // namespace negcyc
