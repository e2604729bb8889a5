#pragma once

#include <cstdint>
#include <vector>

#include "bignum.hpp"

namespace negcyc {

// Counts of only-negative / only-positive elements and the three exact
// proportions. Every count is evaluated twice where the underlying identity
// admits it: once through the Stirling recurrence and once through the
// closed double-factorial product. The two routes are compared up to
// kStirlingCrossCheckBound; a mismatch is a hard internal error.
//
// Everything here is pure; a StirlingTable is immutable once constructed
// and safe to read from any number of threads.

inline constexpr uint32_t kStirlingCrossCheckBound = 2000;

// Unsigned Stirling numbers of the first kind: S1(n,k) permutations of n
// letters with exactly k cycles, via S1(n,k) = S1(n-1,k-1) + (n-1) S1(n-1,k).
BigNat stirling1_unsigned(uint64_t n, uint64_t k);

// Materialized triangle rows 0..n_max; row n holds S1(n,0..n).
class StirlingTable {
public:
    explicit StirlingTable(uint32_t n_max);

    uint32_t n_max() const { return n_max_; }
    const BigNat& s1(uint32_t n, uint32_t k) const;
    const std::vector<BigNat>& row(uint32_t n) const { return rows_.at(n); }

private:
    uint32_t n_max_;
    std::vector<std::vector<BigNat>> rows_;
};

// chi_n(x) = x (x+1) ... (x+n-1), the rising factorial whose coefficients
// are the S1(n,k).
Rational chi_eval(uint32_t n, const Rational& x);

// (2n-1)!! = 1*3*...*(2n-1); the n = 0 value is 1, matching (-1)!! = 1.
BigNat double_factorial_odd(uint64_t n);

BigNat group_order_b(uint32_t n);  // 2^n n!

// Number of elements of W(B_n) with only negative cycles. For
// n <= kStirlingCrossCheckBound the Stirling sum  sum_k S1(n,k) 2^(n-k)
// is evaluated and checked against (2n-1)!!; beyond that the product
// alone is used (the coefficient route is Theta(n^2)).
BigNat count_all_negative_b(uint32_t n);

// Equal to count_all_negative_b by the fiber lemma (all sign classes have
// the same cardinality 2^(n-k)).
BigNat count_all_positive_b(uint32_t n);

// Only-negative elements with an even / odd number of negative cycles:
// 2^(n-1) (chi_n(1/2) + chi_n(-1/2))  and  2^(n-1) (chi_n(1/2) - chi_n(-1/2)).
BigNat count_all_negative_d(uint32_t n);
BigNat count_all_negative_coset(uint32_t n);

Rational proportion_p(uint32_t n);        // (2n-1)!! / (2^n n!)
Rational proportion_p_plus(uint32_t n);   // p(n) (2n-2)/(2n-1)
Rational proportion_p_minus(uint32_t n);  // p(n) 2n/(2n-1)

// One table row of everything cmd_table reports.
struct CountsRow {
    uint32_t n;
    BigNat neg_b, neg_d, neg_coset, pos_b;
    Rational p, p_plus, p_minus;
};

// Builds rows 1..max_n in a single rolling pass over the Stirling triangle
// (O(max_n^2) total, O(max_n) memory), cross-checking both routes for every
// n <= kStirlingCrossCheckBound.
std::vector<CountsRow> counts_table(uint32_t max_n);

// Streaming verifier for the counting identities: walks rows n = 1,2,...
// with two rolling rows and checks, per n,
//   sum_k S1(n,k) 2^(n-k) == (2n-1)!!,
//   even/odd split sums against 2^(n-1)(chi(1/2) +- chi(-1/2)),
//   row sum == n!.
// Returns the first failing n, or 0 if all of 1..max_n pass.
uint32_t verify_stirling_routes(uint32_t max_n);

}  // namespace negcyc
