#include "counting.hpp"

#include <stdexcept>

namespace negcyc {

namespace {

void check_rank(uint32_t n) {
    if (n == 0) throw std::invalid_argument("rank 0 is rejected (group defined for n >= 1)");
}

// Product of odd numbers in [lo, hi] by binary splitting; keeps factors
// balanced so large n stays cheap.
BigNat odd_range_product(uint64_t lo, uint64_t hi) {
    if (lo > hi) return 1;
    if (hi - lo < 16) {
        BigNat r = 1;
        for (uint64_t v = lo; v <= hi; v += 2) r *= static_cast<unsigned long>(v);
        return r;
    }
    uint64_t mid = lo + (hi - lo) / 2;
    if (mid % 2 == 0) ++mid;
    return odd_range_product(lo, mid) * odd_range_product(mid + 2, hi);
}

// Advances a Stirling row in place: given row for n-1 (size n), produces the
// row for n (size n+1).
void advance_row(std::vector<BigNat>& row, uint64_t n) {
    row.resize(n + 1);
    row[n] = 1;
    for (uint64_t k = n - 1; k >= 1; --k) {
        // S1(n,k) = S1(n-1,k-1) + (n-1) S1(n-1,k)
        mpz_mul_ui(row[k].get_mpz_t(), row[k].get_mpz_t(), static_cast<unsigned long>(n - 1));
        row[k] += row[k - 1];
    }
    row[0] = 0;
}

// sum_k row[k] * 2^(n-k), and the even-k / odd-k partial sums.
struct WeightedSums {
    BigNat total, even, odd;
};

WeightedSums weighted_sums(const std::vector<BigNat>& row) {
    const size_t n = row.size() - 1;
    WeightedSums s{0, 0, 0};
    BigNat p2 = 1;  // 2^(n-k), k running from n down to 0
    for (size_t k = n + 1; k-- > 0;) {
        BigNat term = row[k] * p2;
        s.total += term;
        ((k % 2 == 0) ? s.even : s.odd) += term;
        p2 <<= 1;
    }
    return s;
}

}  // namespace

BigNat stirling1_unsigned(uint64_t n, uint64_t k) {
    if (k > n) throw std::invalid_argument("stirling1_unsigned requires k <= n");
    std::vector<BigNat> row{1};  // row for n = 0
    for (uint64_t m = 1; m <= n; ++m) advance_row(row, m);
    return row[k];
}

StirlingTable::StirlingTable(uint32_t n_max) : n_max_(n_max) {
    rows_.reserve(n_max + 1);
    std::vector<BigNat> row{1};
    rows_.push_back(row);
    for (uint64_t m = 1; m <= n_max; ++m) {
        advance_row(row, m);
        rows_.push_back(row);
    }
}

const BigNat& StirlingTable::s1(uint32_t n, uint32_t k) const {
    if (n > n_max_ || k > n) throw std::invalid_argument("StirlingTable index out of range");
    return rows_[n][k];
}

Rational chi_eval(uint32_t n, const Rational& x) {
    check_rank(n);
    Rational acc = x;
    Rational term = x;
    for (uint32_t i = 1; i < n; ++i) {
        term += 1;
        acc *= term;
    }
    return acc;
}

BigNat double_factorial_odd(uint64_t n) {
    if (n == 0) return 1;
    return odd_range_product(1, 2 * n - 1);
}

BigNat group_order_b(uint32_t n) {
    check_rank(n);
    BigNat f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f << n;
}

BigNat count_all_negative_b(uint32_t n) {
    check_rank(n);
    const BigNat closed = double_factorial_odd(n);
    if (n <= kStirlingCrossCheckBound) {
        std::vector<BigNat> row{1};
        for (uint64_t m = 1; m <= n; ++m) advance_row(row, m);
        const BigNat sum = weighted_sums(row).total;
        if (sum != closed)
            throw std::logic_error("two-route mismatch: Stirling sum != (2n-1)!! at n = " + std::to_string(n));
    }
    return closed;
}

BigNat count_all_positive_b(uint32_t n) { return count_all_negative_b(n); }

BigNat count_all_negative_d(uint32_t n) {
    check_rank(n);
    const Rational half(1, 2);
    Rational v = chi_eval(n, half) + chi_eval(n, -half);
    v *= Rational(pow2(n - 1));
    if (v.get_den() != 1 || v < 0)
        throw std::logic_error("even-cycle count did not clear denominators at n = " + std::to_string(n));
    return v.get_num();
}

BigNat count_all_negative_coset(uint32_t n) {
    check_rank(n);
    const Rational half(1, 2);
    Rational v = chi_eval(n, half) - chi_eval(n, -half);
    v *= Rational(pow2(n - 1));
    if (v.get_den() != 1 || v < 0)
        throw std::logic_error("odd-cycle count did not clear denominators at n = " + std::to_string(n));
    return v.get_num();
}

Rational proportion_p(uint32_t n) {
    check_rank(n);
    Rational p(double_factorial_odd(n), group_order_b(n));
    p.canonicalize();
    return p;
}

Rational proportion_p_plus(uint32_t n) {
    check_rank(n);
    Rational p = proportion_p(n) * Rational(2 * n - 2, 2 * n - 1);
    p.canonicalize();
    return p;
}

Rational proportion_p_minus(uint32_t n) {
    check_rank(n);
    Rational p = proportion_p(n) * Rational(2 * n, 2 * n - 1);
    p.canonicalize();
    return p;
}

std::vector<CountsRow> counts_table(uint32_t max_n) {
    check_rank(max_n);
    std::vector<CountsRow> out;
    out.reserve(max_n);
    std::vector<BigNat> row{1};
    BigNat dfo = 1;       // (2n-1)!!
    BigNat dfo_prev = 1;  // (2n-3)!!, used for the D / coset closed forms
    for (uint32_t n = 1; n <= max_n; ++n) {
        advance_row(row, n);
        dfo_prev.swap(dfo);
        dfo = dfo_prev * (2 * n - 1);

        CountsRow r;
        r.n = n;
        r.neg_b = dfo;
        // 2^(n-1)(chi(1/2) +- chi(-1/2)) simplifies to ((2n-1)!! -+ (2n-3)!!)/2
        // under the (-1)!! = 1 convention, which also makes n = 1 come out 0 / 1.
        r.neg_d = (dfo - dfo_prev) / 2;
        r.neg_coset = (dfo + dfo_prev) / 2;
        r.pos_b = dfo;

        if (n <= kStirlingCrossCheckBound) {
            const WeightedSums s = weighted_sums(row);
            if (s.total != r.neg_b || s.even != r.neg_d || s.odd != r.neg_coset)
                throw std::logic_error("two-route mismatch in counts_table at n = " + std::to_string(n));
        }

        r.p = Rational(dfo, group_order_b(n));
        r.p.canonicalize();
        r.p_plus = r.p * Rational(2 * n - 2, 2 * n - 1);
        r.p_plus.canonicalize();
        r.p_minus = r.p * Rational(2 * n, 2 * n - 1);
        r.p_minus.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

uint32_t verify_stirling_routes(uint32_t max_n) {
    check_rank(max_n);
    std::vector<BigNat> row{1};
    BigNat dfo = 1, dfo_prev = 1, fact = 1;
    for (uint32_t n = 1; n <= max_n; ++n) {
        advance_row(row, n);
        dfo_prev.swap(dfo);
        dfo = dfo_prev * (2 * n - 1);
        fact *= n;

        const WeightedSums s = weighted_sums(row);
        if (s.total != dfo) return n;
        if (s.even != (dfo - dfo_prev) / 2 || s.odd != (dfo + dfo_prev) / 2) return n;
        if (s.even + s.odd != s.total) return n;

        BigNat row_sum = 0;
        for (const auto& v : row) row_sum += v;
        if (row_sum != fact) return n;
    }
    return 0;
}

}  // namespace negcyc
