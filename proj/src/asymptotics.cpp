#include "asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include "counting.hpp"

namespace negcyc {

namespace {

void check_rank(uint64_t n) {
    if (n == 0) throw std::invalid_argument("rank 0 is rejected (group defined for n >= 1)");
}

Interval h_interval(uint64_t n, unsigned working) {
    const Interval pi = pi_interval(working);
    const Interval num =
        Interval::from_ratio(BigInt(22 * n + 1), BigInt(22 * n), working);  // 1 + 1/(22n)
    const Interval root = Interval::sqrt(Interval::mul(pi, Interval::exact(BigInt(n)), working), working);
    return Interval::div(num, root, working);
}

Interval p_interval(const ProportionParts& parts, unsigned working) {
    return Interval::from_ratio(parts.num, parts.den, working);
}

}  // namespace

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::certified_true: return "certified_true";
        case Verdict::certified_false: return "certified_false";
        default: return "undecided";
    }
}

ProportionParts proportion_parts(uint64_t n) {
    check_rank(n);
    ProportionParts parts;
    parts.num = double_factorial_odd(n);
    mpz_fac_ui(parts.den.get_mpz_t(), static_cast<unsigned long>(n));
    parts.den <<= static_cast<mp_bitcnt_t>(n);
    return parts;
}

RealEnclosure h_enclosure(uint64_t n, unsigned precision_bits) {
    check_rank(n);
    if (precision_bits < 16) throw std::invalid_argument("h_enclosure requires precision_bits >= 16");
    // widen the working precision until the requested relative width holds
    for (unsigned guard = 32; guard <= 512; guard *= 2) {
        const Interval h = h_interval(n, precision_bits + guard);
        const RealEnclosure enc = h.to_enclosure();
        Rational target = enc.lo;
        mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), precision_bits);
        if (enc.width() <= target) return enc;
    }
    throw std::logic_error("h_enclosure widening failure at n = " + std::to_string(n) +
                           ", precision " + std::to_string(precision_bits));
}

BoundReport certify_upper_bound(uint64_t n) {
    check_rank(n);
    BoundReport report;
    report.n = n;
    const ProportionParts parts = proportion_parts(n);
    report.p_value = Rational(parts.num, parts.den);
    report.p_value.canonicalize();

    // squared right-hand side (1 + 1/(22n))^2, exact
    const Rational rhs = Rational(BigInt(22 * n + 1) * BigInt(22 * n + 1), BigInt(22 * n) * BigInt(22 * n));

    for (unsigned prec = kDefaultPrecisionBits; prec <= kMaxPrecisionBits; prec *= 2) {
        const Interval p = p_interval(parts, prec);
        const Interval lhs = Interval::mul(Interval::mul(pi_interval(prec), Interval::exact(BigInt(n)), prec),
                                           Interval::pow_ui(p, 2, prec), prec);
        const int c = lhs.compare_to(rhs);
        report.precision_bits = prec;
        report.h = h_enclosure(n, prec);
        if (c < 0 && report.p_value < report.h.lo) {
            report.verdict = Verdict::certified_true;
            return report;
        }
        if (c > 0 && report.p_value > report.h.hi) {
            report.verdict = Verdict::certified_false;
            return report;
        }
    }
    report.verdict = Verdict::undecided;
    report.precision_bits = kMaxPrecisionBits;
    return report;
}

RealEnclosure ratio_p_over_h(uint64_t n, unsigned precision_bits) {
    check_rank(n);
    const unsigned working = precision_bits + 32;
    const Interval p = p_interval(proportion_parts(n), working);
    const Interval ratio = Interval::div(p, h_interval(n, working), working);
    return ratio.to_enclosure();
}

CheckResult check_stirling_bounds(uint64_t n, unsigned precision_bits) {
    check_rank(n);
    const unsigned log2n = 64 - static_cast<unsigned>(__builtin_clzll(n));
    const uint64_t scaled = n * log2n / 2 + 64;
    unsigned working = static_cast<unsigned>(std::max<uint64_t>(precision_bits, scaled));

    BigNat fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    const Rational fact_q(fact);

    BigNat n_pow_n;
    mpz_ui_pow_ui(n_pow_n.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));

    for (int attempt = 0; attempt < 3; ++attempt, working *= 2) {
        const Interval e_pow = Interval::pow_ui(e_interval(working), n, working);
        const Interval core = Interval::div(Interval::exact(n_pow_n), e_pow, working);  // (n/e)^n
        const Interval root = Interval::sqrt(
            Interval::mul(pi_interval(working), Interval::exact(BigInt(2 * n)), working), working);
        const Interval lower = Interval::mul(root, core, working);
        const Interval upper = Interval::mul(
            lower, Interval::from_ratio(BigInt(11 * n + 1), BigInt(11 * n), working), working);

        const int lower_cmp = lower.compare_to(fact_q);  // want lower < n!
        const int upper_cmp = upper.compare_to(fact_q);  // want n! < upper
        if (lower_cmp < 0 && upper_cmp > 0) return CheckResult::certified_true;
        if (lower_cmp > 0 || upper_cmp < 0) return CheckResult::certified_false;
    }
    return CheckResult::undecided;
}

std::vector<uint64_t> log_grid(uint64_t max_n, unsigned steps) {
    if (max_n == 0 || steps == 0) throw std::invalid_argument("log_grid requires max_n >= 1 and steps >= 1");
    std::vector<uint64_t> grid;
    if (steps == 1) return {max_n};
    if (max_n == 1) return {1};
    const unsigned degree = steps - 1;
    for (unsigned i = 0; i < steps; ++i) {
        BigNat v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(max_n), i);
        BigNat r;
        mpz_root(r.get_mpz_t(), v.get_mpz_t(), degree);
        // round to nearest: bump when (r + 1/2)^degree <= v
        BigNat half_up = 2 * r + 1;
        BigNat lhs;
        mpz_pow_ui(lhs.get_mpz_t(), half_up.get_mpz_t(), degree);
        if (lhs <= (v << degree)) r += 1;
        grid.push_back(r.get_ui());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace negcyc
