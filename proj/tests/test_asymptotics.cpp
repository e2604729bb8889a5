#include <doctest.h>

#include <string>

#include "asymptotics.hpp"
#include "counting.hpp"
#include "enclosure.hpp"
#include "rng.hpp"

using namespace negcyc;

namespace {

Rational dec(const std::string& digits, unsigned frac) {
    BigInt num(digits);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// `digits` is a truncation of a reference value v, so v lies in
// [t, t + 10^-frac); the enclosure must land inside that bracket.
bool pins(const RealEnclosure& enc, const std::string& digits, unsigned frac) {
    const Rational t = dec(digits, frac);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    const Rational ulp(BigInt(1), den);
    return t <= enc.lo && enc.hi < t + ulp;
}

// arctan(1/x) * 10^scale_digits with all divisions floored; the returned
// error bound counts one lost unit per division.
struct Approx {
    BigInt value;
    uint64_t error;
};

Approx atan_inv(unsigned long x, unsigned scale_digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, scale_digits);
    BigInt term = scale / x;
    const BigInt x2 = BigInt(x) * x;
    BigInt total = 0;
    uint64_t divisions = 1;
    unsigned long k = 0;
    int sign = 1;
    while (term != 0) {
        BigInt contrib = term / (2 * k + 1);
        total += sign > 0 ? contrib : -contrib;
        term /= x2;
        divisions += 2;
        ++k;
        sign = -sign;
    }
    return {total, divisions + 1};  // +1 for the dropped tail term
}

// pi * 10^scale_digits bracketed from two arctan identities.
void pi_bracket(unsigned scale_digits, BigInt& lo, BigInt& hi) {
    const Approx a5 = atan_inv(5, scale_digits);
    const Approx a239 = atan_inv(239, scale_digits);
    BigInt machin = 16 * a5.value - 4 * a239.value;
    const uint64_t machin_err = 16 * a5.error + 4 * a239.error;

    const Approx a2 = atan_inv(2, scale_digits);
    const Approx a3 = atan_inv(3, scale_digits);
    BigInt hutton = 4 * (a2.value + a3.value);
    const uint64_t hutton_err = 4 * (a2.error + a3.error);

    // the two brackets must overlap; intersect them
    lo = std::max(machin - machin_err, hutton - hutton_err);
    hi = std::min(machin + machin_err, hutton + hutton_err);
    REQUIRE(lo <= hi);
}

void e_bracket(unsigned scale_digits, BigInt& lo, BigInt& hi) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, scale_digits);
    BigInt total = scale, term = scale;
    uint64_t divisions = 0;
    unsigned long k = 0;
    while (term != 0) {
        ++k;
        term /= k;
        total += term;
        ++divisions;
    }
    lo = total - divisions;
    hi = total + divisions + 2;  // dropped tail is below twice the last term
}

}  // namespace

TEST_CASE("stored pi and e digits bracket independently recomputed values") {
    const unsigned guard = 20;
    const unsigned scale_digits = kConstantFracDigits + guard;
    BigInt guard_scale;
    mpz_ui_pow_ui(guard_scale.get_mpz_t(), 10, guard);

    BigInt lo, hi;
    pi_bracket(scale_digits, lo, hi);
    const BigInt stored_pi(kPiDigits);
    REQUIRE(stored_pi * guard_scale <= lo);
    REQUIRE(hi <= (stored_pi + 1) * guard_scale);

    e_bracket(scale_digits, lo, hi);
    const BigInt stored_e(kEDigits);
    REQUIRE(stored_e * guard_scale <= lo);
    REQUIRE(hi <= (stored_e + 1) * guard_scale);
}

TEST_CASE("constant intervals round outward") {
    for (unsigned prec : {16u, 64u, 128u, 1024u}) {
        const RealEnclosure pi = pi_interval(prec).to_enclosure();
        CHECK(pi.lo < pi.hi);
        // stays on the correct side of a 19-digit bracket of pi at any precision
        CHECK(pi.lo < dec("31415926535897932385", 19));
        CHECK(pi.hi > dec("31415926535897932384", 19));
        Rational budget(1);
        mpq_div_2exp(budget.get_mpq_t(), budget.get_mpq_t(), prec - 4);
        CHECK(pi.width() < budget);
    }
}

TEST_CASE("dyadic directed rounding brackets the exact value") {
    Xoshiro256ss rng(314);
    for (int trial = 0; trial < 300; ++trial) {
        const long num = static_cast<long>(rng.below_inclusive(2000)) - 1000;
        const long den = 1 + static_cast<long>(rng.below_inclusive(999));
        Rational q(num, den);
        q.canonicalize();
        const unsigned prec = 8 + static_cast<unsigned>(rng.below_inclusive(120));
        const Dyadic lo = Dyadic::from_rational(q, prec, Round::down);
        const Dyadic hi = Dyadic::from_rational(q, prec, Round::up);
        REQUIRE(lo.to_rational() <= q);
        REQUIRE(q <= hi.to_rational());
    }
}

TEST_CASE("interval arithmetic never contradicts exact rational arithmetic") {
    Xoshiro256ss rng(2718);
    for (int trial = 0; trial < 250; ++trial) {
        auto random_rational = [&rng] {
            const long num = static_cast<long>(rng.below_inclusive(4000)) - 2000;
            const long den = 1 + static_cast<long>(rng.below_inclusive(500));
            Rational q(num, den);
            q.canonicalize();
            return q;
        };
        const Rational a = random_rational();
        const Rational b = random_rational();
        const unsigned prec = 16 + static_cast<unsigned>(rng.below_inclusive(100));
        const Interval ia = Interval::from_rational(a, prec);
        const Interval ib = Interval::from_rational(b, prec);

        REQUIRE(Interval::add(ia, ib, prec).to_enclosure().contains(a + b));
        REQUIRE(Interval::sub(ia, ib, prec).to_enclosure().contains(a - b));
        REQUIRE(Interval::mul(ia, ib, prec).to_enclosure().contains(a * b));
        if (b != 0 && Interval::from_rational(b, prec).compare_to(Rational(0)) != 0)
            REQUIRE(Interval::div(ia, ib, prec).to_enclosure().contains(a / b));
        if (a >= 0) {
            const RealEnclosure sq = Interval::sqrt(ia, prec).to_enclosure();
            REQUIRE(sq.lo * sq.lo <= a);
            REQUIRE(sq.hi * sq.hi >= a);
        }
        // interval comparison agreeing with exact order
        const int cmp = Interval::compare(ia, ib);
        if (cmp < 0) REQUIRE(a < b);
        if (cmp > 0) REQUIRE(a > b);
    }
}

TEST_CASE("h enclosure frozen references") {
    const RealEnclosure h1 = h_enclosure(1, 96);
    CHECK(pins(h1, "58983456461810884544571942663", 29));
    CHECK(h1.lo > Rational(1, 2));  // excludes 0.5

    const RealEnclosure h100 = h_enclosure(100, 96);
    CHECK(pins(h100, "5644460333584598125330558513", 29));

    const RealEnclosure h1000 = h_enclosure(1000, 96);
    CHECK(pins(h1000, "1784205212703505331407809052", 29));
}

TEST_CASE("h enclosure width contract") {
    for (unsigned prec : {16u, 40u, 128u, 512u, 2048u, 4096u}) {
        for (uint64_t n : {uint64_t{1}, uint64_t{7}, uint64_t{5000}}) {
            const RealEnclosure h = h_enclosure(n, prec);
            Rational budget = h.lo;
            mpq_div_2exp(budget.get_mpq_t(), budget.get_mpq_t(), prec);
            REQUIRE(h.width() <= budget);
        }
    }
    // each extra requested bit at least halves the guaranteed budget; widths
    // must track it
    const Rational w_64 = h_enclosure(3, 64).width();
    const Rational w_128 = h_enclosure(3, 128).width();
    CHECK(w_128 * pow2(32) < w_64);
    CHECK_THROWS_AS(h_enclosure(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(h_enclosure(0, 128), std::invalid_argument);
    // beyond the stored constant width the widening failure must surface,
    // never a silently loose enclosure
    CHECK_THROWS_AS(h_enclosure(3, 8192), std::logic_error);
}

TEST_CASE("certified upper bound") {
    for (uint64_t n : {uint64_t{1}, uint64_t{2}, uint64_t{10}, uint64_t{321}, uint64_t{1000}}) {
        const BoundReport r = certify_upper_bound(n);
        REQUIRE(r.verdict == Verdict::certified_true);
        REQUIRE(r.precision_bits == kDefaultPrecisionBits);
        REQUIRE(r.p_value < r.h.lo);  // report invariant
    }
    CHECK(certify_upper_bound(1).p_value == Rational(1, 2));
    CHECK(certify_upper_bound(4).p_value == proportion_p(4));
    CHECK_THROWS_AS(certify_upper_bound(0), std::invalid_argument);
}

TEST_CASE("ratio p/h frozen references") {
    const RealEnclosure r1 = ratio_p_over_h(1, 128);
    CHECK(pins(r1, "847695319998290273925210535510", 30));
    CHECK(r1.width() < Rational(1, 1000000));
    CHECK(r1.hi < 1);

    const RealEnclosure r100 = ratio_p_over_h(100, 128);
    CHECK(r100.lo > dec("998", 3));
    CHECK(r100.hi < 1);
    CHECK(pins(r100, "998297014755908226412746331", 27));

    const RealEnclosure r1000 = ratio_p_over_h(1000, 128);
    CHECK(pins(r1000, "999829561019154026744151516", 27));
    CHECK(r1000.lo > r100.hi);  // approach to 1 is monotone along these points
}

TEST_CASE("stirling factorial bounds") {
    // n = 1 endpoints: sqrt(2 pi)/e and (1+1/11) sqrt(2 pi)/e
    {
        const unsigned prec = 128;
        const Interval root =
            Interval::sqrt(Interval::mul(pi_interval(prec), Interval::exact_ui(2), prec), prec);
        const Interval lower = Interval::div(root, e_interval(prec), prec);
        const RealEnclosure lo_enc = lower.to_enclosure();
        CHECK(pins(lo_enc, "922137008895789116879151747751", 30));
        CHECK(lo_enc.hi < 1);
        const RealEnclosure hi_enc =
            Interval::mul(lower, Interval::from_ratio(BigInt(12), BigInt(11), prec), prec).to_enclosure();
        CHECK(pins(hi_enc, "1005967646068133582049983724819", 30));
        CHECK(hi_enc.lo > 1);
    }
    for (uint64_t n = 1; n <= 30; ++n) REQUIRE(check_stirling_bounds(n) == CheckResult::certified_true);
    CHECK(check_stirling_bounds(100) == CheckResult::certified_true);
    CHECK(check_stirling_bounds(1000) == CheckResult::certified_true);
    CHECK_THROWS_AS(check_stirling_bounds(0), std::invalid_argument);
}

TEST_CASE("log grid") {
    const std::vector<uint64_t> grid = log_grid(1000000, 13);
    const std::vector<uint64_t> expected{1,     3,     10,    32,     100,    316,    1000,
                                         3162,  10000, 31623, 100000, 316228, 1000000};
    CHECK(grid == expected);
    CHECK(log_grid(1, 5) == std::vector<uint64_t>{1});
    CHECK(log_grid(10, 1) == std::vector<uint64_t>{10});
    CHECK(log_grid(100, 3) == std::vector<uint64_t>{1, 10, 100});
    CHECK_THROWS_AS(log_grid(0, 5), std::invalid_argument);
}
