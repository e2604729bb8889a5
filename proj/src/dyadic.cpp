#include "dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace negcyc {

namespace {

// mant >> bits with directed rounding (shift may be applied to negatives;
// fdiv shifts toward -inf, cdiv toward +inf).
BigInt shift_right(const BigInt& m, uint64_t bits, Round dir) {
    BigInt r;
    if (dir == Round::down)
        mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    else
        mpz_cdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

}  // namespace

Dyadic Dyadic::rounded(unsigned prec, Round dir) const {
    if (prec == 0) throw std::invalid_argument("dyadic precision must be positive");
    const size_t bits = mant_bits();
    if (mant_ == 0 || bits <= prec) return *this;
    const uint64_t drop = bits - prec;
    return Dyadic(shift_right(mant_, drop, dir), exp_ + static_cast<int64_t>(drop));
}

Rational Dyadic::to_rational() const {
    Rational q(mant_);
    if (exp_ >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exp_));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp_));
    }
    return q;
}

Dyadic Dyadic::from_ratio(const BigInt& num, const BigInt& den, unsigned prec, Round dir) {
    if (den == 0) throw std::invalid_argument("division by zero");
    if (den < 0) return from_ratio(-num, -den, prec, dir);
    if (num == 0) return Dyadic();
    // scale numerator so the quotient carries prec + guard significant bits
    const int64_t nbits = static_cast<int64_t>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const int64_t dbits = static_cast<int64_t>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const int64_t shift = std::max<int64_t>(0, dbits - nbits + static_cast<int64_t>(prec) + 8);
    BigInt scaled = num << static_cast<mp_bitcnt_t>(shift);
    BigInt q;
    if (dir == Round::down)
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    else
        mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return Dyadic(q, -shift).rounded(prec, dir);
}

Dyadic Dyadic::from_rational(const Rational& q, unsigned prec, Round dir) {
    return from_ratio(q.get_num(), q.get_den(), prec, dir);
}

Dyadic Dyadic::add(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
    if (a.is_zero()) return b.rounded(prec, dir);
    if (b.is_zero()) return a.rounded(prec, dir);
    const Dyadic* lo = &a;
    const Dyadic* hi = &b;
    if (lo->exp_ > hi->exp_) std::swap(lo, hi);
    const int64_t gap = hi->exp_ - lo->exp_;
    // far-apart operands: absorbing the small one into one ulp keeps the
    // mantissa bounded; the directed nudge keeps the bound valid
    const int64_t limit = static_cast<int64_t>(prec) + 64 +
                          static_cast<int64_t>(std::max(a.mant_bits(), b.mant_bits()));
    if (gap > limit) {
        BigInt m = hi->mant_ << 1;  // one extra bit of resolution for the nudge
        if (lo->sign() > 0 && dir == Round::up) m += 1;
        if (lo->sign() < 0 && dir == Round::down) m -= 1;
        return Dyadic(m, hi->exp_ - 1).rounded(prec, dir);
    }
    BigInt m = (hi->mant_ << static_cast<mp_bitcnt_t>(gap)) + lo->mant_;
    return Dyadic(m, lo->exp_).rounded(prec, dir);
}

Dyadic Dyadic::sub(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
    return add(a, b.neg(), prec, dir);
}

Dyadic Dyadic::mul(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_).rounded(prec, dir);
}

Dyadic Dyadic::div(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    Dyadic q = from_ratio(a.mant_, b.mant_, prec, dir);
    return Dyadic(q.mant_, q.exp_ + a.exp_ - b.exp_);
}

Dyadic Dyadic::sqrt(const Dyadic& a, unsigned prec, Round dir) {
    if (a.sign() < 0) throw std::invalid_argument("sqrt of negative value");
    if (a.is_zero()) return Dyadic();
    // widen the mantissa so the integer square root carries 2*(prec+8) bits,
    // keeping the total exponent even
    const int64_t want = 2 * (static_cast<int64_t>(prec) + 8);
    int64_t shift = std::max<int64_t>(0, want - static_cast<int64_t>(a.mant_bits()));
    if ((a.exp_ - shift) % 2 != 0) ++shift;
    BigInt m = a.mant_ << static_cast<mp_bitcnt_t>(shift);
    BigInt s, rem;
    mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (dir == Round::up && rem != 0) s += 1;
    return Dyadic(s, (a.exp_ - shift) / 2).rounded(prec, dir);
}

Dyadic Dyadic::pow_ui(const Dyadic& a, uint64_t k, unsigned prec, Round dir) {
    if (a.sign() < 0) throw std::invalid_argument("pow_ui expects a non-negative base");
    if (k == 0) return Dyadic(1);
    Dyadic base = a.rounded(prec, dir);
    Dyadic acc(1);
    bool acc_set = false;
    uint64_t e = k;
    while (e > 0) {
        if (e & 1) {
            acc = acc_set ? mul(acc, base, prec, dir) : base;
            acc_set = true;
        }
        e >>= 1;
        if (e > 0) base = mul(base, base, prec, dir);
    }
    return acc;
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
    const int64_t e = std::min(a.exp_, b.exp_);
    BigInt am = a.mant_ << static_cast<mp_bitcnt_t>(a.exp_ - e);
    BigInt bm = b.mant_ << static_cast<mp_bitcnt_t>(b.exp_ - e);
    return ::cmp(am, bm);
}

int Dyadic::cmp(const Dyadic& a, const Rational& q) {
    // compare mant*2^exp with num/den by cross-multiplication
    BigInt lhs = a.mant_ * q.get_den();
    BigInt rhs = q.get_num();
    if (a.exp_ >= 0)
        lhs <<= static_cast<mp_bitcnt_t>(a.exp_);
    else
        rhs <<= static_cast<mp_bitcnt_t>(-a.exp_);
    return ::cmp(lhs, rhs);
}

}  // namespace negcyc
