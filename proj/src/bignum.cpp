#include "bignum.hpp"

namespace negcyc {

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num, den = 1;
    const std::string num_part(text.substr(0, slash));
    if (num_part.empty() || mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0)
        throw std::invalid_argument("invalid rational numerator: '" + num_part + "'");
    if (slash != std::string_view::npos) {
        const std::string den_part(text.substr(slash + 1));
        if (den_part.empty() || mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0)
            throw std::invalid_argument("invalid rational denominator: '" + den_part + "'");
        if (den == 0) throw std::invalid_argument("rational denominator is zero");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

std::string format_scaled(const BigInt& scaled, unsigned frac_digits, bool trim) {
    const bool neg = scaled < 0;
    std::string digits = BigInt(abs(scaled)).get_str();
    if (digits.size() <= frac_digits) digits.insert(0, frac_digits + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - frac_digits);
    std::string frac = digits.substr(digits.size() - frac_digits);
    if (frac.empty()) frac = "0";
    if (trim) {
        auto last = frac.find_last_not_of('0');
        frac.erase(last == std::string::npos ? 1 : std::max<size_t>(last + 1, 1));
    }
    out += "." + frac;
    if (neg && (out.find_first_not_of("0.") != std::string::npos)) out.insert(0, 1, '-');
    return out;
}

}  // namespace

std::string decimal_round(const Rational& q, unsigned frac_digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
    // round half away from zero: floor((2*|num|*scale/den + 1) / 2), sign restored
    BigInt num = abs(q.get_num()) * scale * 2 + q.get_den();
    BigInt r = num / (q.get_den() * 2);
    if (q < 0) r = -r;
    return format_scaled(r, frac_digits, /*trim=*/true);
}

std::string decimal_directed(const Rational& q, unsigned frac_digits, bool round_up) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
    BigInt r;
    if (round_up)
        mpz_cdiv_q(r.get_mpz_t(), BigInt(q.get_num() * scale).get_mpz_t(), q.get_den().get_mpz_t());
    else
        mpz_fdiv_q(r.get_mpz_t(), BigInt(q.get_num() * scale).get_mpz_t(), q.get_den().get_mpz_t());
    return format_scaled(r, frac_digits, /*trim=*/false);
}

}  // namespace negcyc
