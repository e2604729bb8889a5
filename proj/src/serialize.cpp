#include "serialize.hpp"

#include <charconv>
#include <cstdio>

namespace negcyc {

namespace {

constexpr unsigned kTableDecimals = 15;
constexpr unsigned kBoundDecimals = 20;

std::string q(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string double_str(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string estimate_csv_header() {
    return "selector,n,trials,hits,estimate,exact,ci_low,ci_high,seed,z_score";
}

std::string estimate_csv_row(const EstimateReport& r) {
    std::string row = selector_str(r.selector);
    row += "," + std::to_string(r.n);
    row += "," + std::to_string(r.trials);
    row += "," + std::to_string(r.hits);
    row += "," + rational_str(r.estimate);
    row += "," + rational_str(r.exact);
    row += "," + double_str(r.ci_low);
    row += "," + double_str(r.ci_high);
    row += "," + std::to_string(r.seed);
    row += "," + (r.degenerate ? "nan" : double_str(r.z_score));
    return row;
}

std::string estimate_json(const EstimateReport& r) {
    std::string j = "{";
    j += q("selector") + ":" + q(selector_str(r.selector));
    j += "," + q("n") + ":" + std::to_string(r.n);
    j += "," + q("trials") + ":" + std::to_string(r.trials);
    j += "," + q("hits") + ":" + std::to_string(r.hits);
    j += "," + q("estimate") + ":" + q(rational_str(r.estimate));
    j += "," + q("exact") + ":" + q(rational_str(r.exact));
    j += "," + q("ci_low") + ":" + double_str(r.ci_low);
    j += "," + q("ci_high") + ":" + double_str(r.ci_high);
    j += "," + q("seed") + ":" + std::to_string(r.seed);
    j += "," + q("z_score") + ":" + (r.degenerate ? "null" : double_str(r.z_score));
    j += "}";
    return j;
}

std::string bound_csv_header() {
    return "n,p,p_dec,h_lo,h_hi,ratio_lo,ratio_hi,verdict,precision_bits";
}

std::string bound_csv_row(const BoundReport& r, const RealEnclosure& ratio) {
    std::string row = std::to_string(r.n);
    row += "," + rational_str(r.p_value);
    row += "," + decimal_round(r.p_value, kBoundDecimals);
    row += "," + decimal_directed(r.h.lo, kBoundDecimals, false);
    row += "," + decimal_directed(r.h.hi, kBoundDecimals, true);
    row += "," + decimal_directed(ratio.lo, kBoundDecimals, false);
    row += "," + decimal_directed(ratio.hi, kBoundDecimals, true);
    row += "," + std::string(verdict_str(r.verdict));
    row += "," + std::to_string(r.precision_bits);
    return row;
}

std::string bound_json(const BoundReport& r, const RealEnclosure& ratio) {
    std::string j = "{";
    j += q("n") + ":" + std::to_string(r.n);
    j += "," + q("p") + ":" + q(rational_str(r.p_value));
    j += "," + q("p_dec") + ":" + q(decimal_round(r.p_value, kBoundDecimals));
    j += "," + q("h_lo") + ":" + q(decimal_directed(r.h.lo, kBoundDecimals, false));
    j += "," + q("h_hi") + ":" + q(decimal_directed(r.h.hi, kBoundDecimals, true));
    j += "," + q("ratio_lo") + ":" + q(decimal_directed(ratio.lo, kBoundDecimals, false));
    j += "," + q("ratio_hi") + ":" + q(decimal_directed(ratio.hi, kBoundDecimals, true));
    j += "," + q("verdict") + ":" + q(verdict_str(r.verdict));
    j += "," + q("precision_bits") + ":" + std::to_string(r.precision_bits);
    j += "}";
    return j;
}

std::string table_csv_header() {
    return "n,count_neg_B,count_neg_D,count_neg_coset,count_pos_B,p,p_plus,p_minus,"
           "p_dec,p_plus_dec,p_minus_dec";
}

std::string table_csv_row(const CountsRow& r) {
    std::string row = std::to_string(r.n);
    row += "," + r.neg_b.get_str();
    row += "," + r.neg_d.get_str();
    row += "," + r.neg_coset.get_str();
    row += "," + r.pos_b.get_str();
    row += "," + rational_str(r.p);
    row += "," + rational_str(r.p_plus);
    row += "," + rational_str(r.p_minus);
    row += "," + decimal_round(r.p, kTableDecimals);
    row += "," + decimal_round(r.p_plus, kTableDecimals);
    row += "," + decimal_round(r.p_minus, kTableDecimals);
    return row;
}

std::string table_json(const CountsRow& r) {
    std::string j = "{";
    j += q("n") + ":" + std::to_string(r.n);
    j += "," + q("count_neg_B") + ":" + q(r.neg_b.get_str());
    j += "," + q("count_neg_D") + ":" + q(r.neg_d.get_str());
    j += "," + q("count_neg_coset") + ":" + q(r.neg_coset.get_str());
    j += "," + q("count_pos_B") + ":" + q(r.pos_b.get_str());
    j += "," + q("p") + ":" + q(rational_str(r.p));
    j += "," + q("p_plus") + ":" + q(rational_str(r.p_plus));
    j += "," + q("p_minus") + ":" + q(rational_str(r.p_minus));
    j += "," + q("p_dec") + ":" + q(decimal_round(r.p, kTableDecimals));
    j += "," + q("p_plus_dec") + ":" + q(decimal_round(r.p_plus, kTableDecimals));
    j += "," + q("p_minus_dec") + ":" + q(decimal_round(r.p_minus, kTableDecimals));
    j += "}";
    return j;
}

std::string counts_json(uint32_t n, const BruteCounts& c) {
    std::string j = "{";
    j += q("n") + ":" + std::to_string(n);
    j += "," + q("neg_B") + ":" + q(c.neg_b.get_str());
    j += "," + q("neg_D") + ":" + q(c.neg_d.get_str());
    j += "," + q("neg_coset") + ":" + q(c.neg_coset.get_str());
    j += "," + q("pos_B") + ":" + q(c.pos_b.get_str());
    j += "}";
    return j;
}

}  // namespace negcyc
