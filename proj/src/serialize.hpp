#pragma once

#include <string>

#include "asymptotics.hpp"
#include "counting.hpp"
#include "oracle.hpp"
#include "sampling.hpp"

namespace negcyc {

// Canonical machine-readable renderings. Field names and order are part of
// the tool's contract; big integers and rationals are strings in JSON so
// consumers never round them.

std::string double_str(double v);  // shortest round-trip form
std::string json_escape(const std::string& s);

// selector, n, trials, hits, estimate, exact, ci_low, ci_high, seed, z_score
std::string estimate_csv_header();
std::string estimate_csv_row(const EstimateReport& r);
std::string estimate_json(const EstimateReport& r);

// n, p, p_dec, h_lo, h_hi, ratio_lo, ratio_hi, verdict, precision_bits;
// h and ratio endpoints print with 20 decimal places, rounded outward.
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r, const RealEnclosure& ratio);
std::string bound_json(const BoundReport& r, const RealEnclosure& ratio);

// n, count_neg_B, count_neg_D, count_neg_coset, count_pos_B, p, p_plus,
// p_minus, p_dec, p_plus_dec, p_minus_dec (decimals at 15 places, trimmed).
std::string table_csv_header();
std::string table_csv_row(const CountsRow& r);
std::string table_json(const CountsRow& r);

std::string counts_json(uint32_t n, const BruteCounts& c);

}  // namespace negcyc
