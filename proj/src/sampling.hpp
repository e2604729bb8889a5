#pragma once

#include <cstdint>

#include "bignum.hpp"
#include "rng.hpp"
#include "signed_perm.hpp"

namespace negcyc {

enum class GroupSelector { B, D, coset };  // reporting order is fixed as listed

const char* selector_str(GroupSelector s);
GroupSelector parse_selector(std::string_view text);

// Uniform element of W(B_n): unbiased Fisher-Yates shuffle plus n fair sign
// bits drawn as ceil(n/64) words, bit i giving the sign of position i+1.
SignedPermutation sample_b(uint32_t n, Xoshiro256ss& rng);

// Uniform element of W(D_n): same draws as sample_b, but the last sign is
// replaced so the window sign product is +1 (even negative-cycle count).
SignedPermutation sample_d(uint32_t n, Xoshiro256ss& rng);

// Uniform element of the nontrivial coset: sign product forced to -1.
SignedPermutation sample_coset(uint32_t n, Xoshiro256ss& rng);

struct EstimateReport {
    GroupSelector selector = GroupSelector::B;
    uint32_t n = 0;
    uint64_t trials = 0;
    uint64_t hits = 0;
    Rational estimate;  // hits / trials
    Rational exact;     // from the counting module
    double ci_low = 0, ci_high = 0;  // 95% Wilson interval
    uint64_t seed = 0;
    double z_score = 0;
    // exact is 0 or 1 and the estimate disagrees; z_score is meaningless then
    bool degenerate = false;
};

// Number of independent RNG streams a run is split into. Fixed regardless
// of how many threads execute, so a report depends only on (selector, n,
// trials, seed). Stream k is seeded by the k-th output of a splitmix64
// chain over the master seed.
inline constexpr unsigned kSampleStreams = 16;

// Draws `trials` elements from the selected set, counts only-negative-cycle
// elements, and fills the report including the exact reference proportion.
// `threads` = 0 picks the hardware count; the result is identical for any
// value.
EstimateReport estimate_proportion(GroupSelector selector, uint32_t n, uint64_t trials, uint64_t seed,
                                   unsigned threads = 0);

}  // namespace negcyc
