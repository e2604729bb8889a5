#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "bignum.hpp"
#include "signed_perm.hpp"

namespace negcyc {

// Exhaustive ground truth for small ranks. Enumeration order is
// deterministic: permutations lexicographically, crossed with sign masks
// counting 0..2^n-1 (bit i set = position i+1 negative), so runs are
// resumable and partitionable by mask range.

inline constexpr uint32_t kEnumCap = 8;   // 2^8 * 8! ~ 1.03e7 elements
inline constexpr uint32_t kLemmaCap = 6;  // fiber-level checks
inline constexpr uint32_t kFlipCap = 5;   // explicit bijection checks

// Yields every element of W(B_n) exactly once. Throws std::out_of_range
// above the cap, the message naming the cap and the element count.
void enumerate_b(uint32_t n, const std::function<void(const SignedPermutation&)>& visit);

struct BruteCounts {
    BigNat neg_b, neg_d, neg_coset, pos_b;
    BigNat total;  // elements visited; must come out as 2^n n!
};

// Counts by full enumeration, streaming (no materialized element list).
// Work is partitioned by sign-mask ranges across `threads` workers and the
// per-worker tallies merge in worker order; 0 picks the hardware count.
BruteCounts brute_counts(uint32_t n, unsigned threads = 0);

// The 2^n preimages of a permutation x under the projection, bucketed by
// sign vector. Counts sum to 2^n and there are at most 2^k distinct keys.
struct FiberPartition {
    Permutation base;
    uint32_t k = 0;  // cycles of base
    std::map<SignVector, uint64_t> buckets;
};

FiberPartition fiber_partition(const Permutation& x);

// Checks, for every x in S_n, that the fiber over x splits into exactly 2^k
// sign classes of 2^(n-k) elements each (k = number of cycles of x). On
// failure, `detail` (when given) receives the first failing fiber and class.
bool verify_lemma(uint32_t n, std::string* detail = nullptr);

// Checks that left-multiplying by one chosen transposition pair per negative
// sign position maps the all-positive class of each fiber bijectively onto
// every other class.
bool verify_flip_bijection(uint32_t n, std::string* detail = nullptr);

}  // namespace negcyc
