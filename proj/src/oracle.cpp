#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace negcyc {

namespace {

void check_cap(uint32_t n, uint32_t cap, const char* what) {
    if (n == 0) throw std::invalid_argument("rank 0 is rejected (group defined for n >= 1)");
    if (n > cap) {
        BigNat count;
        mpz_fac_ui(count.get_mpz_t(), n);
        count <<= n;
        throw std::out_of_range(std::string(what) + " cap is " + std::to_string(cap) + ": W(B_" +
                                std::to_string(n) + ") has " + count.get_str() + " elements");
    }
}

// Applies `mask` signs to a permutation to form a window.
void window_from(const std::vector<int32_t>& perm, uint32_t mask, std::vector<int32_t>& out) {
    const size_t n = perm.size();
    out.resize(n);
    for (size_t i = 0; i < n; ++i) out[i] = ((mask >> i) & 1) ? -perm[i] : perm[i];
}

// only-negative / only-positive / even-parity classification straight off
// (perm, mask), avoiding any allocation in the enumeration hot loop.
struct Classified {
    bool only_neg, only_pos, in_d;
};

Classified classify(const std::vector<int32_t>& perm, uint32_t mask) {
    const uint32_t n = static_cast<uint32_t>(perm.size());
    uint32_t seen = 0;
    bool only_neg = true, only_pos = true;
    for (uint32_t i = 0; i < n; ++i) {
        if ((seen >> i) & 1) continue;
        uint32_t j = i;
        int sign = 1;
        do {
            seen |= uint32_t{1} << j;
            if ((mask >> j) & 1) sign = -sign;
            j = static_cast<uint32_t>(perm[j]) - 1;
        } while (j != i);
        (sign < 0 ? only_pos : only_neg) = false;
    }
    const bool in_d = (static_cast<uint32_t>(__builtin_popcount(mask)) & 1u) == 0;
    return {only_neg, only_pos, in_d};
}

SignVector sign_vector_of(const std::vector<int32_t>& perm, uint32_t mask) {
    const uint32_t n = static_cast<uint32_t>(perm.size());
    uint32_t seen = 0;
    SignVector sv;
    for (uint32_t i = 0; i < n; ++i) {
        if ((seen >> i) & 1) continue;
        uint32_t j = i;
        int sign = 1;
        do {
            seen |= uint32_t{1} << j;
            if ((mask >> j) & 1) sign = -sign;
            j = static_cast<uint32_t>(perm[j]) - 1;
        } while (j != i);
        sv.push_back(static_cast<int8_t>(sign));
    }
    return sv;
}

std::string perm_str(const std::vector<int32_t>& perm) {
    std::string s = "(";
    for (size_t i = 0; i < perm.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(perm[i]);
    }
    return s + ")";
}

std::string sign_str(const SignVector& sv) {
    std::string s = "(";
    for (size_t i = 0; i < sv.size(); ++i) {
        if (i) s += ',';
        s += sv[i] > 0 ? "+1" : "-1";
    }
    return s + ")";
}

}  // namespace

void enumerate_b(uint32_t n, const std::function<void(const SignedPermutation&)>& visit) {
    check_cap(n, kEnumCap, "enumeration");
    std::vector<int32_t> perm(n), window;
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
            window_from(perm, mask, window);
            visit(SignedPermutation(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

BruteCounts brute_counts(uint32_t n, unsigned threads) {
    check_cap(n, kEnumCap, "enumeration");
    const uint32_t mask_count = uint32_t{1} << n;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, mask_count);

    struct Tally {
        uint64_t neg_b = 0, neg_d = 0, neg_coset = 0, pos_b = 0, total = 0;
    };
    std::vector<Tally> tallies(threads);

    auto run_range = [n, &tallies](unsigned worker, uint32_t mask_lo, uint32_t mask_hi) {
        Tally& t = tallies[worker];
        std::vector<int32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            t.total += mask_hi - mask_lo;
            for (uint32_t mask = mask_lo; mask < mask_hi; ++mask) {
                const Classified c = classify(perm, mask);
                if (c.only_neg) {
                    ++t.neg_b;
                    (c.in_d ? t.neg_d : t.neg_coset) += 1;
                }
                if (c.only_pos) ++t.pos_b;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    if (threads <= 1) {
        run_range(0, 0, mask_count);
    } else {
        std::vector<std::thread> pool;
        const uint32_t step = mask_count / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const uint32_t lo = w * step;
            const uint32_t hi = (w + 1 == threads) ? mask_count : lo + step;
            pool.emplace_back(run_range, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    BruteCounts out{0, 0, 0, 0, 0};
    for (const Tally& t : tallies) {  // merged in worker order
        out.neg_b += t.neg_b;
        out.neg_d += t.neg_d;
        out.neg_coset += t.neg_coset;
        out.pos_b += t.pos_b;
        out.total += t.total;
    }
    return out;
}

FiberPartition fiber_partition(const Permutation& x) {
    const uint32_t n = x.rank();
    check_cap(n, kEnumCap, "fiber partition");
    std::vector<int32_t> perm(x.images.begin(), x.images.end());
    FiberPartition fp;
    fp.base = x;
    {
        uint32_t seen = 0;
        for (uint32_t i = 0; i < n; ++i) {
            if ((seen >> i) & 1) continue;
            ++fp.k;
            uint32_t j = i;
            do {
                seen |= uint32_t{1} << j;
                j = static_cast<uint32_t>(perm[j]) - 1;
            } while (j != i);
        }
    }
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) ++fp.buckets[sign_vector_of(perm, mask)];
    return fp;
}

bool verify_lemma(uint32_t n, std::string* detail) {
    check_cap(n, kLemmaCap, "lemma verification");
    std::vector<int32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Permutation x;
        x.images.assign(perm.begin(), perm.end());
        const FiberPartition fp = fiber_partition(x);

        const uint64_t expected = uint64_t{1} << (n - fp.k);
        if (fp.buckets.size() != (uint64_t{1} << fp.k)) {
            if (detail)
                *detail = "fiber over x = " + perm_str(perm) + " has " + std::to_string(fp.buckets.size()) +
                          " sign classes, expected " + std::to_string(uint64_t{1} << fp.k);
            return false;
        }
        for (const auto& [sv, count] : fp.buckets) {
            if (count != expected) {
                if (detail)
                    *detail = "fiber over x = " + perm_str(perm) + ", class s = " + sign_str(sv) + " has " +
                              std::to_string(count) + " elements, expected " + std::to_string(expected);
                return false;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

bool verify_flip_bijection(uint32_t n, std::string* detail) {
    check_cap(n, kFlipCap, "flip bijection verification");
    std::vector<int32_t> perm(n), window;
    std::iota(perm.begin(), perm.end(), 1);
    do {
        // cycles of x in canonical order; for each, its minimal element is
        // the proof's chosen pair
        std::vector<std::vector<uint32_t>> cycles;
        {
            uint32_t seen = 0;
            for (uint32_t i = 0; i < n; ++i) {
                if ((seen >> i) & 1) continue;
                std::vector<uint32_t> cyc;
                uint32_t j = i;
                do {
                    seen |= uint32_t{1} << j;
                    cyc.push_back(j + 1);
                    j = static_cast<uint32_t>(perm[j]) - 1;
                } while (j != i);
                cycles.push_back(std::move(cyc));
            }
        }
        const uint32_t k = static_cast<uint32_t>(cycles.size());

        // bucket the fiber by sign vector
        std::map<SignVector, std::set<SignedPermutation>> classes;
        for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
            window_from(perm, mask, window);
            classes[sign_vector_of(perm, mask)].insert(SignedPermutation(window));
        }

        const SignVector all_plus(k, int8_t{1});
        const auto& base_class = classes.at(all_plus);

        for (uint32_t sbits = 0; sbits < (uint32_t{1} << k); ++sbits) {
            SignVector target(k, int8_t{1});
            std::vector<uint32_t> flips;
            for (uint32_t j = 0; j < k; ++j)
                if ((sbits >> j) & 1) {
                    target[j] = -1;
                    flips.push_back(cycles[j].front());
                }
            std::set<SignedPermutation> image;
            for (const auto& w : base_class) {
                SignedPermutation mapped = w.flip(flips);
                if (mapped.sign_vector() != target) {
                    if (detail)
                        *detail = "flip image of " + w.str() + " over x = " + perm_str(perm) +
                                  " missed class s = " + sign_str(target);
                    return false;
                }
                image.insert(std::move(mapped));
            }
            const auto& target_class = classes.at(target);
            if (image.size() != base_class.size() || image != target_class) {
                if (detail)
                    *detail = "flip map over x = " + perm_str(perm) + " is not onto class s = " +
                              sign_str(target);
                return false;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace negcyc
