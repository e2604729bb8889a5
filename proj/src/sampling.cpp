#include "sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "counting.hpp"

namespace negcyc {

const char* selector_str(GroupSelector s) {
    switch (s) {
        case GroupSelector::B: return "B";
        case GroupSelector::D: return "D";
        default: return "coset";
    }
}

GroupSelector parse_selector(std::string_view text) {
    if (text == "B") return GroupSelector::B;
    if (text == "D") return GroupSelector::D;
    if (text == "coset") return GroupSelector::coset;
    throw std::invalid_argument("unknown group selector '" + std::string(text) + "' (expected B, D or coset)");
}

namespace {

void check_rank(uint32_t n) {
    if (n == 0) throw std::invalid_argument("rank 0 is rejected (group defined for n >= 1)");
}

// Shuffled window into `out` (1-based images, all positive), then sign words.
void draw_window(uint32_t n, Xoshiro256ss& rng, std::vector<int32_t>& out) {
    out.resize(n);
    for (uint32_t i = 0; i < n; ++i) out[i] = static_cast<int32_t>(i + 1);
    for (uint32_t i = n - 1; i > 0; --i) {
        const auto j = static_cast<uint32_t>(rng.below_inclusive(i));
        std::swap(out[i], out[j]);
    }
    uint64_t word = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = rng.next();
        if ((word >> (i % 64)) & 1) out[i] = -out[i];
    }
}

enum class Parity { free, even, odd };  // of negative window entries

void force_parity(std::vector<int32_t>& window, Parity want) {
    if (want == Parity::free) return;
    int neg = 0;
    for (int32_t v : window) neg ^= v < 0;
    const int target = want == Parity::even ? 0 : 1;
    if (neg != target) window.back() = -window.back();
}

SignedPermutation sample_with_parity(uint32_t n, Xoshiro256ss& rng, Parity parity) {
    check_rank(n);
    std::vector<int32_t> w;
    draw_window(n, rng, w);
    force_parity(w, parity);
    return SignedPermutation(std::move(w));
}

// Hot-path classifier equivalent to SignedPermutation::only_negative_cycles,
// working on a raw window without constructing the element.
bool window_only_negative(const std::vector<int32_t>& w) {
    const uint32_t n = static_cast<uint32_t>(w.size());
    uint64_t seen = 0;
    std::vector<bool> seen_big;
    const bool small = n <= 64;
    if (!small) seen_big.assign(n, false);
    for (uint32_t i = 0; i < n; ++i) {
        if (small ? ((seen >> i) & 1) : seen_big[i]) continue;
        uint32_t j = i;
        int sign = 1;
        do {
            if (small) seen |= uint64_t{1} << j; else seen_big[j] = true;
            const int32_t v = w[j];
            if (v < 0) sign = -sign;
            j = static_cast<uint32_t>(v < 0 ? -v : v) - 1;
        } while (j != i);
        if (sign > 0) return false;
    }
    return true;
}

double wilson_bound(double p_hat, uint64_t trials, bool upper) {
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double t = static_cast<double>(trials);
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = p_hat + z2 / (2.0 * t);
    const double half = z * std::sqrt(p_hat * (1.0 - p_hat) / t + z2 / (4.0 * t * t));
    double v = (upper ? center + half : center - half) / denom;
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return v;
}

}  // namespace

SignedPermutation sample_b(uint32_t n, Xoshiro256ss& rng) { return sample_with_parity(n, rng, Parity::free); }
SignedPermutation sample_d(uint32_t n, Xoshiro256ss& rng) { return sample_with_parity(n, rng, Parity::even); }
SignedPermutation sample_coset(uint32_t n, Xoshiro256ss& rng) { return sample_with_parity(n, rng, Parity::odd); }

EstimateReport estimate_proportion(GroupSelector selector, uint32_t n, uint64_t trials, uint64_t seed,
                                   unsigned threads) {
    check_rank(n);
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");

    const Parity parity = selector == GroupSelector::B ? Parity::free
                        : selector == GroupSelector::D ? Parity::even
                                                       : Parity::odd;

    // trials split across fixed streams; stream seeds come from a splitmix64
    // chain over the master seed (xor/offset-of-index schemes hand nearby
    // master seeds the same stream set, only permuted)
    uint64_t stream_trials[kSampleStreams];
    uint64_t stream_seeds[kSampleStreams];
    const uint64_t base = trials / kSampleStreams;
    const uint64_t extra = trials % kSampleStreams;
    uint64_t chain = seed;
    for (unsigned k = 0; k < kSampleStreams; ++k) {
        stream_trials[k] = base + (k < extra ? 1 : 0);
        stream_seeds[k] = splitmix64_next(chain);
    }

    uint64_t stream_hits[kSampleStreams] = {};
    auto run_stream = [&](unsigned k) {
        Xoshiro256ss rng(stream_seeds[k]);
        std::vector<int32_t> w;
        uint64_t hits = 0;
        for (uint64_t t = 0; t < stream_trials[k]; ++t) {
            draw_window(n, rng, w);
            force_parity(w, parity);
            if (window_only_negative(w)) ++hits;
        }
        stream_hits[k] = hits;
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, kSampleStreams);
    if (threads <= 1) {
        for (unsigned k = 0; k < kSampleStreams; ++k) run_stream(k);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (unsigned k = t; k < kSampleStreams; k += threads) run_stream(k);
            });
        for (auto& th : pool) th.join();
    }

    uint64_t hits = 0;
    for (unsigned k = 0; k < kSampleStreams; ++k) hits += stream_hits[k];  // merged in stream order

    EstimateReport r;
    r.selector = selector;
    r.n = n;
    r.trials = trials;
    r.hits = hits;
    r.seed = seed;
    r.estimate = Rational(BigNat(hits), BigNat(trials));
    r.estimate.canonicalize();
    switch (selector) {
        case GroupSelector::B: r.exact = proportion_p(n); break;
        case GroupSelector::D: r.exact = proportion_p_plus(n); break;
        case GroupSelector::coset: r.exact = proportion_p_minus(n); break;
    }

    const double p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    // rounding in the Wilson formula must not push an endpoint past the
    // estimate itself
    r.ci_low = std::min(wilson_bound(p_hat, trials, false), p_hat);
    r.ci_high = std::max(wilson_bound(p_hat, trials, true), p_hat);

    const double p = r.exact.get_d();
    if (r.exact == 0 || r.exact == 1) {
        r.degenerate = r.estimate != r.exact;
        r.z_score = 0.0;
    } else {
        r.z_score = (p_hat - p) / std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    }
    return r;
}

}  // namespace negcyc
