#include "signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace negcyc {

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in composition");
    Permutation c;
    c.images.resize(a.rank());
    for (uint32_t i = 1; i <= a.rank(); ++i) c.images[i - 1] = a.image(b.image(i));
    return c;
}

SignedPermutation::SignedPermutation(std::vector<int32_t> window) : window_(std::move(window)) {
    const auto n = window_.size();
    if (n == 0) throw std::invalid_argument("rank 0 is not a valid signed permutation");
    std::vector<bool> seen(n, false);
    for (int32_t v : window_) {
        const auto a = static_cast<uint64_t>(v < 0 ? -static_cast<int64_t>(v) : v);
        if (a == 0 || a > n)
            throw std::invalid_argument("window entry " + std::to_string(v) + " out of range for rank " +
                                        std::to_string(n));
        if (seen[a - 1])
            throw std::invalid_argument("window entries do not form a signed permutation: |" +
                                        std::to_string(v) + "| repeats");
        seen[a - 1] = true;
    }
}

SignedPermutation SignedPermutation::identity(uint32_t n) {
    if (n == 0) throw std::invalid_argument("rank 0 is not a valid signed permutation");
    std::vector<int32_t> w(n);
    for (uint32_t i = 0; i < n; ++i) w[i] = static_cast<int32_t>(i + 1);
    return SignedPermutation(std::move(w), Unchecked{});
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("malformed signed permutation: '" + std::string(text) + "'"); };
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    std::vector<int32_t> entries;
    while (true) {
        skip_ws();
        if (i >= text.size()) fail();
        if (text[i] == ']' && entries.empty()) fail();  // "[]" would be rank 0
        bool neg = false;
        if (text[i] == '+' || text[i] == '-') { neg = text[i] == '-'; ++i; }
        int32_t v = 0;
        auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc() || v <= 0) fail();
        i = static_cast<size_t>(p - text.data());
        entries.push_back(neg ? -v : v);
        skip_ws();
        if (i >= text.size()) fail();
        if (text[i] == ']') { ++i; break; }
        if (text[i] != ',') fail();
        ++i;
    }
    skip_ws();
    if (i != text.size()) fail();
    return SignedPermutation(std::move(entries));
}

std::string SignedPermutation::str() const {
    std::string out = "[";
    for (size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ',';
        if (window_[i] > 0) out += '+';
        out += std::to_string(window_[i]);
    }
    out += ']';
    return out;
}

uint32_t SignedPermutation::act_point(uint32_t p) const {
    const uint32_t n = rank();
    const bool primed = p >= n;
    const int32_t v = window_[primed ? p - n : p];
    // the mirror invariant: w(i') is w(i) with the prime toggled
    const bool out_primed = (v < 0) != primed;
    const uint32_t j = static_cast<uint32_t>(v < 0 ? -v : v) - 1;
    return out_primed ? j + n : j;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in composition");
    std::vector<int32_t> w(a.rank());
    for (uint32_t i = 0; i < a.rank(); ++i) {
        const int32_t v = b.window_[i];
        const int32_t img = a.window_[static_cast<uint32_t>(v < 0 ? -v : v) - 1];
        w[i] = v < 0 ? -img : img;
    }
    return SignedPermutation(std::move(w), SignedPermutation::Unchecked{});
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int32_t> w(rank());
    for (uint32_t i = 0; i < rank(); ++i) {
        const int32_t v = window_[i];
        const uint32_t j = static_cast<uint32_t>(v < 0 ? -v : v) - 1;
        w[j] = v < 0 ? -static_cast<int32_t>(i + 1) : static_cast<int32_t>(i + 1);
    }
    return SignedPermutation(std::move(w), Unchecked{});
}

Permutation SignedPermutation::projection() const {
    Permutation x;
    x.images.resize(rank());
    for (uint32_t i = 0; i < rank(); ++i) {
        const int32_t v = window_[i];
        x.images[i] = static_cast<uint32_t>(v < 0 ? -v : v);
    }
    return x;
}

namespace {

// Walks the cycles of |w| in canonical order (ascending minimal element) and
// reports (length, sign product along the cycle) for each.
template <typename F>
void for_each_projected_cycle(std::span<const int32_t> window, F&& visit) {
    const uint32_t n = static_cast<uint32_t>(window.size());
    uint64_t seen = 0;  // rank <= 64 would limit; use vector beyond
    std::vector<bool> seen_big;
    const bool small = n <= 64;
    if (!small) seen_big.assign(n, false);
    auto is_seen = [&](uint32_t i) { return small ? ((seen >> i) & 1) != 0 : static_cast<bool>(seen_big[i]); };
    auto mark = [&](uint32_t i) { if (small) seen |= uint64_t{1} << i; else seen_big[i] = true; };
    for (uint32_t i = 0; i < n; ++i) {
        if (is_seen(i)) continue;
        uint32_t j = i, len = 0;
        int sign = 1;
        do {
            mark(j);
            ++len;
            const int32_t v = window[j];
            if (v < 0) sign = -sign;
            j = static_cast<uint32_t>(v < 0 ? -v : v) - 1;
        } while (j != i);
        visit(len, sign);
    }
}

}  // namespace

CycleDecomposition SignedPermutation::cycle_decomposition() const {
    CycleDecomposition d;
    for_each_projected_cycle(window_, [&](uint32_t len, int sign) {
        (sign < 0 ? d.negative_lengths : d.positive_lengths).push_back(len);
    });
    std::sort(d.negative_lengths.begin(), d.negative_lengths.end());
    std::sort(d.positive_lengths.begin(), d.positive_lengths.end());
    return d;
}

SignVector SignedPermutation::sign_vector() const {
    SignVector s;
    for_each_projected_cycle(window_, [&](uint32_t, int sign) { s.push_back(static_cast<int8_t>(sign)); });
    return s;
}

SignedPermutation SignedPermutation::flip(std::span<const uint32_t> pairs) const {
    std::vector<int32_t> w(window_.begin(), window_.end());
    std::vector<bool> flip_value(rank(), false);
    for (uint32_t p : pairs) {
        if (p == 0 || p > rank())
            throw std::invalid_argument("flip index " + std::to_string(p) + " out of range for rank " +
                                        std::to_string(rank()));
        flip_value[p - 1] = !flip_value[p - 1];  // set semantics; repeated index cancels
    }
    for (auto& v : w) {
        const uint32_t j = static_cast<uint32_t>(v < 0 ? -v : v) - 1;
        if (flip_value[j]) v = -v;
    }
    return SignedPermutation(std::move(w), Unchecked{});
}

bool SignedPermutation::only_negative_cycles() const {
    bool all_neg = true;
    for_each_projected_cycle(window_, [&](uint32_t, int sign) { all_neg &= sign < 0; });
    return all_neg;
}

bool SignedPermutation::only_positive_cycles() const {
    bool all_pos = true;
    for_each_projected_cycle(window_, [&](uint32_t, int sign) { all_pos &= sign > 0; });
    return all_pos;
}

bool SignedPermutation::in_d() const {
    // parity of the negative-cycle count equals parity of negative window
    // entries (each negative cycle carries an odd number of sign changes)
    int neg = 0;
    for (int32_t v : window_) neg ^= v < 0;
    return neg == 0;
}

}  // namespace negcyc
