#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace negcyc {

// A permutation of {1,...,n}, images 1-based.
struct Permutation {
    std::vector<uint32_t> images;

    uint32_t rank() const { return static_cast<uint32_t>(images.size()); }
    uint32_t image(uint32_t i) const { return images[i - 1]; }
    bool operator==(const Permutation&) const = default;
};

Permutation compose(const Permutation& a, const Permutation& b);  // b acts first

// Multiset of cycle lengths of an element of W(B_n), split by sign.
// Each negative length k stands for one orbit of size 2k on the 2n points;
// each positive length k stands for a mirror pair of orbits of size k.
// Lengths are kept sorted ascending (multiset semantics).
struct CycleDecomposition {
    std::vector<uint32_t> negative_lengths;
    std::vector<uint32_t> positive_lengths;

    bool operator==(const CycleDecomposition&) const = default;
    auto operator<=>(const CycleDecomposition&) const = default;
};

// One entry (+1 / -1) per cycle of the projected permutation, cycles taken
// in canonical order: sorted by minimal element, fixed points as 1-cycles.
using SignVector = std::vector<int8_t>;

// An element of the hyperoctahedral group W(B_n) in window notation: entry i
// holds the signed image of i, value +j meaning i -> j and -j meaning i -> j'.
// The action on the 2n points {1..n, 1'..n'} is mirror-equivariant and is
// derived on demand; only the window is stored.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int32_t> window);

    static SignedPermutation identity(uint32_t n);

    // Text form "[-1,+2]"; '+' on positive entries is optional on input.
    static SignedPermutation parse(std::string_view text);
    std::string str() const;

    uint32_t rank() const { return static_cast<uint32_t>(window_.size()); }
    int32_t image(uint32_t i) const { return window_[i - 1]; }  // 1-based
    std::span<const int32_t> window() const { return window_; }

    // Action on the 2n points, encoded 0..2n-1: point p < n is p+1,
    // point p >= n is (p-n+1)'.
    uint32_t act_point(uint32_t p) const;

    SignedPermutation inverse() const;

    Permutation projection() const;
    CycleDecomposition cycle_decomposition() const;
    SignVector sign_vector() const;

    // Left-multiplies by the product of the transpositions (i,i') over
    // `pairs` (indices in 1..n). Leaves the projection untouched and flips
    // the j-th sign entry iff the j-th projected cycle meets `pairs` an odd
    // number of times.
    SignedPermutation flip(std::span<const uint32_t> pairs) const;

    bool only_negative_cycles() const;
    bool only_positive_cycles() const;
    bool in_d() const;

    bool operator==(const SignedPermutation&) const = default;
    bool operator<(const SignedPermutation& o) const { return window_ < o.window_; }

private:
    struct Unchecked {};
    SignedPermutation(std::vector<int32_t> window, Unchecked) : window_(std::move(window)) {}

    std::vector<int32_t> window_;

    friend SignedPermutation compose(const SignedPermutation&, const SignedPermutation&);
    friend class ElementStream;
};

// Group law, right operand acts first: compose(a, b) maps p to a(b(p)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

}  // namespace negcyc
