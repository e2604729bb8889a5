#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "counting.hpp"
#include "oracle.hpp"
#include "sampling.hpp"
#include "serialize.hpp"

using namespace negcyc;

namespace {

// chi-square upper critical values at alpha = 0.001 by degrees of freedom
double chi2_crit(unsigned df) {
    switch (df) {
        case 1: return 10.827566;
        case 3: return 16.266236;
        case 7: return 24.321886;
        case 19: return 43.820196;
        case 35: return 66.618829;
        case 47: return 82.720423;
        case 64: return 104.716325;
        default: REQUIRE(false); return 0;
    }
}

// lexicographic rank of a window's underlying permutation plus its sign mask
size_t element_index(const SignedPermutation& w) {
    const uint32_t n = w.rank();
    std::vector<uint32_t> abs(n);
    uint32_t mask = 0;
    for (uint32_t i = 1; i <= n; ++i) {
        const int32_t v = w.image(i);
        abs[i - 1] = static_cast<uint32_t>(v < 0 ? -v : v);
        if (v < 0) mask |= uint32_t{1} << (i - 1);
    }
    size_t rank = 0;
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t smaller = 0;
        for (uint32_t j = i + 1; j < n; ++j) smaller += abs[j] < abs[i];
        size_t fact = 1;
        for (uint32_t m = 2; m <= n - 1 - i; ++m) fact *= m;
        rank += smaller * fact;
    }
    return (rank << n) | mask;
}

double chi_square_uniform(const std::vector<uint64_t>& counts, uint64_t draws) {
    const double expected = static_cast<double>(draws) / static_cast<double>(counts.size());
    double stat = 0;
    for (uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

}  // namespace

TEST_CASE("samplers reject rank 0 and zero trials") {
    Xoshiro256ss rng(1);
    CHECK_THROWS_AS(sample_b(0, rng), std::invalid_argument);
    CHECK_THROWS_AS(estimate_proportion(GroupSelector::B, 0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_proportion(GroupSelector::B, 3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_selector("Z"), std::invalid_argument);
}

TEST_CASE("rank 1 frequencies") {
    Xoshiro256ss rng(42);
    uint64_t negative = 0;
    const uint64_t draws = 100000;
    for (uint64_t i = 0; i < draws; ++i) negative += sample_b(1, rng).image(1) < 0;
    // p = 1/2, 5 sigma band
    const double sigma = std::sqrt(0.25 * draws);
    CHECK(std::abs(static_cast<double>(negative) - 0.5 * draws) < 5 * sigma);

    for (uint64_t i = 0; i < 1000; ++i) {
        CHECK(sample_d(1, rng) == SignedPermutation::identity(1));
        CHECK(sample_coset(1, rng).image(1) == -1);
    }
}

TEST_CASE("subgroup and coset membership is exact") {
    Xoshiro256ss rng(7);
    for (uint64_t i = 0; i < 100000; ++i) {
        REQUIRE(sample_d(10, rng).in_d());
        REQUIRE_FALSE(sample_coset(10, rng).in_d());
    }
}

TEST_CASE("element-level uniformity of the B sampler") {
    for (uint32_t n = 1; n <= 3; ++n) {
        uint64_t order = 1;
        for (uint32_t m = 2; m <= n; ++m) order *= m;
        order <<= n;
        std::vector<uint64_t> counts(order, 0);
        Xoshiro256ss rng(1000 + n);
        const uint64_t draws = 1000000;
        for (uint64_t i = 0; i < draws; ++i) {
            const size_t idx = element_index(sample_b(n, rng));
            REQUIRE(idx < counts.size());
            ++counts[idx];
        }
        const double stat = chi_square_uniform(counts, draws);
        CHECK(stat < chi2_crit(static_cast<unsigned>(order - 1)));
    }
}

TEST_CASE("element-level uniformity of the D and coset samplers at rank 2") {
    std::map<SignedPermutation, size_t> d_index, coset_index;
    enumerate_b(2, [&](const SignedPermutation& w) {
        if (w.in_d())
            d_index.emplace(w, d_index.size());
        else
            coset_index.emplace(w, coset_index.size());
    });
    REQUIRE(d_index.size() == 4);
    REQUIRE(coset_index.size() == 4);

    Xoshiro256ss rng(555);
    const uint64_t draws = 1000000;
    std::vector<uint64_t> d_counts(4, 0), coset_counts(4, 0);
    for (uint64_t i = 0; i < draws; ++i) {
        ++d_counts[d_index.at(sample_d(2, rng))];
        ++coset_counts[coset_index.at(sample_coset(2, rng))];
    }
    CHECK(chi_square_uniform(d_counts, draws) < chi2_crit(3));
    CHECK(chi_square_uniform(coset_counts, draws) < chi2_crit(3));
}

TEST_CASE("cycle-type distribution of the B sampler matches enumeration") {
    for (uint32_t n = 4; n <= 6; ++n) {
        std::map<CycleDecomposition, uint64_t> class_sizes;
        uint64_t order = 0;
        enumerate_b(n, [&](const SignedPermutation& w) {
            ++class_sizes[w.cycle_decomposition()];
            ++order;
        });
        std::map<CycleDecomposition, size_t> index;
        std::vector<double> expected;
        for (const auto& [type, size] : class_sizes) {
            index.emplace(type, expected.size());
            expected.push_back(static_cast<double>(size) / static_cast<double>(order));
        }

        Xoshiro256ss rng(9000 + n);
        const uint64_t draws = 1000000;
        std::vector<uint64_t> counts(expected.size(), 0);
        for (uint64_t i = 0; i < draws; ++i) ++counts[index.at(sample_b(n, rng).cycle_decomposition())];

        double stat = 0;
        for (size_t c = 0; c < counts.size(); ++c) {
            const double e = expected[c] * static_cast<double>(draws);
            const double d = static_cast<double>(counts[c]) - e;
            stat += d * d / e;
        }
        CHECK(stat < chi2_crit(static_cast<unsigned>(expected.size() - 1)));
    }
}

TEST_CASE("draws are reproducible from a fixed seed") {
    Xoshiro256ss a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        REQUIRE(sample_b(5, a) == sample_b(5, b));
        REQUIRE(sample_d(5, a) == sample_d(5, b));
        REQUIRE(sample_coset(5, a) == sample_coset(5, b));
    }
}

TEST_CASE("estimate determinism across runs and worker counts") {
    const EstimateReport a = estimate_proportion(GroupSelector::B, 10, 200000, 42, 1);
    const EstimateReport b = estimate_proportion(GroupSelector::B, 10, 200000, 42, 5);
    const EstimateReport c = estimate_proportion(GroupSelector::B, 10, 200000, 42, 0);
    CHECK(a.hits == b.hits);
    CHECK(estimate_csv_row(a) == estimate_csv_row(b));
    CHECK(estimate_csv_row(a) == estimate_csv_row(c));
    CHECK(estimate_json(a) == estimate_json(b));

    const EstimateReport d = estimate_proportion(GroupSelector::B, 10, 200000, 43, 1);
    CHECK(a.hits != d.hits);  // different seed, different draw
}

TEST_CASE("estimate against exact values") {
    const EstimateReport b1 = estimate_proportion(GroupSelector::B, 1, 1000000, 7);
    CHECK(b1.exact == Rational(1, 2));
    const double est = static_cast<double>(b1.hits) / 1e6;
    CHECK(std::abs(est - 0.5) < 0.002);  // 4 sigma
    CHECK_FALSE(b1.degenerate);
    CHECK(std::abs(b1.z_score) < 4.0);

    const EstimateReport b50 = estimate_proportion(GroupSelector::B, 50, 1000000, 11);
    CHECK(b50.exact == proportion_p(50));
    CHECK(std::abs(b50.z_score) < 4.0);

    const EstimateReport coset3 = estimate_proportion(GroupSelector::coset, 3, 1000000, 13);
    CHECK(coset3.exact == Rational(3, 8));
    CHECK(std::abs(coset3.z_score) < 4.0);
}

TEST_CASE("degenerate exact proportions") {
    // p+(1) = 0: sampling W(D_1) can never produce an only-negative element
    const EstimateReport d1 = estimate_proportion(GroupSelector::D, 1, 1000, 3);
    CHECK(d1.hits == 0);
    CHECK(d1.exact == 0);
    CHECK(d1.z_score == 0.0);
    CHECK_FALSE(d1.degenerate);
    CHECK(d1.ci_low == 0.0);

    // p-(1) = 1: every coset element at rank 1 is only-negative
    const EstimateReport c1 = estimate_proportion(GroupSelector::coset, 1, 1000, 3);
    CHECK(c1.hits == 1000);
    CHECK(c1.exact == 1);
    CHECK(c1.z_score == 0.0);
    CHECK_FALSE(c1.degenerate);
}

TEST_CASE("report invariants") {
    for (uint64_t seed : {1ull, 2ull, 3ull, 99ull}) {
        for (uint64_t trials : {1ull, 7ull, 1000ull}) {
            const EstimateReport r = estimate_proportion(GroupSelector::B, 4, trials, seed);
            REQUIRE(r.hits <= r.trials);
            Rational est(BigNat(r.hits), BigNat(r.trials));
            est.canonicalize();
            REQUIRE(r.estimate == est);
            const double est_d = static_cast<double>(r.hits) / static_cast<double>(r.trials);
            REQUIRE(r.ci_low <= est_d + 1e-15);
            REQUIRE(est_d <= r.ci_high + 1e-15);
            REQUIRE(r.ci_low >= 0.0);
            REQUIRE(r.ci_high <= 1.0);
        }
    }
}

TEST_CASE("estimate serialization") {
    const EstimateReport r = estimate_proportion(GroupSelector::D, 2, 1000, 5);
    CHECK(estimate_csv_header() == "selector,n,trials,hits,estimate,exact,ci_low,ci_high,seed,z_score");
    const std::string json = estimate_json(r);
    CHECK(json.find("\"selector\":\"D\"") != std::string::npos);
    CHECK(json.find("\"n\":2") != std::string::npos);
    CHECK(json.find("\"trials\":1000") != std::string::npos);
    CHECK(json.find("\"exact\":\"1/4\"") != std::string::npos);
    CHECK(json.find("\"seed\":5") != std::string::npos);
    // field order is part of the contract
    CHECK(json.find("\"selector\"") < json.find("\"n\""));
    CHECK(json.find("\"n\"") < json.find("\"trials\""));
    CHECK(json.find("\"trials\"") < json.find("\"hits\""));
    CHECK(json.find("\"hits\"") < json.find("\"estimate\""));
    CHECK(json.find("\"estimate\"") < json.find("\"exact\""));
    CHECK(json.find("\"exact\"") < json.find("\"ci_low\""));
    CHECK(json.find("\"ci_low\"") < json.find("\"ci_high\""));
    CHECK(json.find("\"ci_high\"") < json.find("\"seed\""));
    CHECK(json.find("\"seed\"") < json.find("\"z_score\""));
}
