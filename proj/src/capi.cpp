#include "negcyc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "asymptotics.hpp"
#include "counting.hpp"
#include "oracle.hpp"
#include "sampling.hpp"
#include "serialize.hpp"
#include "signed_perm.hpp"

using namespace negcyc;

struct nc_perm {
    SignedPermutation value;
};

struct nc_table {
    std::vector<CountsRow> rows;
};

struct nc_estimate {
    EstimateReport report;
};

struct nc_bound {
    BoundReport report;
    RealEnclosure ratio;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs `fn`, translating exceptions into status codes + the thread-local
// message. Every exported function funnels through here.
template <typename Fn>
nc_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return NC_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return NC_EINVAL;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return NC_ERANGE;
    } catch (const std::logic_error& e) {
        g_last_error = e.what();
        return NC_EINTERNAL;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return NC_ENOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NC_EUNKNOWN;
    } catch (...) {
        g_last_error = "unknown error";
        return NC_EUNKNOWN;
    }
}

nc_status require(bool cond, const char* msg) {
    if (cond) return NC_OK;
    g_last_error = msg;
    return NC_EINVAL;
}

nc_status string_result(char** out, const std::string& s) {
    *out = dup_string(s);
    return *out ? NC_OK : NC_ENOMEM;
}

template <typename Fn>
nc_status counted(char** out, Fn&& compute) {
    if (nc_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] {
        if (string_result(out, compute()) != NC_OK) throw std::bad_alloc();
    });
}

}  // namespace

extern "C" {

const char* nc_version(void) { return "1.0.0"; }

const char* nc_status_str(nc_status s) {
    switch (s) {
        case NC_OK: return "ok";
        case NC_EINVAL: return "invalid argument";
        case NC_ERANGE: return "above enumeration cap";
        case NC_EINTERNAL: return "internal consistency failure";
        case NC_ENOMEM: return "out of memory";
        default: return "unknown error";
    }
}

const char* nc_last_error(void) { return g_last_error.c_str(); }

void nc_string_free(char* s) { std::free(s); }

/* ---------- elements ---------- */

nc_status nc_perm_identity(uint32_t n, nc_perm** out) {
    if (nc_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { *out = new nc_perm{SignedPermutation::identity(n)}; });
}

nc_status nc_perm_parse(const char* text, nc_perm** out) {
    if (nc_status s = require(out && text, "text or out is NULL")) return s;
    return guarded([&] { *out = new nc_perm{SignedPermutation::parse(text)}; });
}

nc_status nc_perm_from_window(const int32_t* window, uint32_t n, nc_perm** out) {
    if (nc_status s = require(out && window, "window or out is NULL")) return s;
    return guarded([&] {
        *out = new nc_perm{SignedPermutation(std::vector<int32_t>(window, window + n))};
    });
}

void nc_perm_free(nc_perm* w) { delete w; }

uint32_t nc_perm_rank(const nc_perm* w) { return w ? w->value.rank() : 0; }

int32_t nc_perm_image(const nc_perm* w, uint32_t i) {
    if (!w || i == 0 || i > w->value.rank()) return 0;
    return w->value.image(i);
}

nc_status nc_perm_str(const nc_perm* w, char** out) {
    if (nc_status s = require(w != nullptr, "perm is NULL")) return s;
    return counted(out, [&] { return w->value.str(); });
}

int nc_perm_equal(const nc_perm* a, const nc_perm* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

nc_status nc_perm_compose(const nc_perm* a, const nc_perm* b, nc_perm** out) {
    if (nc_status s = require(a && b && out, "operand or out is NULL")) return s;
    return guarded([&] { *out = new nc_perm{compose(a->value, b->value)}; });
}

nc_status nc_perm_inverse(const nc_perm* w, nc_perm** out) {
    if (nc_status s = require(w && out, "perm or out is NULL")) return s;
    return guarded([&] { *out = new nc_perm{w->value.inverse()}; });
}

nc_status nc_perm_flip(const nc_perm* w, const uint32_t* pairs, size_t count, nc_perm** out) {
    if (nc_status s = require(w && out && (pairs || count == 0), "perm, pairs or out is NULL")) return s;
    return guarded([&] { *out = new nc_perm{w->value.flip({pairs, count})}; });
}

nc_status nc_perm_cycles(const nc_perm* w, uint32_t* neg, size_t* neg_count, uint32_t* pos,
                         size_t* pos_count) {
    if (nc_status s = require(w && neg_count && pos_count, "perm or count pointer is NULL")) return s;
    return guarded([&] {
        const CycleDecomposition d = w->value.cycle_decomposition();
        if (neg) {
            if (*neg_count < d.negative_lengths.size()) throw std::invalid_argument("neg buffer too small");
            std::copy(d.negative_lengths.begin(), d.negative_lengths.end(), neg);
        }
        if (pos) {
            if (*pos_count < d.positive_lengths.size()) throw std::invalid_argument("pos buffer too small");
            std::copy(d.positive_lengths.begin(), d.positive_lengths.end(), pos);
        }
        *neg_count = d.negative_lengths.size();
        *pos_count = d.positive_lengths.size();
    });
}

nc_status nc_perm_sign_vector(const nc_perm* w, int8_t* entries, size_t* count) {
    if (nc_status s = require(w && count, "perm or count pointer is NULL")) return s;
    return guarded([&] {
        const SignVector sv = w->value.sign_vector();
        if (entries) {
            if (*count < sv.size()) throw std::invalid_argument("entries buffer too small");
            std::copy(sv.begin(), sv.end(), entries);
        }
        *count = sv.size();
    });
}

int nc_perm_only_negative(const nc_perm* w) { return w && w->value.only_negative_cycles() ? 1 : 0; }
int nc_perm_only_positive(const nc_perm* w) { return w && w->value.only_positive_cycles() ? 1 : 0; }
int nc_perm_in_d(const nc_perm* w) { return w && w->value.in_d() ? 1 : 0; }

/* ---------- counting ---------- */

nc_status nc_stirling1(uint64_t n, uint64_t k, char** out) {
    return counted(out, [&] { return stirling1_unsigned(n, k).get_str(); });
}

nc_status nc_double_factorial_odd(uint64_t n, char** out) {
    return counted(out, [&] { return double_factorial_odd(n).get_str(); });
}

nc_status nc_group_order_b(uint32_t n, char** out) {
    return counted(out, [&] { return group_order_b(n).get_str(); });
}

nc_status nc_count_neg_b(uint32_t n, char** out) {
    return counted(out, [&] { return count_all_negative_b(n).get_str(); });
}

nc_status nc_count_pos_b(uint32_t n, char** out) {
    return counted(out, [&] { return count_all_positive_b(n).get_str(); });
}

nc_status nc_count_neg_d(uint32_t n, char** out) {
    return counted(out, [&] { return count_all_negative_d(n).get_str(); });
}

nc_status nc_count_neg_coset(uint32_t n, char** out) {
    return counted(out, [&] { return count_all_negative_coset(n).get_str(); });
}

nc_status nc_proportion_p(uint32_t n, char** out) {
    return counted(out, [&] { return rational_str(proportion_p(n)); });
}

nc_status nc_proportion_p_plus(uint32_t n, char** out) {
    return counted(out, [&] { return rational_str(proportion_p_plus(n)); });
}

nc_status nc_proportion_p_minus(uint32_t n, char** out) {
    return counted(out, [&] { return rational_str(proportion_p_minus(n)); });
}

nc_status nc_rational_decimal(const char* rational, uint32_t frac_digits, char** out) {
    if (nc_status s = require(rational != nullptr, "rational is NULL")) return s;
    return counted(out, [&] { return decimal_round(parse_rational(rational), frac_digits); });
}

/* ---------- table ---------- */

nc_status nc_table_build(uint32_t max_n, nc_table** out) {
    if (nc_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] { *out = new nc_table{counts_table(max_n)}; });
}

void nc_table_free(nc_table* t) { delete t; }

uint32_t nc_table_rows(const nc_table* t) { return t ? static_cast<uint32_t>(t->rows.size()) : 0; }

const char* nc_table_csv_header(void) {
    static const std::string header = table_csv_header();
    return header.c_str();
}

nc_status nc_table_csv_row(const nc_table* t, uint32_t index, char** out) {
    if (nc_status s = require(t && index < t->rows.size(), "table row index out of range")) return s;
    return counted(out, [&] { return table_csv_row(t->rows[index]); });
}

nc_status nc_table_json_row(const nc_table* t, uint32_t index, char** out) {
    if (nc_status s = require(t && index < t->rows.size(), "table row index out of range")) return s;
    return counted(out, [&] { return table_json(t->rows[index]); });
}

/* ---------- sampling ---------- */

nc_status nc_estimate_run(const char* selector, uint32_t n, uint64_t trials, uint64_t seed,
                          uint32_t threads, nc_estimate** out) {
    if (nc_status s = require(selector && out, "selector or out is NULL")) return s;
    return guarded([&] {
        *out = new nc_estimate{estimate_proportion(parse_selector(selector), n, trials, seed, threads)};
    });
}

void nc_estimate_free(nc_estimate* r) { delete r; }

uint64_t nc_estimate_hits(const nc_estimate* r) { return r ? r->report.hits : 0; }
double nc_estimate_z_score(const nc_estimate* r) { return r ? r->report.z_score : 0.0; }
int nc_estimate_degenerate(const nc_estimate* r) { return r && r->report.degenerate ? 1 : 0; }

const char* nc_estimate_csv_header(void) {
    static const std::string header = estimate_csv_header();
    return header.c_str();
}

nc_status nc_estimate_csv(const nc_estimate* r, char** out) {
    if (nc_status s = require(r != nullptr, "report is NULL")) return s;
    return counted(out, [&] { return estimate_csv_row(r->report); });
}

nc_status nc_estimate_json(const nc_estimate* r, char** out) {
    if (nc_status s = require(r != nullptr, "report is NULL")) return s;
    return counted(out, [&] { return estimate_json(r->report); });
}

/* ---------- bound ---------- */

nc_status nc_bound_run(uint64_t n, nc_bound** out) {
    if (nc_status s = require(out != nullptr, "out is NULL")) return s;
    return guarded([&] {
        BoundReport report = certify_upper_bound(n);
        RealEnclosure ratio = ratio_p_over_h(n, report.precision_bits);
        *out = new nc_bound{std::move(report), std::move(ratio)};
    });
}

void nc_bound_free(nc_bound* r) { delete r; }

const char* nc_bound_verdict(const nc_bound* r) {
    return r ? verdict_str(r->report.verdict) : "undecided";
}

uint32_t nc_bound_precision_bits(const nc_bound* r) { return r ? r->report.precision_bits : 0; }

const char* nc_bound_csv_header(void) {
    static const std::string header = bound_csv_header();
    return header.c_str();
}

nc_status nc_bound_csv(const nc_bound* r, char** out) {
    if (nc_status s = require(r != nullptr, "report is NULL")) return s;
    return counted(out, [&] { return bound_csv_row(r->report, r->ratio); });
}

nc_status nc_bound_json(const nc_bound* r, char** out) {
    if (nc_status s = require(r != nullptr, "report is NULL")) return s;
    return counted(out, [&] { return bound_json(r->report, r->ratio); });
}

nc_status nc_log_grid(uint64_t max_n, uint32_t steps, uint64_t* out, size_t* count) {
    if (nc_status s = require(count != nullptr, "count is NULL")) return s;
    return guarded([&] {
        const std::vector<uint64_t> grid = log_grid(max_n, steps);
        if (out) {
            if (*count < grid.size()) throw std::invalid_argument("grid buffer too small");
            std::copy(grid.begin(), grid.end(), out);
        }
        *count = grid.size();
    });
}

nc_status nc_check_stirling_bounds(uint64_t n, int* result) {
    if (nc_status s = require(result != nullptr, "result is NULL")) return s;
    return guarded([&] {
        switch (check_stirling_bounds(n)) {
            case CheckResult::certified_true: *result = 1; break;
            case CheckResult::certified_false: *result = 0; break;
            default: *result = -1;
        }
    });
}

/* ---------- oracle ---------- */

void nc_oracle_caps(uint32_t* enum_cap, uint32_t* lemma_cap, uint32_t* flip_cap) {
    if (enum_cap) *enum_cap = kEnumCap;
    if (lemma_cap) *lemma_cap = kLemmaCap;
    if (flip_cap) *flip_cap = kFlipCap;
}

nc_status nc_brute_counts(uint32_t n, uint32_t threads, char** neg_b, char** neg_d, char** neg_coset,
                          char** pos_b) {
    if (nc_status s = require(neg_b && neg_d && neg_coset && pos_b, "an out pointer is NULL")) return s;
    return guarded([&] {
        const BruteCounts c = brute_counts(n, threads);
        *neg_b = dup_string(c.neg_b.get_str());
        *neg_d = dup_string(c.neg_d.get_str());
        *neg_coset = dup_string(c.neg_coset.get_str());
        *pos_b = dup_string(c.pos_b.get_str());
        if (!*neg_b || !*neg_d || !*neg_coset || !*pos_b) throw std::bad_alloc();
    });
}

nc_status nc_brute_counts_json(uint32_t n, uint32_t threads, char** out) {
    return counted(out, [&] { return counts_json(n, brute_counts(n, threads)); });
}

nc_status nc_verify_lemma(uint32_t n, int* ok, char** detail) {
    if (nc_status s = require(ok != nullptr, "ok is NULL")) return s;
    return guarded([&] {
        std::string msg;
        *ok = verify_lemma(n, &msg) ? 1 : 0;
        if (detail) *detail = *ok ? nullptr : dup_string(msg);
    });
}

nc_status nc_verify_flip_bijection(uint32_t n, int* ok, char** detail) {
    if (nc_status s = require(ok != nullptr, "ok is NULL")) return s;
    return guarded([&] {
        std::string msg;
        *ok = verify_flip_bijection(n, &msg) ? 1 : 0;
        if (detail) *detail = *ok ? nullptr : dup_string(msg);
    });
}

}  // extern "C"
