// negcyc — command-line front end over the shared library's C API.
//
// Subcommands: table, verify, sample, bound. Data goes to stdout, logs to
// stderr. Exit codes: 0 pass, 1 a check or statistical gate failed,
// 2 usage error. csv and json output is byte-stable for fixed arguments.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negcyc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// owning wrapper for strings handed out by the C API
struct CStr {
    char* p = nullptr;
    ~CStr() { nc_string_free(p); }
    const char* get() const { return p ? p : ""; }
};

[[noreturn]] void die_api(nc_status s) {
    std::cerr << "negcyc: " << nc_status_str(s) << ": " << nc_last_error() << "\n";
    std::exit(s == NC_EINVAL || s == NC_ERANGE ? kExitUsage : kExitCheckFailed);
}

void check(nc_status s) {
    if (s != NC_OK) die_api(s);
}

std::vector<std::string> split_csv(const std::string& row) {
    std::vector<std::string> out;
    std::stringstream ss(row);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

void print_pretty_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t c = 0; c < r.size(); ++c) {
            if (c) std::cout << "  ";
            std::cout << r[c] << std::string(width[c] - r[c].size(), ' ');
        }
        std::cout << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void emit_records(const std::string& format, const std::string& csv_header,
                  const std::vector<std::string>& csv_rows, const std::vector<std::string>& json_rows) {
    if (format == "csv") {
        std::cout << csv_header << "\n";
        for (const auto& r : csv_rows) std::cout << r << "\n";
    } else if (format == "json") {
        std::cout << "[\n";
        for (size_t i = 0; i < json_rows.size(); ++i)
            std::cout << json_rows[i] << (i + 1 < json_rows.size() ? "," : "") << "\n";
        std::cout << "]\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(csv_rows.size());
        for (const auto& r : csv_rows) rows.push_back(split_csv(r));
        print_pretty_table(split_csv(csv_header), rows);
    }
}

int cmd_table(uint32_t max_n, const std::string& format) {
    nc_table* table = nullptr;
    check(nc_table_build(max_n, &table));
    std::vector<std::string> csv_rows, json_rows;
    for (uint32_t i = 0; i < nc_table_rows(table); ++i) {
        CStr row, jrow;
        check(nc_table_csv_row(table, i, &row.p));
        check(nc_table_json_row(table, i, &jrow.p));
        csv_rows.emplace_back(row.get());
        json_rows.emplace_back(jrow.get());
    }
    nc_table_free(table);
    emit_records(format, nc_table_csv_header(), csv_rows, json_rows);
    return kExitPass;
}

std::string escape_json(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (static_cast<unsigned char>(c) < 0x20) { out += ' '; continue; }
        out += c;
    }
    return out;
}

// quotes a CSV field when it holds separators or quotes
std::string escape_csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string verify_json_record(const std::string& kind, uint32_t n, bool pass, const std::string& detail) {
    std::string j = "{\"check\":\"" + kind + "\",\"n\":" + std::to_string(n);
    j += ",\"pass\":" + std::string(pass ? "true" : "false");
    j += ",\"detail\":\"" + escape_json(detail) + "\"}";
    return j;
}

int cmd_verify(uint32_t max_n_counts, uint32_t max_n_lemma, uint32_t threads, const std::string& format) {
    uint32_t enum_cap = 0, lemma_cap = 0, flip_cap = 0;
    nc_oracle_caps(&enum_cap, &lemma_cap, &flip_cap);
    if (max_n_counts > enum_cap) {
        std::cerr << "negcyc: --max-n-counts " << max_n_counts << " exceeds the enumeration cap " << enum_cap
                  << "\n";
        return kExitUsage;
    }
    if (max_n_lemma > lemma_cap) {
        std::cerr << "negcyc: --max-n-lemma " << max_n_lemma << " exceeds the lemma cap " << lemma_cap << "\n";
        return kExitUsage;
    }

    bool all_pass = true;
    std::vector<std::string> csv_rows, json_rows;
    auto record = [&](const std::string& kind, uint32_t n, bool pass, const std::string& detail) {
        all_pass = all_pass && pass;
        csv_rows.push_back(kind + "," + std::to_string(n) + "," + (pass ? "true" : "false") + "," +
                           escape_csv(detail));
        json_rows.push_back(verify_json_record(kind, n, pass, detail));
    };

    for (uint32_t n = 1; n <= max_n_counts; ++n) {
        CStr bb, bd, bc, bp;
        check(nc_brute_counts(n, threads, &bb.p, &bd.p, &bc.p, &bp.p));
        CStr fb, fd, fc;
        check(nc_count_neg_b(n, &fb.p));
        check(nc_count_neg_d(n, &fd.p));
        check(nc_count_neg_coset(n, &fc.p));
        const bool neg_ok = std::string(bb.get()) == fb.get();
        const bool d_ok = std::string(bd.get()) == fd.get();
        const bool coset_ok = std::string(bc.get()) == fc.get();
        const bool pos_ok = std::string(bp.get()) == bb.get();  // only-positive count matches only-negative
        std::string detail = "neg_B=" + std::string(bb.get()) + " neg_D=" + bd.get() +
                             " neg_coset=" + bc.get() + " pos_B=" + bp.get();
        if (!neg_ok) detail += " (neg_B formula: " + std::string(fb.get()) + ")";
        if (!d_ok) detail += " (neg_D formula: " + std::string(fd.get()) + ")";
        if (!coset_ok) detail += " (neg_coset formula: " + std::string(fc.get()) + ")";
        record("counts", n, neg_ok && d_ok && coset_ok && pos_ok, detail);
    }

    for (uint32_t n = 1; n <= max_n_lemma; ++n) {
        int ok = 0;
        CStr detail;
        check(nc_verify_lemma(n, &ok, &detail.p));
        record("lemma", n, ok == 1, ok ? "all fiber classes have cardinality 2^(n-k)" : detail.get());
    }

    for (uint32_t n = 1; n <= std::min(max_n_lemma, flip_cap); ++n) {
        int ok = 0;
        CStr detail;
        check(nc_verify_flip_bijection(n, &ok, &detail.p));
        record("flip_bijection", n, ok == 1, ok ? "flip maps are bijections between classes" : detail.get());
    }

    emit_records(format, "check,n,pass,detail", csv_rows, json_rows);
    return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_sample(const std::string& group, uint32_t n, uint64_t trials, uint64_t seed, uint32_t threads,
               const std::string& format) {
    nc_estimate* est = nullptr;
    check(nc_estimate_run(group.c_str(), n, trials, seed, threads, &est));
    CStr row, jrow;
    check(nc_estimate_csv(est, &row.p));
    check(nc_estimate_json(est, &jrow.p));
    const double z = nc_estimate_z_score(est);
    const bool degenerate = nc_estimate_degenerate(est) == 1;
    nc_estimate_free(est);
    emit_records(format, nc_estimate_csv_header(), {row.get()}, {jrow.get()});
    if (degenerate) {
        std::cerr << "negcyc: degenerate report: impossible outcome observed\n";
        return kExitCheckFailed;
    }
    return (z <= 5.0 && z >= -5.0) ? kExitPass : kExitCheckFailed;
}

int cmd_bound(std::vector<uint64_t> ns, uint64_t max_n, uint32_t log_steps, const std::string& format) {
    if (ns.empty()) {
        size_t count = 0;
        check(nc_log_grid(max_n, log_steps, nullptr, &count));
        ns.resize(count);
        check(nc_log_grid(max_n, log_steps, ns.data(), &count));
    }
    bool all_certified = true;
    std::vector<std::string> csv_rows, json_rows;
    for (uint64_t n : ns) {
        nc_bound* rep = nullptr;
        check(nc_bound_run(n, &rep));
        CStr row, jrow;
        check(nc_bound_csv(rep, &row.p));
        check(nc_bound_json(rep, &jrow.p));
        all_certified = all_certified && std::string(nc_bound_verdict(rep)) == "certified_true";
        nc_bound_free(rep);
        csv_rows.emplace_back(row.get());
        json_rows.emplace_back(jrow.get());
    }
    emit_records(format, nc_bound_csv_header(), csv_rows, json_rows);
    return all_certified ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts, Monte Carlo checks and certified bounds for only-negative-cycle "
                 "elements of the Weyl groups B/C/D"};
    app.require_subcommand(1);
    std::string format = "csv";

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json", "pretty"}))
            ->capture_default_str();
    };

    // table
    uint32_t table_max_n = 10;
    auto* table = app.add_subcommand("table", "exact counts and proportions for n = 1..max-n");
    table->add_option("--max-n", table_max_n, "largest rank")->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(table);

    // verify
    uint32_t verify_counts = 8, verify_lemma = 6, verify_threads = 0;
    auto* verify = app.add_subcommand("verify", "brute-force enumeration against the closed formulas, "
                                                "plus fiber-partition and flip-bijection checks");
    verify->add_option("--max-n-counts", verify_counts, "count comparison up to this rank (cap 8)")
        ->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--max-n-lemma", verify_lemma,
                       "fiber checks up to this rank (cap 6; flip bijection additionally capped at 5)")
        ->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--threads", verify_threads, "worker count, 0 = hardware")->capture_default_str();
    add_format(verify);

    // sample
    std::string sample_group = "B";
    uint32_t sample_n = 0, sample_threads = 0;
    uint64_t sample_trials = 1000000, sample_seed = 0;
    auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of the only-negative proportion");
    sample->add_option("--group", sample_group, "B, D or coset")
        ->check(CLI::IsMember({"B", "D", "coset"}))->capture_default_str();
    sample->add_option("--n", sample_n, "rank")->required()->check(CLI::PositiveNumber);
    sample->add_option("--trials", sample_trials, "number of draws")->check(CLI::PositiveNumber)
        ->capture_default_str();
    sample->add_option("--seed", sample_seed, "RNG seed")->capture_default_str();
    sample->add_option("--threads", sample_threads, "worker count, 0 = hardware (result is identical)")
        ->capture_default_str();
    add_format(sample);

    // bound
    std::vector<uint64_t> bound_ns;
    uint64_t bound_max = 1000000;
    uint32_t bound_steps = 13;
    auto* bound = app.add_subcommand("bound", "certify p(n) < h(n) and report the p/h enclosure");
    bound->add_option("--n", bound_ns, "explicit rank (repeatable)")->check(CLI::PositiveNumber);
    bound->add_option("--max", bound_max, "grid upper end when --n is not given")
        ->check(CLI::PositiveNumber)->capture_default_str();
    bound->add_option("--log-steps", bound_steps, "points in the log-spaced grid")
        ->check(CLI::PositiveNumber)->capture_default_str();
    add_format(bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(table_max_n, format);
        if (verify->parsed()) return cmd_verify(verify_counts, verify_lemma, verify_threads, format);
        if (sample->parsed())
            return cmd_sample(sample_group, sample_n, sample_trials, sample_seed, sample_threads, format);
        if (bound->parsed()) return cmd_bound(bound_ns, bound_max, bound_steps, format);
    } catch (const std::exception& e) {
        std::cerr << "negcyc: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
