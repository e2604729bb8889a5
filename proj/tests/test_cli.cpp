#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// runs the CLI under test (path in NEGCYC_CLI) and captures stdout
RunResult run(const std::string& args, bool merge_stderr = false) {
    const char* cli = std::getenv("NEGCYC_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd =
        std::string(cli) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("table csv output is exact and stable") {
    const RunResult r = run("table --max-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "n,count_neg_B,count_neg_D,count_neg_coset,count_pos_B,p,p_plus,p_minus,"
          "p_dec,p_plus_dec,p_minus_dec\n"
          "1,1,0,1,1,1/2,0/1,1/1,0.5,0.0,1.0\n"
          "2,3,1,2,3,3/8,1/4,1/2,0.375,0.25,0.5\n"
          "3,15,6,9,15,5/16,1/4,3/8,0.3125,0.25,0.375\n");
    CHECK(run("table --max-n 3").output == r.output);  // byte-identical rerun
}

TEST_CASE("table json and pretty") {
    const RunResult json = run("table --max-n 2 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.front() == '[');
    CHECK(json.output.find("\"n\":1") != std::string::npos);
    CHECK(json.output.find("\"p\":\"3/8\"") != std::string::npos);
    CHECK(json.output.rfind("]\n") == json.output.size() - 2);

    const RunResult pretty = run("table --max-n 2 --format pretty");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output.find("count_neg_B") != std::string::npos);
}

TEST_CASE("table flag validation") {
    CHECK(run("table --max-n 0").exit_code == 2);
    CHECK(run("table --max-n -3").exit_code == 2);
    CHECK(run("table --bogus").exit_code == 2);
    CHECK(run("table --format yaml").exit_code == 2);
}

TEST_CASE("verify passes and reports records") {
    const RunResult r = run("verify --max-n-counts 4 --max-n-lemma 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("check,n,pass,detail") != std::string::npos);
    CHECK(r.output.find("counts,4,true") != std::string::npos);
    CHECK(r.output.find("lemma,4,true") != std::string::npos);
    CHECK(r.output.find("flip_bijection,4,true") != std::string::npos);
    // counts detail carries the enumerated values
    CHECK(r.output.find("neg_B=105 neg_D=45 neg_coset=60 pos_B=105") != std::string::npos);
}

TEST_CASE("verify cap handling") {
    const RunResult over = run("verify --max-n-counts 9", true);
    CHECK(over.exit_code == 2);
    CHECK(over.output.find("cap 8") != std::string::npos);
    const RunResult lemma_over = run("verify --max-n-lemma 7", true);
    CHECK(lemma_over.exit_code == 2);
    CHECK(lemma_over.output.find("cap 6") != std::string::npos);
}

TEST_CASE("sample subcommand") {
    const RunResult r = run("sample --group B --n 1 --trials 200000 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("selector,n,trials,hits,estimate,exact,ci_low,ci_high,seed,z_score") !=
          std::string::npos);
    CHECK(r.output.find("B,1,200000,") != std::string::npos);
    CHECK(run("sample --group B --n 1 --trials 200000 --seed 7").output == r.output);
    // worker count must not alter the report
    CHECK(run("sample --group B --n 1 --trials 200000 --seed 7 --threads 3").output == r.output);

    const RunResult d1 = run("sample --group D --n 1 --trials 1000 --format json");
    CHECK(d1.exit_code == 0);
    CHECK(d1.output.find("\"hits\":0") != std::string::npos);
    CHECK(d1.output.find("\"exact\":\"0/1\"") != std::string::npos);

    CHECK(run("sample --group B --n 0 --trials 10").exit_code == 2);
    CHECK(run("sample --group E --n 2 --trials 10").exit_code == 2);
    CHECK(run("sample --trials 10").exit_code == 2);  // --n is required
}

TEST_CASE("bound subcommand") {
    const RunResult r = run("bound --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n,p,p_dec,h_lo,h_hi,ratio_lo,ratio_hi,verdict,precision_bits") !=
          std::string::npos);
    CHECK(r.output.find("1,1/2,0.5,0.58983456461810884544,0.58983456461810884545,") !=
          std::string::npos);
    CHECK(r.output.find("certified_true,128") != std::string::npos);

    const RunResult grid = run("bound --max 100 --log-steps 3");
    CHECK(grid.exit_code == 0);
    CHECK(grid.output.find("\n1,") != std::string::npos);
    CHECK(grid.output.find("\n10,") != std::string::npos);
    CHECK(grid.output.find("\n100,") != std::string::npos);

    const RunResult multi = run("bound --n 2 --n 5 --format json");
    CHECK(multi.exit_code == 0);
    CHECK(multi.output.find("\"n\":2") != std::string::npos);
    CHECK(multi.output.find("\"n\":5") != std::string::npos);

    const RunResult pretty = run("bound --n 1 --format pretty");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output.find("verdict") != std::string::npos);

    CHECK(run("bound --n 0").exit_code == 2);
}

TEST_CASE("verify json format") {
    const RunResult r = run("verify --max-n-counts 2 --max-n-lemma 2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.front() == '[');
    CHECK(r.output.find("{\"check\":\"counts\",\"n\":1,\"pass\":true,") != std::string::npos);
    CHECK(r.output.find("{\"check\":\"lemma\",\"n\":2,\"pass\":true,") != std::string::npos);
    CHECK(r.output.find("{\"check\":\"flip_bijection\",\"n\":2,\"pass\":true,") != std::string::npos);
}

TEST_CASE("top-level usage") {
    CHECK(run("").exit_code == 2);
    CHECK(run("unknown-subcommand").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("table --help").exit_code == 0);
}
