// End-to-end tests of the gnp binary: exit codes, exact text output, and the
// machine formats. The binary path arrives in argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "json.hpp"

#include "gnp/rational.hpp"

namespace {

int g_failures = 0;

#define REQUIRE_MSG(cond, msg)                                              \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " "    \
                      << (msg) << "\n";                                     \
            ++g_failures;                                                   \
        }                                                                   \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-gnp-binary>\n";
        return 1;
    }
    const std::string cli = argv[1];

    // poly: exact text rendering
    auto r = run(cli + " poly --n 5 --m 1");
    REQUIRE_MSG(r.exit_code == 0, "poly exit code");
    REQUIRE_MSG(r.output == "1 - 5*x - 10*x^2\n", "poly 5 1 text, got: " + r.output);

    r = run(cli + " poly --n 3 --m 2");
    REQUIRE_MSG(r.output == "1 + 3*x + 1*x^2\n", "poly 3 2 text, got: " + r.output);

    // poly: json coefficients are decimal string pairs
    r = run(cli + " poly --n 2 --m 0 --format json");
    REQUIRE_MSG(r.exit_code == 0, "poly json exit code");
    {
        const auto j = nlohmann::json::parse(r.output);
        REQUIRE_MSG(j["n"] == 2 && j["m"] == 0, "poly json indices");
        const auto expected = nlohmann::json::parse(R"([["1","1"],["-1","1"]])");
        REQUIRE_MSG(j["coeffs"] == expected, "poly json coeffs, got: " + j["coeffs"].dump());
    }

    // poly: csv rows are dense ascending k,num,den
    r = run(cli + " poly --n 5 --m 2 --format csv");
    REQUIRE_MSG(r.output == "k,num,den\n0,1,1\n1,0,1\n2,-10,1\n3,-5,1\n", "poly csv, got: " + r.output);

    // zero: exact rational root in csv with the fixed header
    r = run(cli + " zero --n 6 --m 0 --format csv");
    REQUIRE_MSG(r.exit_code == 0, "zero 6 0 exit code");
    {
        const std::string header =
            "n,m,lower_num,lower_den,upper_num,upper_den,root_lo,root_hi,root_exact,checks_passed";
        REQUIRE_MSG(r.output.rfind(header + "\n", 0) == 0, "zero csv header, got: " + r.output);
        REQUIRE_MSG(r.output.find(",1/15,1/15,1/15,true") != std::string::npos,
                    "zero 6 0 exact root 1/15, got: " + r.output);
    }

    // zero: vanishing-diagonal root is exactly 1
    r = run(cli + " zero --n 4 --m 2 --format json");
    REQUIRE_MSG(r.exit_code == 0, "zero 4 2 exit code");
    {
        const auto j = nlohmann::json::parse(r.output);
        const auto one = nlohmann::json::parse(R"(["1","1"])");
        REQUIRE_MSG(j["positive_zero"]["exact"] == one, "zero 4 2 exact");
        REQUIRE_MSG(j["negative_zeros"].size() == 2, "zero 4 2 negative count");
        REQUIRE_MSG(j["all_pass"] == true, "zero 4 2 checks");
    }

    // zero: requested precision is honored
    r = run(cli + " zero --n 5 --m 1 --bits 20 --format csv");
    REQUIRE_MSG(r.exit_code == 0, "zero 5 1 exit code");
    {
        std::string row = r.output.substr(r.output.find('\n') + 1);
        std::string fields[10];
        for (auto& field : fields) {
            const auto comma = row.find(',');
            field = row.substr(0, comma);
            row = comma == std::string::npos ? "" : row.substr(comma + 1);
        }
        const auto lo = gnp::Rational::parse(fields[6]);
        const auto hi = gnp::Rational::parse(fields[7]);
        REQUIRE_MSG(lo && hi, "zero 5 1 csv root fields");
        if (lo && hi) {
            REQUIRE_MSG(*hi - *lo <= gnp::Rational(1, 42).div_pow2(20), "zero 5 1 width");
            REQUIRE_MSG(gnp::Rational(1, 7) <= *lo && *hi <= gnp::Rational(1, 6),
                        "zero 5 1 root inside bracket");
        }
        REQUIRE_MSG(fields[8].empty(), "zero 5 1 has no exact root");
        REQUIRE_MSG(fields[2] == "1" && fields[3] == "7", "zero 5 1 lower bound fields");
    }

    // regime violations and usage errors exit 2
    REQUIRE_MSG(run(cli + " zero --n 3 --m 2").exit_code == 2, "zero below regime exits 2");
    REQUIRE_MSG(run(cli + " poly --n -1 --m 0").exit_code == 2, "negative n exits 2");
    REQUIRE_MSG(run(cli + " poly --m 0").exit_code == 2, "missing --n exits 2");
    REQUIRE_MSG(run(cli).exit_code == 2, "missing subcommand exits 2");
    REQUIRE_MSG(run(cli + " verify --checks bogus --m-max 1").exit_code == 2,
                "unknown check exits 2");
    REQUIRE_MSG(run(cli + " verify --m-min 4 --m-max 2").exit_code == 2,
                "inconsistent m range exits 2");

    // verify: a small passing sweep and a failing epsilon decay target
    r = run(cli + " verify --checks chu,recurrence --m-max 5 --n-offset-max 8");
    REQUIRE_MSG(r.exit_code == 0, "small verify exits 0");
    REQUIRE_MSG(r.output.find("result: PASS") != std::string::npos, "small verify text");

    r = run(cli + " verify --checks proposition --m-max 0 --n-offset-max 5 --epsilon 1/1000000");
    REQUIRE_MSG(r.exit_code == 1, "unmet epsilon exits 1");

    // verify: json format is parseable and carries the sorted results
    r = run(cli + " verify --checks bounds --m-max 1 --n-offset-max 5 --format json");
    REQUIRE_MSG(r.exit_code == 0, "verify json exit code");
    {
        const auto j = nlohmann::json::parse(r.output);
        REQUIRE_MSG(j["all_pass"] == true, "verify json all_pass");
        REQUIRE_MSG(j["results"].size() == 6, "verify json row count");  // n=3..5 and n=4..6
        REQUIRE_MSG(j["summary"]["bounds"]["fail"] == 0, "verify json summary");
    }

    if (g_failures == 0) {
        std::cout << "cli tests: all passed\n";
        return 0;
    }
    std::cout << "cli tests: " << g_failures << " FAILED\n";
    return 1;
}
