#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gnp/narayana.hpp"
#include "gnp/sweep.hpp"
#include "gnp/theorems.hpp"

namespace {

using gnp::Rational;

nlohmann::json rat_pair(const Rational& r) {
    return nlohmann::json::array({r.num().get_str(), r.den().get_str()});
}

nlohmann::json interval_json(const gnp::RootInterval& iv) {
    nlohmann::json j;
    j["lo"] = rat_pair(iv.lo);
    j["hi"] = rat_pair(iv.hi);
    j["exact"] = iv.exact ? rat_pair(*iv.exact) : nlohmann::json(nullptr);
    return j;
}

std::string approx_str(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", r.approx());
    return buf;
}

std::string interval_text(const gnp::RootInterval& iv) {
    if (iv.exact) return "exact " + iv.exact->str() + " ≈ " + approx_str(*iv.exact);
    return "in [" + iv.lo.str() + ", " + iv.hi.str() + "] ≈ " + approx_str(iv.midpoint());
}

gnp::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return gnp::OutputFormat::json;
    if (name == "csv") return gnp::OutputFormat::csv;
    return gnp::OutputFormat::text;
}

int emit(const std::string& body, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << *path << " for writing\n";
        return 2;
    }
    out << body;
    return 0;
}

int cmd_poly(long n, long m, const std::string& format) {
    const gnp::FamilyIndex idx{n, m};
    const gnp::Poly p = gnp::gn_poly(idx);
    switch (parse_format(format)) {
        case gnp::OutputFormat::text:
            std::cout << p.str() << "\n";
            break;
        case gnp::OutputFormat::json: {
            nlohmann::json j;
            j["n"] = n;
            j["m"] = m;
            nlohmann::json coeffs = nlohmann::json::array();
            for (const Rational& c : p.coeffs()) coeffs.push_back(rat_pair(c));
            j["coeffs"] = coeffs;
            std::cout << j.dump(2) << "\n";
            break;
        }
        case gnp::OutputFormat::csv: {
            std::cout << "k,num,den\n";
            for (std::size_t k = 0; k < p.coeffs().size(); ++k)
                std::cout << k << ',' << p.coeff(k).num().get_str() << ','
                          << p.coeff(k).den().get_str() << "\n";
            break;
        }
    }
    return 0;
}

int cmd_zero(long n, long m, unsigned bits, const std::string& format) {
    const gnp::FamilyIndex idx{n, m};
    if (n < m + 2) throw std::invalid_argument("zero: requires n >= m+2");
    const gnp::ZeroReport rep = gnp::build_zero_report(idx, bits);

    switch (parse_format(format)) {
        case gnp::OutputFormat::text: {
            std::cout << "N" << idx.str() << " = " << gnp::gn_poly(idx).str() << "\n";
            std::cout << "bracket: [" << rep.bracket.lower.str() << ", " << rep.bracket.upper.str()
                      << "]\n";
            std::cout << "positive zero: " << interval_text(rep.positive_zero) << "\n";
            std::cout << "negative zeros (" << rep.negative_zeros.size() << "):";
            for (const auto& iv : rep.negative_zeros) std::cout << " " << interval_text(iv) << ";";
            std::cout << "\n";
            std::cout << "checks:";
            for (const auto& [name, ok] : rep.checks)
                std::cout << " " << name << "=" << (ok ? "pass" : "fail");
            std::cout << "\n";
            std::cout << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
            break;
        }
        case gnp::OutputFormat::json: {
            nlohmann::json j;
            j["n"] = n;
            j["m"] = m;
            j["bracket"] = {{"lower", rat_pair(rep.bracket.lower)},
                            {"upper", rat_pair(rep.bracket.upper)}};
            j["positive_zero"] = interval_json(rep.positive_zero);
            j["positive_zero"]["width"] = rat_pair(rep.positive_zero.width());
            nlohmann::json negatives = nlohmann::json::array();
            for (const auto& iv : rep.negative_zeros) negatives.push_back(interval_json(iv));
            j["negative_zeros"] = negatives;
            nlohmann::json checks;
            for (const auto& [name, ok] : rep.checks) checks[name] = ok ? "pass" : "fail";
            j["checks"] = checks;
            j["all_pass"] = rep.all_pass();
            std::cout << j.dump(2) << "\n";
            break;
        }
        case gnp::OutputFormat::csv: {
            std::cout << "n,m,lower_num,lower_den,upper_num,upper_den,root_lo,root_hi,root_exact,"
                         "checks_passed\n";
            std::cout << n << ',' << m << ',' << rep.bracket.lower.num().get_str() << ','
                      << rep.bracket.lower.den().get_str() << ','
                      << rep.bracket.upper.num().get_str() << ','
                      << rep.bracket.upper.den().get_str() << ',' << rep.positive_zero.lo.str()
                      << ',' << rep.positive_zero.hi.str() << ','
                      << (rep.positive_zero.exact ? rep.positive_zero.exact->str() : "") << ','
                      << (rep.all_pass() ? "true" : "false") << "\n";
            break;
        }
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_verify(const gnp::SweepConfig& config) {
    const gnp::SweepReport report = gnp::run_sweep(config);
    const int emit_rc = emit(gnp::render(report, config.format), config.output_path);
    if (emit_rc != 0) return emit_rc;
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certified zero verification for the generalized "
                 "Narayana polynomial family"};
    app.require_subcommand(1);

    long n = 0;
    long m = 0;
    unsigned bits = 64;
    std::string format = "text";

    auto* poly_cmd = app.add_subcommand("poly", "print N(n,m) with exact coefficients");
    poly_cmd->add_option("--n", n, "family index n")->required()->check(CLI::NonNegativeNumber);
    poly_cmd->add_option("--m", m, "family index m")->required()->check(CLI::NonNegativeNumber);
    poly_cmd->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* zero_cmd =
        app.add_subcommand("zero", "certified zero report for N(n,m), requires n >= m+2");
    zero_cmd->add_option("--n", n, "family index n")->required()->check(CLI::NonNegativeNumber);
    zero_cmd->add_option("--m", m, "family index m")->required()->check(CLI::NonNegativeNumber);
    zero_cmd->add_option("--bits", bits, "relative enclosure width 2^-bits")
        ->check(CLI::PositiveNumber);
    zero_cmd->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    gnp::SweepConfig config;
    std::vector<std::string> check_tokens;
    std::string out_path;
    std::string epsilon_str;
    auto* verify_cmd = app.add_subcommand("verify", "run theorem checks over an (n,m) grid");
    verify_cmd->add_option("--checks", check_tokens,
                           "comma-separated subset of bounds,census,chu,interlace,monotonic,"
                           "proposition,recurrence,signs (default: all)")
        ->delimiter(',');
    verify_cmd->add_option("--m-min", config.m_min, "smallest m")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--m-max", config.m_max, "largest m")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--n-offset-max", config.n_offset_max, "n ranges up to m + this offset")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--bits", config.bits, "relative enclosure width 2^-bits")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
    verify_cmd->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_option("--parallelism", config.parallelism, "worker count for grid cells")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--epsilon", epsilon_str,
                           "rational NUM/DEN; proposition additionally checks that the final "
                           "upper bound is below it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (poly_cmd->parsed()) return cmd_poly(n, m, format);
        if (zero_cmd->parsed()) return cmd_zero(n, m, bits, format);

        if (!check_tokens.empty()) {
            config.checks.clear();
            for (const std::string& token : check_tokens) {
                const auto kind = gnp::parse_check(token);
                if (!kind) {
                    std::cerr << "error: unknown check '" << token << "'\n";
                    return 2;
                }
                config.checks.insert(*kind);
            }
        }
        if (!out_path.empty()) config.output_path = out_path;
        if (!epsilon_str.empty()) {
            const auto eps = Rational::parse(epsilon_str);
            if (!eps || eps->sign() <= 0) {
                std::cerr << "error: --epsilon must be a positive rational NUM/DEN\n";
                return 2;
            }
            config.epsilon = *eps;
        }
        config.format = parse_format(format);
        config.validate();
        return cmd_verify(config);
    } catch (const gnp::theorem_violation& e) {
        std::cerr << "finding: " << e.what() << "\n";
        return 1;
    } catch (const gnp::non_squarefree_error& e) {
        std::cerr << "finding: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
