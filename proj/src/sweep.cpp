#include "gnp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace gnp {

std::string to_string(CheckKind c) {
    switch (c) {
        case CheckKind::bounds: return "bounds";
        case CheckKind::census: return "census";
        case CheckKind::chu: return "chu";
        case CheckKind::interlace: return "interlace";
        case CheckKind::monotonic: return "monotonic";
        case CheckKind::proposition: return "proposition";
        case CheckKind::recurrence: return "recurrence";
        case CheckKind::signs: return "signs";
    }
    return "unknown";
}

std::optional<CheckKind> parse_check(const std::string& token) {
    for (CheckKind c : all_checks())
        if (to_string(c) == token) return c;
    return std::nullopt;
}

const std::set<CheckKind>& all_checks() {
    static const std::set<CheckKind> all = {
        CheckKind::bounds,    CheckKind::census,      CheckKind::chu,
        CheckKind::interlace, CheckKind::monotonic,   CheckKind::proposition,
        CheckKind::recurrence, CheckKind::signs,
    };
    return all;
}

void SweepConfig::validate() const {
    if (m_min < 0) throw std::invalid_argument("config: m_min must be >= 0");
    if (m_min > m_max) throw std::invalid_argument("config: m_min must be <= m_max");
    if (n_offset_max < 1) throw std::invalid_argument("config: n_offset_max must be >= 1");
    if (bits < 1) throw std::invalid_argument("config: bits must be >= 1");
    if (checks.empty()) throw std::invalid_argument("config: checks must be nonempty");
    if (parallelism < 1) throw std::invalid_argument("config: parallelism must be >= 1");
    if (epsilon && epsilon->sign() <= 0)
        throw std::invalid_argument("config: epsilon must be positive");
}

namespace {

struct Cell {
    CheckKind check;
    long m;
    long n;
};

std::vector<Cell> enumerate_cells(const SweepConfig& cfg) {
    std::vector<Cell> cells;
    for (long m = cfg.m_min; m <= cfg.m_max; ++m) {
        const long n_max = m + cfg.n_offset_max;
        for (CheckKind c : cfg.checks) {
            switch (c) {
                case CheckKind::recurrence:
                    for (long n = 1; n <= n_max; ++n) cells.push_back({c, m, n});
                    break;
                case CheckKind::chu:
                    cells.push_back({c, m, m + 2});
                    break;
                case CheckKind::bounds:
                case CheckKind::monotonic:
                    for (long n = m + 3; n <= n_max; ++n) cells.push_back({c, m, n});
                    break;
                case CheckKind::signs:
                case CheckKind::interlace:
                case CheckKind::census:
                    for (long n = m + 2; n <= n_max; ++n) cells.push_back({c, m, n});
                    break;
                case CheckKind::proposition:
                    if (n_max >= m + 3) cells.push_back({c, m, n_max});
                    break;
            }
        }
    }
    return cells;
}

SweepRow run_cell(const SweepConfig& cfg, const Cell& cell) {
    SweepRow row{cell.m, cell.n, cell.check, Verdict::fail, {}};
    try {
        const FamilyIndex idx{cell.n, cell.m};
        switch (cell.check) {
            case CheckKind::recurrence: {
                const RecurrenceCoeffs rc = recurrence_coeffs(idx);
                const Poly residual = rc.c * gn_poly({idx.n, idx.m + 1}) - rc.a * gn_poly(idx) -
                                      rc.b * gn_poly({idx.n - 1, idx.m});
                row.verdict = residual.is_zero() ? Verdict::pass : Verdict::fail;
                row.witness = "residual=" + residual.str();
                break;
            }
            case CheckKind::chu: {
                const Rational value = gn_poly(idx).eval(Rational(1));
                row.verdict = value.is_zero() ? Verdict::pass : Verdict::fail;
                row.witness = "N" + idx.str() + "(1)=" + value.str();
                break;
            }
            case CheckKind::bounds: {
                const CheckResult r = verify_bounds(idx);
                row.verdict = r.verdict;
                row.witness = r.witness;
                break;
            }
            case CheckKind::signs: {
                const auto zero = certified_positive_zero(idx, cfg.bits);
                const auto samples = default_sign_samples(zero);
                const CheckResult r = verify_sign_lemma(idx, samples, cfg.bits);
                row.verdict = r.verdict;
                row.witness = r.witness;
                break;
            }
            case CheckKind::monotonic: {
                const MonotonicityResult r = verify_monotonicity(cell.m, cell.n, cfg.bits);
                row.verdict = r.overall();
                row.witness = r.witness();
                break;
            }
            case CheckKind::interlace: {
                const CheckResult r = verify_interlacing(idx, cfg.bits);
                row.verdict = r.verdict;
                row.witness = r.witness;
                break;
            }
            case CheckKind::census: {
                const CheckResult r = verify_census(idx, cfg.bits);
                row.verdict = r.verdict;
                row.witness = r.witness;
                break;
            }
            case CheckKind::proposition: {
                const CheckResult r = verify_proposition(cell.m, cell.n, cfg.bits, cfg.epsilon);
                row.verdict = r.verdict;
                row.witness = r.witness;
                break;
            }
        }
    } catch (const std::exception& e) {
        row.verdict = Verdict::fail;
        row.witness = std::string("error: ") + e.what();
    }
    return row;
}

}  // namespace

CheckCounts SweepReport::counts_for(CheckKind c) const {
    CheckCounts counts;
    for (const SweepRow& row : rows) {
        if (row.check != c) continue;
        switch (row.verdict) {
            case Verdict::pass: ++counts.pass; break;
            case Verdict::fail: ++counts.fail; break;
            case Verdict::undecided: ++counts.undecided; break;
        }
    }
    return counts;
}

CheckCounts SweepReport::totals() const {
    CheckCounts counts;
    for (const SweepRow& row : rows) {
        switch (row.verdict) {
            case Verdict::pass: ++counts.pass; break;
            case Verdict::fail: ++counts.fail; break;
            case Verdict::undecided: ++counts.undecided; break;
        }
    }
    return counts;
}

bool SweepReport::all_pass() const {
    const CheckCounts t = totals();
    return t.fail == 0 && t.undecided == 0;
}

SweepReport run_sweep(const SweepConfig& config) {
    config.validate();
    const std::vector<Cell> cells = enumerate_cells(config);

    SweepReport report{config, std::vector<SweepRow>(cells.size())};
    if (config.parallelism <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) report.rows[i] = run_cell(config, cells[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < cells.size();)
                report.rows[i] = run_cell(config, cells[i]);
        };
        const std::size_t n_threads = std::min<std::size_t>(config.parallelism, cells.size());
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // deterministic emission order regardless of worker scheduling
    std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.n != b.n) return a.n < b.n;
        return to_string(a.check) < to_string(b.check);
    });
    return report;
}

std::string render_text(const SweepReport& report) {
    std::ostringstream os;
    const SweepConfig& cfg = report.config;
    os << "verify sweep: m in [" << cfg.m_min << "," << cfg.m_max << "], n <= m+" << cfg.n_offset_max
       << ", bits=" << cfg.bits << "\n";
    os << "check        pass  fail  undecided\n";
    for (CheckKind c : cfg.checks) {
        const CheckCounts counts = report.counts_for(c);
        os << to_string(c);
        for (std::size_t pad = to_string(c).size(); pad < 13; ++pad) os << ' ';
        os << counts.pass << "  " << counts.fail << "  " << counts.undecided << "\n";
    }
    const CheckCounts t = report.totals();
    os << "total        " << t.pass << "  " << t.fail << "  " << t.undecided << "\n";

    bool header_printed = false;
    for (const SweepRow& row : report.rows) {
        if (row.verdict == Verdict::pass) continue;
        if (!header_printed) {
            os << "problems:\n";
            header_printed = true;
        }
        os << "  m=" << row.m << " n=" << row.n << " " << to_string(row.check) << " "
           << to_string(row.verdict) << ": " << row.witness << "\n";
    }
    os << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_json(const SweepReport& report) {
    nlohmann::json j;
    const SweepConfig& cfg = report.config;
    j["all_pass"] = report.all_pass();

    nlohmann::json jc;
    jc["bits"] = cfg.bits;
    jc["m_min"] = cfg.m_min;
    jc["m_max"] = cfg.m_max;
    jc["n_offset_max"] = cfg.n_offset_max;
    std::vector<std::string> tokens;
    for (CheckKind c : cfg.checks) tokens.push_back(to_string(c));
    jc["checks"] = tokens;
    if (cfg.epsilon)
        jc["epsilon"] = {cfg.epsilon->num().get_str(), cfg.epsilon->den().get_str()};
    j["config"] = jc;

    nlohmann::json results = nlohmann::json::array();
    for (const SweepRow& row : report.rows) {
        results.push_back({{"m", row.m},
                           {"n", row.n},
                           {"check", to_string(row.check)},
                           {"status", to_string(row.verdict)},
                           {"witness", row.witness}});
    }
    j["results"] = results;

    nlohmann::json summary;
    for (CheckKind c : cfg.checks) {
        const CheckCounts counts = report.counts_for(c);
        summary[to_string(c)] = {{"pass", counts.pass},
                                 {"fail", counts.fail},
                                 {"undecided", counts.undecided}};
    }
    const CheckCounts t = report.totals();
    summary["total"] = {{"pass", t.pass}, {"fail", t.fail}, {"undecided", t.undecided}};
    j["summary"] = summary;

    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string render_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "m,n,check,status,witness\n";
    for (const SweepRow& row : report.rows)
        os << row.m << ',' << row.n << ',' << to_string(row.check) << ',' << to_string(row.verdict)
           << ',' << csv_escape(row.witness) << "\n";
    return os.str();
}

std::string render(const SweepReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return render_text(report);
        case OutputFormat::json: return render_json(report);
        case OutputFormat::csv: return render_csv(report);
    }
    return render_text(report);
}

}  // namespace gnp
