#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gnp/rational.hpp"
#include "gnp/theorems.hpp"

namespace gnp {

/// The verifiable claims, by CLI token.
enum class CheckKind {
    bounds,       // two-sided bound on the positive zero
    census,       // squarefree, degree, 1 positive + m negative roots
    chu,          // N_{m+2,m}(1) == 0
    interlace,    // negative zeros of N_{n,m} and N_{n+1,m+1} interlace
    monotonic,    // the three zero-monotonicity inequalities
    proposition,  // zeros in (0, 1/3] and vanishing upper bounds
    recurrence,   // the three-term recurrence is the zero polynomial
    signs,        // sign of N is determined by the side of the zero
};

std::string to_string(CheckKind c);
std::optional<CheckKind> parse_check(const std::string& token);
const std::set<CheckKind>& all_checks();

enum class OutputFormat { text, json, csv };

/// Grid sweep configuration. For each m in [m_min, m_max], n ranges over the
/// regime appropriate to each check, capped at m + n_offset_max.
struct SweepConfig {
    long m_min = 0;
    long m_max = 10;
    long n_offset_max = 20;
    unsigned bits = 64;
    std::set<CheckKind> checks = all_checks();
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> output_path;
    unsigned parallelism = 1;
    std::optional<Rational> epsilon;  // optional decay target for `proposition`

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

struct SweepRow {
    long m = 0;
    long n = 0;
    CheckKind check = CheckKind::recurrence;
    Verdict verdict = Verdict::undecided;
    std::string witness;
};

struct CheckCounts {
    long pass = 0;
    long fail = 0;
    long undecided = 0;
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepRow> rows;  // sorted by (m, n, check token)

    CheckCounts counts_for(CheckKind c) const;
    CheckCounts totals() const;
    bool all_pass() const;
    /// 0 when everything passed; 1 on any failure or undecided verdict.
    int exit_code() const { return all_pass() ? 0 : 1; }
};

/// Runs the configured checks over the grid. Cells are independent pure
/// computations and are distributed over `parallelism` workers; the report is
/// identical regardless of worker count.
SweepReport run_sweep(const SweepConfig& config);

std::string render_text(const SweepReport& report);
/// Deterministic: sorted rows, sorted keys, no floating point, and no
/// run-dependent fields (parallelism and output path are omitted).
std::string render_json(const SweepReport& report);
std::string render_csv(const SweepReport& report);
std::string render(const SweepReport& report, OutputFormat format);

}  // namespace gnp
