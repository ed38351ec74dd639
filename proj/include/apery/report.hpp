#ifndef APERY_REPORT_HPP
#define APERY_REPORT_HPP

#include <string>
#include <vector>

#include "apery/analytic.hpp"
#include "apery/forms.hpp"

namespace apery {

/// One verification check, tagged with the anchor id that machine-readable
/// reports key on ("Eq6", "Eq10", "Eq14", "Lemma7", ...).
struct CheckResult {
    std::string id;
    long n = -1;  // -1 for rows that are not per-n
    bool pass = false;
    std::string detail;
};

struct VerifySuite {
    long n_max = 0;
    long digits = 0;
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

/// Exact suites (seeds, telescoping, certificate fits, integrality,
/// vanishing sums, recurrence windows, growth bound) plus the coincidence
/// suite with its numeric cross-check. Failures are reported, not thrown.
VerifySuite run_verify_suite(long n_max, long digits);

struct TableRow {
    long n = 0;
    BigRat u;
    BigRat v;
    BigInt D;
    DecInterval F;       // linear route at the table's precision
    DecInterval lemma4;  // 20 (n+1)^4 (17 - 12 sqrt2)^n
};

std::vector<TableRow> build_table(long n_max, long digits);

struct FitRow {
    long n = 0;
    bool apery_match = false;
    bool ball_match = false;
    std::string fitted_apery;
    std::string closed_apery;
    std::string fitted_ball;
    std::string transcribed_ball;
};

std::vector<FitRow> build_fit(long n_max);

enum class ReportFormat { csv, json, text };

std::string render_table(const std::vector<TableRow>& rows, long digits, ReportFormat fmt);
std::string render_verify(const VerifySuite& suite, ReportFormat fmt);
std::string render_gate(const GateScan& scan, long n_max, long digits, ReportFormat fmt);
std::string render_eval(long n, long digits, const EvalPair& apery_routes, const EvalPair& ball_routes,
                        ReportFormat fmt);
std::string render_fit(const std::vector<FitRow>& rows, ReportFormat fmt);

}  // namespace apery

#endif
