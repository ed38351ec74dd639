#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <limits>
#include <iostream>
#include <string>

#include "apery/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    long n_max = 10;
    long digits = 30;
    long q = 1;
    apery::ReportFormat format = apery::ReportFormat::text;
    std::string output_path;
};

// Writes to --out when given, stdout otherwise. Same bytes either way.
int emit(const RunConfig& cfg, const std::string& report) {
    if (cfg.output_path.empty()) {
        std::cout << report;
        return kExitOk;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "apery: cannot open " << cfg.output_path << " for writing\n";
        return kExitUsage;
    }
    out << report;
    return out.good() ? kExitOk : kExitVerifyFail;
}

int run(const RunConfig& cfg) {
    using namespace apery;
    if (cfg.command == "table") {
        const auto rows = build_table(cfg.n_max, cfg.digits);
        return emit(cfg, render_table(rows, cfg.digits, cfg.format));
    }
    if (cfg.command == "verify") {
        const VerifySuite suite = run_verify_suite(cfg.n_max, cfg.digits);
        const int e = emit(cfg, render_verify(suite, cfg.format));
        if (e != kExitOk) return e;
        return suite.all_pass ? kExitOk : kExitVerifyFail;
    }
    if (cfg.command == "eval") {
        const EvalPair ap = eval_form_both(FormKind::apery, cfg.n_max, cfg.digits);
        const EvalPair bl = eval_form_both(FormKind::ball, cfg.n_max, cfg.digits);
        const int e = emit(cfg, render_eval(cfg.n_max, cfg.digits, ap, bl, cfg.format));
        if (e != kExitOk) return e;
        return ap.agree && bl.agree ? kExitOk : kExitVerifyFail;
    }
    if (cfg.command == "gate") {
        const GateScan scan = irrationality_gate(cfg.n_max, cfg.q, cfg.digits);
        const int e = emit(cfg, render_gate(scan, cfg.n_max, cfg.digits, cfg.format));
        if (e != kExitOk) return e;
        bool ok = scan.constant_below_one && scan.constant_starts_0_7948;
        for (const auto& r : scan.reports) ok = ok && r.positive && r.below_bound;
        return ok ? kExitOk : kExitVerifyFail;
    }
    if (cfg.command == "fit") {
        const auto rows = build_fit(cfg.n_max);
        const int e = emit(cfg, render_fit(rows, cfg.format));
        if (e != kExitOk) return e;
        for (const auto& r : rows)
            if (!r.apery_match || !r.ball_match) return kExitVerifyFail;
        return kExitOk;
    }
    std::cerr << "apery: unknown command " << cfg.command << "\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string format_name = "text";

    CLI::App app{"Exact linear forms in zeta(3): tables, verification, evaluation, gate report"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // integer Range validators so rejection messages quote integer bounds
    const auto nonneg = CLI::Range(0L, std::numeric_limits<long>::max());
    const auto positive = CLI::Range(1L, std::numeric_limits<long>::max());

    auto add_common = [&](CLI::App* sub, const char* n_help) {
        sub->add_option("--n-max", cfg.n_max, n_help)->check(nonneg);
        sub->add_option("--digits", cfg.digits, "decimal digits of certified precision")
            ->check(positive);
        sub->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--out", cfg.output_path, "write the report to PATH instead of stdout");
    };

    add_common(app.add_subcommand("table", "per-n table of u_n, v_n, D_n, F_n and the growth bound"),
               "largest n in the table");
    add_common(app.add_subcommand("verify", "run the exact and numeric verification suites"),
               "largest n covered by the suites");
    add_common(app.add_subcommand("eval", "evaluate both forms at one n through both routes"),
               "the single n to evaluate");
    CLI::App* gate = app.add_subcommand("gate", "per-n gate reports and the threshold scans");
    add_common(gate, "largest n reported (scans may go further)");
    gate->add_option("--q", cfg.q, "positive integer multiplier q")->check(positive);
    add_common(app.add_subcommand("fit", "recover certificate prefactors and compare"),
               "largest n fitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (format_name == "csv") cfg.format = apery::ReportFormat::csv;
    else if (format_name == "json") cfg.format = apery::ReportFormat::json;
    if (cfg.command == "gate" && cfg.n_max < 2) {
        std::cerr << "apery: gate requires --n-max >= 2\n";
        return kExitUsage;
    }
    if (cfg.command == "fit" && cfg.n_max < 1) {
        std::cerr << "apery: fit requires --n-max >= 1\n";
        return kExitUsage;
    }

    try {
        return run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "apery: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
