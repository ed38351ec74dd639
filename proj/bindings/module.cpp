#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "apery/apery_form.hpp"
#include "apery/ball_form.hpp"
#include "apery/report.hpp"

namespace py = pybind11;

namespace {

apery::FormKind parse_kind(const std::string& kind) {
    if (kind == "apery") return apery::FormKind::apery;
    if (kind == "ball") return apery::FormKind::ball;
    throw py::value_error("kind must be 'apery' or 'ball'");
}

apery::ReportFormat parse_format(const std::string& fmt) {
    if (fmt == "csv") return apery::ReportFormat::csv;
    if (fmt == "json") return apery::ReportFormat::json;
    if (fmt == "text") return apery::ReportFormat::text;
    throw py::value_error("format must be 'csv', 'json' or 'text'");
}

py::dict interval_dict(const apery::DecInterval& v, long digits) {
    py::dict d;
    d["value"] = v.to_string(digits);
    d["error"] = v.error_string(digits);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace apery;
    m.doc() = "Exact linear forms in zeta(3): exact constructions, certified evaluation, reports";

    m.def(
        "zeta3", [](long digits) { return zeta3(digits).to_string(digits); }, py::arg("digits"),
        "Decimal expansion of zeta(3), truncated toward zero after `digits` digits; "
        "every printed digit is certified by the underlying enclosure.");

    m.def(
        "linear_form",
        [](const std::string& kind, long n) {
            const FormKind k = parse_kind(kind);
            const LinearForm f = k == FormKind::ball ? ball_uv(n) : apery_uv(n);
            py::dict d;
            d["n"] = f.n;
            d["kind"] = kind;
            d["u_num"] = f.u.numerator().get_str();
            d["u_den"] = f.u.denominator().get_str();
            d["v_num"] = f.v.numerator().get_str();
            d["v_den"] = f.v.denominator().get_str();
            return d;
        },
        py::arg("kind"), py::arg("n"),
        "Exact rational coefficients (u_n, v_n) of the linear form u_n zeta(3) - v_n.");

    m.def(
        "eval_form",
        [](const std::string& kind, long n, long digits) {
            const FormKind k = parse_kind(kind);
            const EvalPair p = eval_form_both(k, n, digits);
            const DecInterval v = eval_form(k, n, digits);
            py::dict d;
            d["n"] = n;
            d["kind"] = kind;
            d["value"] = v.to_string(digits);
            d["error"] = v.error_string(digits);
            d["linear"] = interval_dict(p.linear, digits);
            d["series"] = interval_dict(p.series, digits);
            d["agree"] = p.agree;
            return d;
        },
        py::arg("kind"), py::arg("n"), py::arg("digits"),
        "Certified value of the form at n through two independent routes.");

    m.def(
        "verify",
        [](long n_max, long digits) {
            const VerifySuite s = run_verify_suite(n_max, digits);
            py::list checks;
            for (const auto& c : s.checks) {
                py::dict r;
                r["id"] = c.id;
                r["n"] = c.n;
                r["pass"] = c.pass;
                r["detail"] = c.detail;
                checks.append(r);
            }
            py::dict d;
            d["n_max"] = s.n_max;
            d["digits"] = s.digits;
            d["all_pass"] = s.all_pass;
            d["checks"] = checks;
            return d;
        },
        py::arg("n_max"), py::arg("digits") = 30,
        "Run the exact and numeric verification suites up to n_max.");

    m.def(
        "gate",
        [](long n_max, long q, long digits) {
            const GateScan s = irrationality_gate(n_max, q, digits);
            py::list reports;
            for (const auto& r : s.reports) {
                py::dict row;
                row["n"] = r.n;
                row["D"] = r.D_n.get_str();
                row["gate_value"] = r.gate_value.to_string(digits);
                row["gate_error"] = r.gate_value.error_string(digits);
                row["bound15"] = r.bound15.to_string(12);
                row["positive"] = r.positive;
                row["below_bound"] = r.below_bound;
                row["below_one"] = r.below_one;
                reports.append(row);
            }
            py::dict d;
            d["q"] = s.q.get_str();
            d["gate_constant"] = s.gate_constant.to_string(10);
            d["constant_below_one"] = s.constant_below_one;
            d["constant_prefix_ok"] = s.constant_starts_0_7948;
            d["first_bound_below_one"] = s.first_bound_below_one;
            d["first_true_below_one"] = s.first_true_below_one;
            d["reports"] = reports;
            return d;
        },
        py::arg("n_max"), py::arg("q") = 1, py::arg("digits") = 15,
        "Per-n gate reports plus the exact first-n threshold scans.");

    m.def(
        "fit",
        [](long n_max) {
            py::list rows;
            for (const FitRow& r : build_fit(n_max)) {
                py::dict d;
                d["n"] = r.n;
                d["apery_match"] = r.apery_match;
                d["ball_match"] = r.ball_match;
                d["fitted_apery"] = r.fitted_apery;
                d["closed_apery"] = r.closed_apery;
                d["fitted_ball"] = r.fitted_ball;
                d["transcribed_ball"] = r.transcribed_ball;
                rows.append(d);
            }
            return rows;
        },
        py::arg("n_max"),
        "Recover both certificate prefactors per n and compare with the closed forms.");

    m.def(
        "table",
        [](long n_max, long digits, const std::string& fmt) {
            return render_table(build_table(n_max, digits), digits, parse_format(fmt));
        },
        py::arg("n_max"), py::arg("digits") = 30, py::arg("format") = "csv",
        "Rendered per-n table of u_n, v_n, D_n, F_n and the growth bound.");

    m.def(
        "certificate",
        [](const std::string& kind, long n) {
            return parse_kind(kind) == FormKind::apery ? certificate_s(n).prefactor_num.str("t")
                                                       : ball_certificate(n).prefactor_num.str("t");
        },
        py::arg("kind"), py::arg("n"), "Closed-form certificate prefactor polynomial at n.");
}
