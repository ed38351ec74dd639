#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "apery/report.hpp"

using namespace apery;

TEST_CASE("verify suite passes and covers every check family") {
    const VerifySuite s = run_verify_suite(5, 20);
    CHECK(s.all_pass);
    CHECK(s.n_max == 5);
    CHECK(s.digits == 20);

    std::map<std::string, int> count;
    for (const auto& c : s.checks) {
        CHECK(c.pass);
        ++count[c.id];
    }
    const std::set<std::string> expected = {
        "Eq4",  "Eq5",       "Eq6",   "Eq7-u",          "Eq7-v",
        "Eq7-F", "Eq10",     "Eq13",  "Eq14",           "Lemma1",
        "Lemma3", "Lemma6",  "Lemma7", "BallVanishing", "BallIntegrality",
        "BallSharpIntegrality", "Dn"};
    for (const auto& id : expected) CHECK_MESSAGE(count[id] > 0, id);
    for (const auto& [id, cnt] : count) CHECK_MESSAGE(expected.count(id) == 1, id);

    CHECK(count["Eq4"] == 4);       // seeds n = 0..3
    CHECK(count["Eq6"] == 5);       // per n = 1..5
    CHECK(count["Lemma1"] == 6);    // per n = 0..5
    CHECK(count["Eq7-u"] == 4);     // windows n = 1..4
    CHECK(count["Lemma7"] == 7);    // seeds row + per n = 0..5
    CHECK(count["Eq10"] == 6);
}

TEST_CASE("verify rendering is deterministic and carries the anchors") {
    const VerifySuite a = run_verify_suite(3, 15);
    const VerifySuite b = run_verify_suite(3, 15);
    const std::string ja = render_verify(a, ReportFormat::json);
    CHECK(ja == render_verify(b, ReportFormat::json));
    CHECK(render_verify(a, ReportFormat::csv) == render_verify(b, ReportFormat::csv));

    CHECK(ja.find("{\"command\":\"verify\"") == 0);
    CHECK(ja.find("\"all_pass\":true") != std::string::npos);
    for (const char* anchor : {"\"Eq6\"", "\"Eq10\"", "\"Eq14\"", "\"Lemma7\""})
        CHECK(ja.find(anchor) != std::string::npos);
    CHECK(ja.back() == '\n');

    const std::string csv = render_verify(a, ReportFormat::csv);
    CHECK(csv.rfind("id,n,pass,detail\n", 0) == 0);

    const std::string text = render_verify(a, ReportFormat::text);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("all checks passed") != std::string::npos);
}

TEST_CASE("table rendering") {
    const auto rows = build_table(2, 12);
    const std::string csv = render_table(rows, 12, ReportFormat::csv);
    CHECK(csv.rfind("n,u_num,v_num,v_den,D_n,F_decimal,F_error_bound,lemma4_bound\n", 0) == 0);
    CHECK(csv.find("\n1,10,12,1,1,0.0205690315959") != std::string::npos);
    CHECK(csv.find("\n2,146,351,2,2,") != std::string::npos);

    const std::string json = render_table(rows, 12, ReportFormat::json);
    CHECK(json.find("{\"command\":\"table\"") == 0);
    CHECK(json.find("\"u\":\"146\"") != std::string::npos);
    // big numbers cross as strings, never as bare json numbers
    CHECK(json.find("\"v_num\":\"351\"") != std::string::npos);

    const std::string text = render_table(rows, 12, ReportFormat::text);
    CHECK(text.find("lemma4_bound") != std::string::npos);
}

TEST_CASE("gate rendering") {
    const GateScan scan = irrationality_gate(4, 1, 12);
    const std::string text = render_gate(scan, 4, 12, ReportFormat::text);
    CHECK(text.find("0.7948") != std::string::npos);
    CHECK(text.find("below one: true") != std::string::npos);

    const std::string csv = render_gate(scan, 4, 12, ReportFormat::csv);
    CHECK(csv.rfind("# gate_constant=0.7948057911", 0) == 0);
    CHECK(csv.find("n,q,D_n,gate_value,gate_error,bound15,positive,below_bound,below_one\n") !=
          std::string::npos);

    const std::string json = render_gate(scan, 4, 12, ReportFormat::json);
    CHECK(json.find("{\"command\":\"gate\"") == 0);
    CHECK(json.find("\"first_bound_below_one\":92") != std::string::npos);
    CHECK(json.find("\"first_true_below_one\":1") != std::string::npos);
}

TEST_CASE("eval and fit rendering") {
    const EvalPair ap = eval_form_both(FormKind::apery, 1, 15);
    const EvalPair bl = eval_form_both(FormKind::ball, 1, 15);
    const std::string csv = render_eval(1, 15, ap, bl, ReportFormat::csv);
    CHECK(csv.rfind("kind,route,value,error,agree\n", 0) == 0);
    CHECK(csv.find("apery,linear,0.0205690315959428,") != std::string::npos);
    CHECK(csv.find("ball,series,") != std::string::npos);

    const std::string json = render_eval(1, 15, ap, bl, ReportFormat::json);
    CHECK(json.find("{\"command\":\"eval\",\"n\":1,") == 0);
    CHECK(json.find("\"agree\":true") != std::string::npos);

    const auto fits = build_fit(2);
    const std::string fcsv = render_fit(fits, ReportFormat::csv);
    CHECK(fcsv.rfind(
              "n,apery_match,ball_match,fitted_apery,closed_apery,fitted_ball,transcribed_ball\n",
              0) == 0);
    CHECK(fcsv.find("1,true,true,") != std::string::npos);
    CHECK(render_fit(fits, ReportFormat::text).find("match") != std::string::npos);
}

TEST_CASE("csv and json escaping on synthetic rows") {
    VerifySuite s;
    s.n_max = 0;
    s.digits = 1;
    s.checks.push_back({"X", -1, false, "a,b \"q\"\nend"});
    s.all_pass = false;

    const std::string csv = render_verify(s, ReportFormat::csv);
    CHECK(csv.find("X,-1,false,\"a,b \"\"q\"\"\nend\"") != std::string::npos);

    const std::string json = render_verify(s, ReportFormat::json);
    CHECK(json.find("\"detail\":\"a,b \\\"q\\\"\\nend\"") != std::string::npos);
    CHECK(json.find("\"all_pass\":false") != std::string::npos);
}
