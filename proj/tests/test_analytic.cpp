#include <doctest.h>

#include <string>

#include "apery/analytic.hpp"
#include "apery/apery_form.hpp"
#include "apery/errors.hpp"
#include "test_util.hpp"

using namespace apery;
using apery::test::close_to;
using apery::test::dec;

TEST_CASE("zeta(3) enclosure") {
    const DecInterval z10 = zeta3(10);
    CHECK(z10.to_string(10) == "1.202056903");
    CHECK(z10.radius() <= pow10_rat(-10));

    const DecInterval z45 = zeta3(45);
    CHECK(close_to(z45, apery::test::kZeta3, 44));
    CHECK(z45.radius() <= pow10_rat(-45));
    // nested precision: the tighter midpoint stays inside the looser interval
    CHECK(zeta3(20).contains(z45.midpoint()));

    CHECK_THROWS_AS(zeta3(0), std::domain_error);
}

TEST_CASE("form evaluation matches the tabulated examples") {
    const DecInterval f0 = eval_form(FormKind::apery, 0, 15);
    CHECK(f0.to_string(13) == "2.404113806319");

    const std::string f1a = eval_form(FormKind::apery, 1, 15).to_string(15);
    const std::string f1b = eval_form(FormKind::ball, 1, 15).to_string(15);
    CHECK(f1a.substr(0, 16) == "0.02056903159594");
    CHECK(f1b == f1a);

    // F_1 = 10 zeta(3) - 12 against the frozen expansion
    CHECK(close_to(eval_form(FormKind::apery, 1, 40), apery::test::kF1, 39));
}

TEST_CASE("linear and series routes agree and are both certified") {
    const BigRat f1 = dec(apery::test::kF1);
    for (const FormKind kind : {FormKind::apery, FormKind::ball}) {
        for (long n = 0; n <= 6; ++n) {
            const EvalPair p = eval_form_both(kind, n, 25);
            CHECK(p.agree);
            if (n == 1) {
                CHECK(p.linear.contains(f1));
                CHECK(p.series.contains(f1));
            }
            // the merged value lies inside the linear route's enclosure
            const DecInterval v = eval_form(kind, n, 25);
            CHECK(p.linear.hi() >= v.midpoint());
            CHECK(p.linear.lo() <= v.midpoint());
        }
    }
    CHECK_THROWS_AS(eval_form(FormKind::apery, -1, 10), std::domain_error);
}

TEST_CASE("series route converges at tight precision for the well-poised form") {
    // fast decay: interval width reaches the request even at n = 12
    const DecInterval s = eval_form_series(FormKind::ball, 12, 30);
    CHECK(s.is_positive());
    CHECK(s.radius() <= pow10_rat(-30));
}

TEST_CASE("coincidence report") {
    const CoincidenceReport r = coincidence_check(8, 30);
    CHECK(r.seeds_ok);
    CHECK(r.rows.size() == 9);
    for (const auto& row : r.rows) {
        CHECK(row.exact_equal);
        CHECK(row.recurrence_ok);
        CHECK(row.numeric_close);
    }
    CHECK(r.all());
    CHECK_THROWS_AS(coincidence_check(0, 10), std::domain_error);
}

TEST_CASE("growth envelope and the series-route bound") {
    // 20 (n+1)^4 rate^n at n = 0 is exactly 20
    const DecInterval e0 = lemma4_envelope(0, 20);
    CHECK(e0.contains(BigRat(20)));
    CHECK(e0.radius() <= pow10_rat(-15));

    // strictly decreasing from the start: (1 + 1/(n+1))^4 < 1/rate always
    DecInterval prev = e0;
    for (long n = 1; n <= 10; ++n) {
        const DecInterval e = lemma4_envelope(n, 20);
        CHECK(e.certainly_less(prev));
        prev = e;
    }

    for (long n = 0; n <= 10; ++n) {
        const BallBound b = ball_bound(n, 40);
        CHECK(b.lower_ok);
        CHECK(b.upper_ok);
        CHECK(b.value.is_positive());
        CHECK(b.value.certainly_less(b.bound_value));
    }
}

TEST_CASE("gate scan") {
    const GateScan scan = irrationality_gate(12, 1, 15);
    CHECK(scan.constant_below_one);
    CHECK(scan.constant_starts_0_7948);
    CHECK(scan.gate_constant.contains(dec(apery::test::kGateConstant)));
    CHECK(scan.gate_constant.to_string(10) == "0.7948057911");
    CHECK(scan.ratio_target.contains(dec(apery::test::kRate)));

    REQUIRE(scan.reports.size() == 13);
    for (const auto& r : scan.reports) {
        CHECK(r.positive);
        CHECK(r.below_bound);
        CHECK(r.q == 1);
    }
    CHECK_FALSE(scan.reports[0].below_one);  // F_0 = 2.40...
    CHECK(scan.reports[1].below_one);
    CHECK(scan.reports[1].D_n == 1);
    CHECK(scan.reports[12].D_n == 27720);

    // frozen independently: the closed-form bound first dips under 1 at 92,
    // the true value at 1
    CHECK(scan.first_bound_below_one == 92);
    CHECK(scan.first_true_below_one == 1);

    REQUIRE(scan.ratios.size() == 12);
    // ratios drift toward the limit from below
    CHECK(scan.ratios[0].certainly_less(scan.ratios[11]));
    CHECK(scan.ratios[11].certainly_less(scan.ratio_target));

    CHECK_THROWS_AS(irrationality_gate(1, 1, 10), std::domain_error);
    CHECK_THROWS_AS(irrationality_gate(5, 0, 10), std::domain_error);
}

TEST_CASE("gate scan respects the multiplier") {
    const GateScan s1 = irrationality_gate(3, 1, 12);
    const GateScan s7 = irrationality_gate(3, 7, 12);
    CHECK(s7.q == 7);
    // gate_value scales linearly with q
    const DecInterval scaled = s1.reports[2].gate_value.mul(DecInterval::exact(7), 12);
    CHECK(scaled.hi() >= s7.reports[2].gate_value.lo());
    CHECK(scaled.lo() <= s7.reports[2].gate_value.hi());
    // a larger q pushes the closed-form threshold further out
    CHECK(s7.first_bound_below_one > s1.first_bound_below_one);
    CHECK(s1.first_bound_below_one == 92);
}

TEST_CASE("numeric recurrence residuals enclose zero") {
    for (long n = 1; n <= 6; ++n) {
        CHECK(recurrence_residual(FormKind::apery, n, 40).contains_zero());
        CHECK(recurrence_residual(FormKind::ball, n, 40).contains_zero());
    }
    CHECK_THROWS_AS(recurrence_residual(FormKind::apery, 0, 20), std::domain_error);
}
