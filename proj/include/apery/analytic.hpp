#ifndef APERY_ANALYTIC_HPP
#define APERY_ANALYTIC_HPP

#include <vector>

#include "apery/dec_interval.hpp"
#include "apery/forms.hpp"

namespace apery {

/// Enclosure of zeta(3) with absolute error below 10^-digits. The bracket
/// comes from the accelerated convergents v_n/u_n (positivity gives the lower
/// endpoint, the growth bound the upper one); a scaled-integer partial sum of
/// 1/k^3 with integral-test tails cross-checks it once per process.
DecInterval zeta3(long digits);

/// u_n zeta(3) - v_n at enough working precision to absorb the cancellation:
/// the product is ~u_n while the form is ~1/u_n, so the intermediate zeta(3)
/// carries digits + 2*dec_digits(u_n) + 10 digits.
DecInterval eval_form_linear(FormKind kind, long n, long digits);

/// Direct summation of the defining series: scaled-integer partial sums plus
/// certified tail brackets from the partial-fraction data (vanishing column
/// sums give exact corrections; the order-3 column is bracketed by integral
/// comparison). The term count is capped, so the interval stays honest but
/// widens once the cap bites; it always contains the true value.
DecInterval eval_form_series(FormKind kind, long n, long digits);

struct EvalPair {
    DecInterval linear;
    DecInterval series;
    bool agree = false;  // the two intervals intersect
};

EvalPair eval_form_both(FormKind kind, long n, long digits);

/// Primary value by the linear route, after checking agreement with the
/// series route; disjoint intervals throw ConsistencyError.
DecInterval eval_form(FormKind kind, long n, long digits);

struct CoincidenceRow {
    long n = 0;
    bool exact_equal = false;    // (u_n, v_n) == (u~_n, v~_n)
    bool recurrence_ok = false;  // ball pair satisfies the recurrence at n
    bool numeric_close = false;  // |F_n - F~_n| within combined radii
};

struct CoincidenceReport {
    bool seeds_ok = false;  // ball seeds equal the apery seeds at n = 0, 1
    std::vector<CoincidenceRow> rows;
    bool all() const;
};

/// Exact coefficient equality up to n_max, the difference-equation replay
/// (equal seeds + shared recurrence), and a numeric |F - F~| cross-check
/// pitting the apery linear route against the ball series route.
CoincidenceReport coincidence_check(long n_max, long digits);

/// 20 (n+1)^4 (17 - 12 sqrt2)^n, the growth envelope of both forms.
DecInterval lemma4_envelope(long n, long digits);

struct BallBound {
    long n = 0;
    DecInterval value;        // F~_n by the series route
    DecInterval bound_value;  // 20 (n+1)^4 (17 - 12 sqrt2)^n
    bool lower_ok = false;    // 0 < F~_n
    bool upper_ok = false;    // F~_n < bound_value
};

BallBound ball_bound(long n, long digits);

struct GateReport {
    long n = 0;
    BigInt q;
    BigInt D_n;               // true lcm(1..n)
    DecInterval gate_value;   // q D_n^3 F_n
    DecInterval bound15;      // 20 q (n+1)^4 27^n (17 - 12 sqrt2)^n
    bool positive = false;
    bool below_bound = false;
    bool below_one = false;
};

struct GateScan {
    BigInt q;
    DecInterval gate_constant;        // 27 (17 - 12 sqrt2)
    bool constant_below_one = false;
    bool constant_starts_0_7948 = false;
    std::vector<GateReport> reports;  // n = 0..n_max
    /// First n where the closed-form bound drops below 1 (exact scan, may
    /// exceed n_max), and first n where the true q D_n^3 F_n does.
    long first_bound_below_one = -1;
    long first_true_below_one = -1;
    long bound_monotone_from = 0;     // bound15 strictly decreasing from here
    long last_gate_increase = -1;     // gate_value can jump up at prime steps
    std::vector<DecInterval> ratios;  // F_{n+1}/F_n for n = 0..n_max-1
    DecInterval ratio_target;         // 17 - 12 sqrt2
};

/// The contradiction engine: per-n certified chain 0 < q D_n^3 F_n < bound,
/// the below-one scans, and the decay-rate comparison. F_n evaluated by the
/// linear route at the given precision.
GateScan irrationality_gate(long n_max, long q_demo, long digits);

/// |(n+1)^3 F_{n+1} - lambda(n) F_n + n^3 F_{n-1}| as an interval; must
/// contain zero. The apery kind uses the linear route, the ball kind the
/// series route, so the two recurrences are probed through different code.
DecInterval recurrence_residual(FormKind kind, long n, long digits);

}  // namespace apery

#endif
