#include "apery/analytic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "apery/apery_form.hpp"
#include "apery/ball_form.hpp"
#include "apery/errors.hpp"
#include "apery/lcm_sieve.hpp"

namespace apery {

namespace {

BigRat rat_pow(const BigRat& q, unsigned long e) {
    return BigRat(pow(q.numerator(), e), pow(q.denominator(), e));
}

// s_lo <= sqrt(2) < s_hi with 10^-frac spacing.
std::pair<BigRat, BigRat> sqrt2_bounds(long frac) {
    const BigInt scale = pow10(static_cast<unsigned long>(frac));
    const BigInt root = isqrt(2 * scale * scale);
    return {BigRat(root, scale), BigRat(root + 1, scale)};
}

// (sqrt2 - 1)^4 = 17 - 12 sqrt2, the per-step decay of the linear forms.
std::pair<BigRat, BigRat> rate_bounds(long frac) {
    auto [slo, shi] = sqrt2_bounds(frac);
    return {BigRat(17) - BigRat(12) * shi, BigRat(17) - BigRat(12) * slo};
}

DecInterval rate_interval(long digits) {
    auto [lo, hi] = rate_bounds(digits + 6);
    return DecInterval::from_bounds(lo, hi, digits);
}

// 20 q (n+1)^4 27^pow27 rate^n; pow27 = 0 gives the Lemma-4 envelope, and
// pow27 = n the closed-form side of the gate inequality.
std::pair<BigRat, BigRat> envelope_bounds(long n, const BigInt& q, bool with27, long digits) {
    const long frac = digits + dec_digits(BigInt(n + 1)) + 10;
    auto [rlo, rhi] = rate_bounds(frac);
    BigRat c(20 * q * pow(BigInt(n + 1), 4));
    if (with27) c *= BigRat(pow(BigInt(27), static_cast<unsigned long>(n)));
    const auto e = static_cast<unsigned long>(n);
    return {c * rat_pow(rlo, e), c * rat_pow(rhi, e)};
}

// Accelerated bracket: zeta(3) lies in (v_n/u_n, v_n/u_n + B_n/u_n] where
// B_n is the growth bound on F_n; each recurrence step buys ~1.5 digits.
std::pair<BigRat, BigRat> zeta3_bracket_accel(long digits) {
    const BigRat tol = pow10_rat(-(digits + 4));
    const BigRat rate_hi = rate_bounds(40).second;
    BigRat up(2), un(10), vp(0), vn(12);
    BigRat rpow = rate_hi;
    for (long n = 1; n <= 100000; ++n) {
        const BigRat gap = BigRat(20 * pow(BigInt(n + 1), 4)) * rpow / un;
        if (gap < tol) return {vn / un, vn / un + gap};
        const BigRat lam(recurrence_lambda(n));
        const BigRat n3(pow(BigInt(n), 3));
        const BigRat m3(pow(BigInt(n + 1), 3));
        BigRat u2 = (lam * un - n3 * up) / m3;
        BigRat v2 = (lam * vn - n3 * vp) / m3;
        up = un;
        un = std::move(u2);
        vp = vn;
        vn = std::move(v2);
        rpow *= rate_hi;
    }
    throw PrecisionError("zeta3: accelerated bracket did not reach tolerance");
}

// Direct bracket: scaled-integer partial sum of 1/k^3 plus integral-test
// tail. Only good for ~12 digits; serves as the independent cross-check.
std::pair<BigRat, BigRat> zeta3_bracket_direct(long digits) {
    long N = 1;
    for (long i = 0; i < (digits + 3) / 2 && N < 2000000; ++i) N *= 10;
    N = std::min<long>(N, 2000000);
    const BigInt M = pow10(static_cast<unsigned long>(digits + 6));
    BigInt S(0);
    for (long k = 1; k <= N; ++k) S += M / (BigInt(k) * k * k);
    const BigRat lo = BigRat(S, M) + BigRat(BigInt(1), 2 * BigInt(N + 1) * (N + 1));
    const BigRat hi = BigRat(S + N, M) + BigRat(BigInt(1), 2 * BigInt(N) * N);
    return {lo, hi};
}

struct Zeta3Cache {
    std::mutex mu;
    long digits = -1;
    BigRat lo, hi;
    bool cross_checked = false;
};

Zeta3Cache& zeta3_cache() {
    static Zeta3Cache c;
    return c;
}

// Sum_{m=a}^{b} m^-j exactly; empty when b < a.
BigRat window_sum(long a, long b, int j) {
    BigRat s(0);
    for (long m = a; m <= b; ++m)
        s += BigRat(BigInt(1), pow(BigInt(m), static_cast<unsigned long>(j)));
    return s;
}

// Integral-test bracket for Sum_{m > X} m^-j, j >= 2.
std::pair<BigRat, BigRat> tail_power_sum(long X, int j) {
    const auto e = static_cast<unsigned long>(j - 1);
    return {BigRat(BigInt(1), (j - 1) * pow(BigInt(X + 1), e)),
            BigRat(BigInt(1), (j - 1) * pow(BigInt(X), e))};
}

struct RatBracket {
    BigRat lo, hi;
};

// F_n by direct summation of -R_n'(t) for t = n+1..T (the earlier terms
// vanish to second order), floors taken at scale M, plus the tail: the
// order-2 column telescopes exactly because sum a1 = 0, the order-3 column
// is bracketed by integral comparison. Width ~ u_n/T^3 before the cap.
RatBracket apery_series_bracket(long n, long digits) {
    const AperyCoefficients cf = apery_coeffs(n);
    BigRat u(0);
    for (const auto& a : cf.a2) u += BigRat(2) * a;

    const BigRat target = pow10_rat(-(digits + 4)) / u;
    auto bracket3 = [&](long T) {
        BigRat lo(0), hi(0);
        for (long k = 0; k <= n; ++k) {
            auto [l3, h3] = tail_power_sum(T + k, 3);
            lo += BigRat(2) * cf.a2[k] * l3;
            hi += BigRat(2) * cf.a2[k] * h3;
        }
        return std::pair<BigRat, BigRat>{lo, hi};
    };
    const long cap = 200000;
    long T = 4 * n + 50;
    while (T < cap) {
        auto [l3, h3] = bracket3(T);
        if (h3 - l3 <= target) break;
        T = std::min(cap, 2 * T);
    }

    const long wM = digits + 2 * dec_digits(u.numerator()) + dec_digits(BigInt(T)) + 10;
    const BigInt M = pow10(static_cast<unsigned long>(wM));
    BigInt S(0);
    long count = 0;
    for (long t = n + 1; t <= T; ++t) {
        BigInt N(1), D(1);
        for (long j = 1; j <= n; ++j) N *= t - j;
        for (long j = 0; j <= n; ++j) D *= t + j;
        BigInt Ns(0), Ds(0);
        for (long j = 1; j <= n; ++j) Ns += N / (t - j);
        for (long j = 0; j <= n; ++j) Ds += D / (t + j);
        const BigInt num = 2 * N * (N * Ds - Ns * D);  // -R' = 2 N (N D' - N' D)/D^3 with D' = Ds etc.
        const BigInt scaled = M * num;
        const BigInt den = D * D * D;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
        S += q;
        ++count;
    }

    BigRat e2(0);
    for (long k = 1; k <= n; ++k) e2 -= cf.a1[k] * window_sum(T + 1, T + k, 2);
    auto [t3lo, t3hi] = bracket3(T);

    RatBracket out;
    out.lo = BigRat(S, M) + e2 + t3lo;
    out.hi = BigRat(S + count, M) + e2 + t3hi;
    return out;
}

// F~_n by direct summation of R~_n(t) for t = n+1..T. Two independent tail
// brackets are intersected: the decay majorant (5/2) 2^n n!^2 t^-(2n+3) via
// integral test, and the partial-fraction route where the order 1, 2, 4
// columns telescope exactly and order 3 is bracketed per sign.
RatBracket ball_series_bracket(long n, long digits) {
    const BallCoefficients cf = ball_coeffs(n);
    const BigInt fact2 = pow(factorial(static_cast<unsigned long>(n)), 2);
    const BigRat cA = BigRat(5 * pow(BigInt(2), static_cast<unsigned long>(n)) * fact2, BigInt(2));
    auto tailA = [&](long T) {
        return cA / BigRat((2 * n + 2) * pow(BigInt(T), static_cast<unsigned long>(2 * n + 2)));
    };

    const long scale_n = (1531 * n) / 1000 + 1;  // F~_n is ~ 10^-(1.531 n)
    const BigRat target = pow10_rat(-(digits + 4 + scale_n));
    const long cap = 300000;
    long T = std::max<long>(2 * n + 2, 8);
    while (T < cap && tailA(T) > target) T = std::min(cap, 2 * T);

    const long wM = digits + scale_n + dec_digits(BigInt(T)) + 12;
    const BigInt M = pow10(static_cast<unsigned long>(wM));
    BigInt S(0);
    long count = 0;
    for (long t = n + 1; t <= T; ++t) {
        BigInt num = fact2 * (2 * t + n);
        for (long j = 1; j <= n; ++j) num *= t - j;
        for (long j = n + 1; j <= 2 * n; ++j) num *= t + j;
        BigInt den(1);
        for (long j = 0; j <= n; ++j) den *= t + j;
        den = pow(den, 4);
        const BigInt scaled = M * num;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
        S += q;
        ++count;
    }

    BigRat corr(0);
    for (int j : {1, 2, 4})
        for (long k = 1; k <= n; ++k) {
            const BigRat b = cf.coeff(k, j);
            if (!b.is_zero()) corr -= b * window_sum(T + 1, T + k, j);
        }
    BigRat b3lo(0), b3hi(0);
    for (long k = 0; k <= n; ++k) {
        const BigRat b = cf.coeff(k, 3);
        if (b.is_zero()) continue;
        auto [l3, h3] = tail_power_sum(T + k, 3);
        if (b > BigRat(0)) {
            b3lo += b * l3;
            b3hi += b * h3;
        } else {
            b3lo += b * h3;
            b3hi += b * l3;
        }
    }
    const BigRat tlo = std::max(BigRat(0), corr + b3lo);
    const BigRat thi = std::min(tailA(T), corr + b3hi);
    if (thi < tlo) throw ConsistencyError("ball series: independent tail brackets are disjoint");

    RatBracket out;
    out.lo = BigRat(S, M) + tlo;
    out.hi = BigRat(S + count, M) + thi;
    return out;
}

bool intervals_meet(const DecInterval& a, const DecInterval& b) {
    return !(a.hi() < b.lo() || b.hi() < a.lo());
}

DecInterval round_to(const DecInterval& v, long digits) {
    return DecInterval::from_bounds(v.lo(), v.hi(), digits);
}

}  // namespace

DecInterval zeta3(long digits) {
    if (digits < 1) throw std::domain_error("zeta3: digits must be >= 1");
    auto& c = zeta3_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.digits < digits) {
        auto [lo, hi] = zeta3_bracket_accel(digits);
        c.lo = lo;
        c.hi = hi;
        c.digits = digits;
    }
    if (!c.cross_checked) {
        auto [lo, hi] = zeta3_bracket_direct(10);
        if (c.hi < lo || hi < c.lo)
            throw ConsistencyError("zeta3: accelerated and direct brackets are disjoint");
        c.cross_checked = true;
    }
    return DecInterval::from_bounds(c.lo, c.hi, digits + 2);
}

DecInterval eval_form_linear(FormKind kind, long n, long digits) {
    if (n < 0) throw std::domain_error("eval_form_linear: n must be >= 0");
    if (digits < 1) throw std::domain_error("eval_form_linear: digits must be >= 1");
    const LinearForm f = kind == FormKind::apery ? apery_uv(n) : ball_uv(n);
    const long eu = dec_digits(f.u.numerator()) + dec_digits(f.u.denominator());
    const long w = digits + 2 * eu + 10;
    const DecInterval z = zeta3(w);
    const DecInterval val = z.mul(DecInterval::exact(f.u, w), w).sub(DecInterval::exact(f.v, w), w);
    return round_to(val, digits + 2);
}

DecInterval eval_form_series(FormKind kind, long n, long digits) {
    if (n < 0) throw std::domain_error("eval_form_series: n must be >= 0");
    if (digits < 1) throw std::domain_error("eval_form_series: digits must be >= 1");
    struct Cache {
        std::mutex mu;
        std::map<std::tuple<int, long, long>, RatBracket> m;
    };
    static Cache cache;
    const std::tuple<int, long, long> key{kind == FormKind::apery ? 0 : 1, n, digits};
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.m.find(key);
        if (it != cache.m.end())
            return DecInterval::from_bounds(it->second.lo, it->second.hi, digits + 2);
    }
    const RatBracket b =
        kind == FormKind::apery ? apery_series_bracket(n, digits) : ball_series_bracket(n, digits);
    if (b.hi < b.lo) throw ConsistencyError("eval_form_series: inverted bracket");
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        cache.m.emplace(key, b);
    }
    return DecInterval::from_bounds(b.lo, b.hi, digits + 2);
}

EvalPair eval_form_both(FormKind kind, long n, long digits) {
    EvalPair out;
    out.linear = eval_form_linear(kind, n, digits);
    out.series = eval_form_series(kind, n, digits);
    out.agree = intervals_meet(out.linear, out.series);
    return out;
}

DecInterval eval_form(FormKind kind, long n, long digits) {
    const EvalPair p = eval_form_both(kind, n, digits);
    if (!p.agree) throw ConsistencyError("eval_form: linear and series enclosures are disjoint");
    return p.linear;
}

bool CoincidenceReport::all() const {
    if (!seeds_ok) return false;
    for (const auto& r : rows)
        if (!(r.exact_equal && r.recurrence_ok && r.numeric_close)) return false;
    return true;
}

CoincidenceReport coincidence_check(long n_max, long digits) {
    if (n_max < 1) throw std::domain_error("coincidence_check: n_max must be >= 1");
    std::vector<LinearForm> ap, bl;
    ap.reserve(n_max + 1);
    bl.reserve(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        ap.push_back(apery_uv(n));
        bl.push_back(ball_uv(n));
    }
    CoincidenceReport rep;
    rep.seeds_ok = ap[0].u == bl[0].u && ap[0].v == bl[0].v && ap[1].u == bl[1].u && ap[1].v == bl[1].v;

    // prime the shared constant at the widest precision used below
    const long eu = dec_digits(ap[n_max].u.numerator()) + dec_digits(ap[n_max].u.denominator());
    zeta3(digits + 2 * eu + 10);

    for (long n = 0; n <= n_max; ++n) {
        CoincidenceRow row;
        row.n = n;
        row.exact_equal = ap[n].u == bl[n].u && ap[n].v == bl[n].v;
        if (n >= 1 && n + 1 <= n_max) {
            const BigRat m3(pow(BigInt(n + 1), 3));
            const BigRat lam(recurrence_lambda(n));
            const BigRat n3(pow(BigInt(n), 3));
            const BigRat ru = m3 * bl[n + 1].u - lam * bl[n].u + n3 * bl[n - 1].u;
            const BigRat rv = m3 * bl[n + 1].v - lam * bl[n].v + n3 * bl[n - 1].v;
            row.recurrence_ok = ru.is_zero() && rv.is_zero();
        } else {
            row.recurrence_ok = true;  // no window centered at the edge rows
        }
        const DecInterval fa = eval_form_linear(FormKind::apery, n, digits);
        const DecInterval fb = eval_form_series(FormKind::ball, n, digits);
        row.numeric_close = fa.sub(fb, digits + 2).contains_zero();
        rep.rows.push_back(row);
    }
    return rep;
}

DecInterval lemma4_envelope(long n, long digits) {
    if (n < 0) throw std::domain_error("lemma4_envelope: n must be >= 0");
    if (digits < 1) throw std::domain_error("lemma4_envelope: digits must be >= 1");
    auto [blo, bhi] = envelope_bounds(n, BigInt(1), false, digits + 6);
    return DecInterval::from_bounds(blo, bhi, digits + 2);
}

BallBound ball_bound(long n, long digits) {
    if (n < 0) throw std::domain_error("ball_bound: n must be >= 0");
    if (digits < 1) throw std::domain_error("ball_bound: digits must be >= 1");
    BallBound out;
    out.n = n;
    out.value = eval_form_series(FormKind::ball, n, digits);
    out.bound_value = lemma4_envelope(n, digits);
    out.lower_ok = out.value.is_positive();
    out.upper_ok = out.value.certainly_less(out.bound_value);
    return out;
}

GateScan irrationality_gate(long n_max, long q_demo, long digits) {
    if (n_max < 2) throw std::domain_error("irrationality_gate: n_max must be >= 2");
    if (q_demo < 1) throw std::domain_error("irrationality_gate: q must be >= 1");
    if (digits < 1) throw std::domain_error("irrationality_gate: digits must be >= 1");

    GateScan scan;
    scan.q = BigInt(q_demo);
    const long dd = std::max<long>(digits + 10, 25);
    const DecInterval one = DecInterval::exact(BigRat(1), 8);

    scan.ratio_target = rate_interval(digits + 2);
    scan.gate_constant = rate_interval(dd).mul(DecInterval::exact(BigRat(27), dd), digits + 2);
    scan.constant_below_one = scan.gate_constant.certainly_less(one);
    scan.constant_starts_0_7948 = scan.gate_constant.to_string(8).substr(0, 6) == "0.7948";

    // exact scan for the first n with the closed-form bound below 1
    for (long frac = 40; frac <= 5120; frac *= 2) {
        auto [rlo, rhi] = rate_bounds(frac);
        BigRat plo(1), phi(1);
        long found = -1;
        bool ambiguous = false;
        for (long n = 1; n <= 200000; ++n) {
            plo *= rlo;
            phi *= rhi;
            const BigRat c(20 * scan.q * pow(BigInt(n + 1), 4) *
                           pow(BigInt(27), static_cast<unsigned long>(n)));
            if (c * phi < BigRat(1)) {
                found = n;
                break;
            }
            if (c * plo < BigRat(1)) {
                ambiguous = true;  // bound straddles 1 at this precision
                break;
            }
        }
        if (found > 0) {
            scan.first_bound_below_one = found;
            break;
        }
        if (!ambiguous) throw PrecisionError("irrationality_gate: bound scan exhausted");
    }
    if (scan.first_bound_below_one < 0)
        throw PrecisionError("irrationality_gate: bound scan cannot separate 1");

    const long cap_n = std::max(n_max, scan.first_bound_below_one);
    {
        const LinearForm f = apery_uv(cap_n);
        const long eu = dec_digits(f.u.numerator()) + dec_digits(f.u.denominator());
        zeta3(dd + 2 * eu + 10);
    }

    std::vector<DecInterval> F;
    F.reserve(n_max + 1);
    DenominatorLcm D;
    for (long n = 0; n <= n_max; ++n) {
        F.push_back(eval_form_linear(FormKind::apery, n, dd));
        GateReport r;
        r.n = n;
        r.q = scan.q;
        r.D_n = D.advance_to(n);
        const BigRat qd3(scan.q * pow(r.D_n, 3));
        r.gate_value = F[n].mul(DecInterval::exact(qd3, dd), digits + 2);
        auto [blo, bhi] = envelope_bounds(n, scan.q, true, dd);
        r.bound15 = DecInterval::from_bounds(blo, bhi, digits + 2);
        r.positive = r.gate_value.is_positive();
        r.below_bound = r.gate_value.certainly_less(r.bound15);
        r.below_one = r.gate_value.certainly_less(one);
        scan.reports.push_back(r);
    }

    for (long n = 0; n + 1 <= n_max; ++n) scan.ratios.push_back(F[n + 1].div(F[n], digits + 2));

    scan.bound_monotone_from = 0;
    scan.last_gate_increase = -1;
    for (long n = 1; n <= n_max; ++n) {
        if (!scan.reports[n].bound15.certainly_less(scan.reports[n - 1].bound15))
            scan.bound_monotone_from = n;
        if (scan.reports[n - 1].gate_value.certainly_less(scan.reports[n].gate_value))
            scan.last_gate_increase = n;
    }

    DenominatorLcm Ds;
    for (long n = 0; n <= cap_n; ++n) {
        const BigRat qd3(scan.q * pow(Ds.advance_to(n), 3));
        const DecInterval g = n <= n_max ? scan.reports[n].gate_value
                                         : eval_form_linear(FormKind::apery, n, dd)
                                               .mul(DecInterval::exact(qd3, dd), digits + 2);
        if (g.certainly_less(one)) {
            scan.first_true_below_one = n;
            break;
        }
    }
    return scan;
}

DecInterval recurrence_residual(FormKind kind, long n, long digits) {
    if (n < 1) throw std::domain_error("recurrence_residual: n must be >= 1");
    const long d = digits + 10;
    auto ev = [&](long m) {
        return kind == FormKind::apery ? eval_form_linear(kind, m, d) : eval_form_series(kind, m, d);
    };
    const DecInterval fm = ev(n - 1);
    const DecInterval f0 = ev(n);
    const DecInterval fp = ev(n + 1);
    const DecInterval a = fp.mul(DecInterval::exact(BigRat(pow(BigInt(n + 1), 3)), d), d);
    const DecInterval b = f0.mul(DecInterval::exact(BigRat(recurrence_lambda(n)), d), d);
    const DecInterval c = fm.mul(DecInterval::exact(BigRat(pow(BigInt(n), 3)), d), d);
    return round_to(a.sub(b, d).add(c, d), digits + 2);
}

}  // namespace apery
