#include "apery/ball_form.hpp"

#include <stdexcept>

#include "apery/apery_form.hpp"
#include "apery/errors.hpp"
#include "apery/factored.hpp"
#include "apery/lcm_sieve.hpp"

namespace apery {

namespace {

BigRat cube(long m) {
    const BigInt b(m);
    return BigRat(b * b * b);
}

}  // namespace

BigRat BallCoefficients::coeff(long k, int j) const {
    auto it = b.find({k, j});
    return it == b.end() ? BigRat(0) : it->second;
}

BigRat BallCoefficients::order_sum(int j) const {
    BigRat s(0);
    for (const auto& [key, c] : b)
        if (key.second == j) s += c;
    return s;
}

RatFunc build_ball_R(long n) {
    if (n < 0) throw std::invalid_argument("build_ball_R: n must be nonnegative");
    return to_ratfunc(ball_kernel_factors(n));
}

BallCoefficients ball_coeffs(long n) {
    if (n < 0) throw std::invalid_argument("ball_coeffs: n must be nonnegative");
    std::vector<std::pair<long, int>> poles;
    for (long k = 0; k <= n; ++k) poles.push_back({k, 4});
    const PartialFraction pf = pf_decompose(build_ball_R(n), poles);

    BallCoefficients out;
    out.n = n;
    for (const auto& [key, c] : pf.terms()) out.b.emplace(key, c);
    for (int j : {1, 2, 4})
        if (!out.order_sum(j).is_zero())
            throw ConsistencyError("ball_coeffs: well-poised vanishing sum failed");
    return out;
}

LinearForm ball_uv(const BallCoefficients& coeffs, HarmonicTable& harmonic) {
    LinearForm f;
    f.n = coeffs.n;
    f.kind = FormKind::ball;
    f.u = coeffs.order_sum(3);
    BigRat v(0);
    for (const auto& [key, c] : coeffs.b) v += c * harmonic.h(key.second, key.first);
    f.v = v;
    return f;
}

LinearForm ball_uv(long n) {
    HarmonicTable harmonic;
    const BallCoefficients coeffs = ball_coeffs(n);
    return ball_uv(coeffs, harmonic);
}

Certificate ball_certificate(long n) {
    if (n < 1) throw std::domain_error("ball_certificate: defined for n >= 1");
    const BigInt N(n);
    const BigInt n2 = N * N, n3 = n2 * N, n4 = n3 * N, n5 = n4 * N;
    std::vector<BigRat> q(7);
    q[0] = BigRat(N * (153 * n5 + 183 * n4 + 50 * n3 - 30 * n2 - 22 * N - 4));
    q[1] = BigRat(384 * n5 + 396 * n4 + 97 * n3 - 29 * n2 - 17 * N - 2);
    q[2] = BigRat(358 * n4 + 339 * n3 + 76 * n2 - 7 * N - 3);
    q[3] = BigRat(2 * N * (67 * n2 + 71 * N + 15));
    q[4] = BigRat(4 * n2 + 27 * N + 5);
    q[5] = BigRat(-(8 * N - 1));
    q[6] = BigRat(-1);

    Certificate c;
    c.n = n;
    c.kind = FormKind::ball;
    c.prefactor_num = Poly(std::move(q));
    c.prefactor_den =
        Poly({BigRat(n), BigRat(2)}) * Poly::linear(BigRat(2 * n - 1)) * Poly::linear(BigRat(2 * n));
    return c;
}

BallCertificateCheck ball_certificate_check(long n) {
    BallCertificateCheck out;
    out.transcribed = ball_certificate(n);
    out.fitted = fit_certificate(n, CertificateShape::ball_deg6);
    out.match = out.transcribed.prefactor_num == out.fitted.prefactor_num &&
                out.transcribed.prefactor_den == out.fitted.prefactor_den;
    return out;
}

BallTelescoping verify_ball_telescoping(long n) {
    if (n < 1) throw std::domain_error("verify_ball_telescoping: defined for n >= 1");
    const Poly q = ball_certificate(n).prefactor_num;
    const FactoredTerm base = ball_prefactor_base(n);

    std::vector<FactoredTerm> terms;
    terms.push_back(ball_kernel_factors(n + 1).scaled(cube(n + 1)));
    terms.push_back(ball_kernel_factors(n).scaled(BigRat(-recurrence_lambda(n))));
    terms.push_back(ball_kernel_factors(n - 1).scaled(cube(n)));
    terms.push_back(base.shifted(1).times(q.shift(BigRat(1))).scaled(BigRat(-1)));
    terms.push_back(base.times(q));

    const auto profile = denominator_profile(terms);
    Poly sum;
    for (const auto& t : terms) sum += numerator_over(t, profile);

    BallTelescoping v;
    v.identity_ok = sum.is_zero();
    v.s_at_1_is_zero = (to_ratfunc(base).eval(BigRat(1)) * q.eval(BigRat(1))).is_zero();
    return v;
}

BallIntegrality ball_integrality(const LinearForm& ball, const LinearForm& apery) {
    BallIntegrality r;
    r.n = ball.n;
    const BigInt d = lcm_upto(ball.n);
    const BigInt d2 = d * d;
    r.u_integer = ball.u.is_integer();
    r.du_integer = (BigRat(d) * ball.u).is_integer();
    r.d3v_integer = (BigRat(d2 * d) * ball.v).is_integer();
    r.d4v_integer = (BigRat(d2 * d2) * ball.v).is_integer();
    r.matches_apery = ball.u == apery.u && ball.v == apery.v;
    return r;
}

BallIntegrality ball_integrality(long n) {
    return ball_integrality(ball_uv(n), apery_uv(n));
}

BoundAnalysis bound_analysis(long digits) {
    if (digits < 20) throw std::invalid_argument("bound_analysis: needs at least 20 digits");
    const long work = digits + 10;
    BoundAnalysis out;

    // Critical polynomial of f': log(tau^5 (tau+2) / ((tau-1)(tau+1)^5))
    // vanishes exactly where p(tau) = tau^5 (tau+2) - (tau-1)(tau+1)^5 does.
    const Poly tau = Poly::monomial(BigRat(1), 1);
    const Poly p = tau.pow(5) * Poly::linear(BigRat(2)) -
                   Poly::linear(BigRat(-1)) * Poly::linear(BigRat(1)).pow(5);

    // Factored form through w = tau + 1/2; the odd factor is the one with
    // the positive real root.
    const Poly w = Poly::linear(BigRat(1, 2));
    const Poly factored = -(w * (BigRat(2) * w.pow(4) - BigRat(5) * w.pow(2) - Poly::constant(BigRat(7, 8))));
    out.poly_identity_ok = p == factored;

    // Sign bisection on [1 + 10^-6, 10]; p is positive at the left end and
    // negative at the right end.
    BigRat a = BigRat(1) + BigRat(BigInt(1), pow10(6));
    BigRat b(10);
    if (!(p.eval(a).sign() > 0 && p.eval(b).sign() < 0))
        throw PrecisionError("bound_analysis: bisection bracket lost its sign change");
    const BigRat width_target = pow10_rat(-(work + 5));
    while (b - a > width_target) {
        const BigRat mid = (a + b) / BigRat(2);
        const int s = p.eval(mid).sign();
        if (s == 0) {
            a = mid;
            b = mid;
            break;
        }
        if (s > 0)
            a = mid;
        else
            b = mid;
    }
    out.tau0 = DecInterval::from_bounds(a, b, work);

    const DecInterval sqrt2 = DecInterval::exact(BigRat(2), work + 8).sqrt(work + 6);
    out.tau0_closed = DecInterval::exact(BigRat(5, 4), work + 6)
                          .add(sqrt2, work + 6)
                          .sqrt(work + 4)
                          .sub(DecInterval::exact(BigRat(1, 2), work + 4), work);
    out.tau0_agree = !(out.tau0.certainly_less(out.tau0_closed) ||
                       out.tau0_closed.certainly_less(out.tau0));

    // f(tau) = 5 tau ln tau + (tau+2) ln(tau+2) - (tau-1) ln(tau-1)
    //          - 5 (tau+1) ln(tau+1), evaluated over the tau0 bracket.
    const DecInterval t0 = out.tau0;
    const DecInterval one = DecInterval::exact(BigRat(1), work);
    const DecInterval two = DecInterval::exact(BigRat(2), work);
    const DecInterval five = DecInterval::exact(BigRat(5), work);
    const DecInterval tp2 = t0.add(two, work);
    const DecInterval tm1 = t0.sub(one, work);
    const DecInterval tp1 = t0.add(one, work);
    out.sup_f = five.mul(t0, work)
                    .mul(t0.ln(work), work)
                    .add(tp2.mul(tp2.ln(work), work), work)
                    .sub(tm1.mul(tm1.ln(work), work), work)
                    .sub(five.mul(tp1, work).mul(tp1.ln(work), work), work);

    // f'(tau0) through the exact ratio, as an independent residual.
    const DecInterval ratio =
        t0.powi(5, work).mul(tp2, work).div(tm1.mul(tp1.powi(5, work), work), work);
    out.f_prime_at_tau0 = ratio.ln(work);

    out.four_log_rate =
        DecInterval::exact(BigRat(4), work).mul(sqrt2.sub(one, work).ln(work), work);
    out.rate = DecInterval::exact(BigRat(17), work)
                   .sub(DecInterval::exact(BigRat(12), work).mul(sqrt2, work), work);

    out.prefactor_constant = BigRat(20);
    // e = sum 1/k!: 25 exact terms plus a geometric tail majorant.
    BigRat e_hi(0);
    BigRat term(1);
    for (long k = 1; k <= 26; ++k) {
        e_hi += term;
        term /= BigRat(k);
    }
    e_hi += BigRat(2) * term;
    out.e_squared_upper = e_hi * e_hi;
    return out;
}

}  // namespace apery
