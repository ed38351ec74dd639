#ifndef APERY_BALL_FORM_HPP
#define APERY_BALL_FORM_HPP

#include <map>
#include <utility>

#include "apery/dec_interval.hpp"
#include "apery/forms.hpp"
#include "apery/harmonic.hpp"
#include "apery/ratfunc.hpp"

namespace apery {

/// Order-<=4 partial-fraction data of the well-poised kernel: b[(k,j)] is
/// the coefficient of 1/(t+k)^j. The order-1, order-2 and order-4 column
/// sums vanish; that is what isolates the zeta(3) contribution.
struct BallCoefficients {
    long n = 0;
    std::map<std::pair<long, int>, BigRat> b;

    BigRat coeff(long k, int j) const;
    BigRat order_sum(int j) const;
};

struct BallTelescoping {
    bool identity_ok = false;
    bool s_at_1_is_zero = false;
    bool all() const { return identity_ok && s_at_1_is_zero; }
};

/// Empirical integrality findings for the ball linear form. These are
/// reported rather than asserted; d3v_integer tracks the open sharper claim.
struct BallIntegrality {
    long n = 0;
    bool u_integer = false;
    bool du_integer = false;
    bool d3v_integer = false;
    bool d4v_integer = false;
    bool matches_apery = false;
};

struct BallCertificateCheck {
    Certificate transcribed;
    Certificate fitted;
    bool match = false;
};

/// Constants behind the growth bound 0 < F~_n < 20 (n+1)^4 (sqrt2 - 1)^(4n).
struct BoundAnalysis {
    DecInterval tau0;            // bisection on the exact critical polynomial
    DecInterval tau0_closed;     // -1/2 + sqrt(5/4 + sqrt 2)
    DecInterval f_prime_at_tau0; // encloses 0
    DecInterval sup_f;           // f(tau0)
    DecInterval four_log_rate;   // 4 ln(sqrt2 - 1)
    DecInterval rate;            // (sqrt2 - 1)^4 = 17 - 12 sqrt2
    bool tau0_agree = false;     // bisection bracket meets the closed form
    bool poly_identity_ok = false;
    BigRat prefactor_constant;   // the 20 in the bound
    BigRat e_squared_upper;      // rational majorant for e^2
};

/// n!^2 (2t+n) (t-1)...(t-n) (t+n+1)...(t+2n) / (t(t+1)...(t+n))^4.
RatFunc build_ball_R(long n);

/// Exact decomposition with the vanishing sums verified; throws
/// ConsistencyError if any of them fails.
BallCoefficients ball_coeffs(long n);

/// u = sum b[k,3], v = sum_{k,j} b[k,j] H_j(k).
LinearForm ball_uv(const BallCoefficients& coeffs, HarmonicTable& harmonic);
LinearForm ball_uv(long n);

/// Transcribed degree-6 prefactor over (2t+n)(t+2n-1)(t+2n). n >= 1.
Certificate ball_certificate(long n);

/// Transcription vs. the linear-algebra recovery; on mismatch the caller
/// should prefer the fitted one and surface both.
BallCertificateCheck ball_certificate_check(long n);

/// Exact telescoping identity for the ball kernel plus the zero of the
/// certificate summand at t = 1. n >= 1.
BallTelescoping verify_ball_telescoping(long n);

BallIntegrality ball_integrality(const LinearForm& ball, const LinearForm& apery);
BallIntegrality ball_integrality(long n);

/// Certified evaluation of the decay-rate analysis; digits >= 20.
BoundAnalysis bound_analysis(long digits);

}  // namespace apery

#endif
