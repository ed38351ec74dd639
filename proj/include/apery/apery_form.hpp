#ifndef APERY_APERY_FORM_HPP
#define APERY_APERY_FORM_HPP

#include <utility>
#include <vector>

#include "apery/forms.hpp"
#include "apery/harmonic.hpp"
#include "apery/ratfunc.hpp"

namespace apery {

/// Partial-fraction data of the squared kernel: a2[k]/(t+k)^2 + a1[k]/(t+k).
/// Each a2[k] is a positive integer square; sum of a1 is zero; lcm(1..n)
/// clears every a1[k].
struct AperyCoefficients {
    long n = 0;
    std::vector<BigRat> a2;
    std::vector<BigRat> a1;
};

struct AperyTelescoping {
    bool identity_ok = false;
    bool s_prime_at_1_is_zero = false;
    bool double_zero_at_1 = false;
    bool all() const { return identity_ok && s_prime_at_1_is_zero && double_zero_at_1; }
};

/// ((t-1)...(t-n) / (t(t+1)...(t+n)))^2.
RatFunc build_R(long n);

/// Closed-form coefficients, cross-checked against pf_decompose(build_R(n));
/// a mismatch throws ConsistencyError.
AperyCoefficients apery_coeffs(long n);

/// u = 2 sum a2[k], v = 2 sum a2[k] H3(k) + sum a1[k] H2(k). Verifies that
/// u is an integer and lcm(1..n)^3 * v is an integer.
LinearForm apery_uv(const AperyCoefficients& coeffs, HarmonicTable& harmonic);
LinearForm apery_uv(long n);

/// Multiplier 4(2n+1)(-2t^2 + t + (2n+1)^2); the summand it certifies is
/// this polynomial times the kernel. n >= 1.
Certificate certificate_s(long n);

/// Exact check that the three-term kernel combination telescopes through
/// certificate_s(n), plus the double-zero facts at t = 1. n >= 1.
AperyTelescoping verify_apery_telescoping(long n);

/// Recovers the certificate prefactor by exact linear algebra instead of
/// trusting a transcription. Throws AnsatzError when the linear system is
/// inconsistent or underdetermined. n >= 1.
Certificate fit_certificate(long n, CertificateShape shape);

/// Checks (m+1)^3 x_{m+1} - lambda(m) x_m + m^3 x_{m-1} = 0 for each interior
/// index; seq[i] holds x_{start_n + i}. Returns (m, ok) per window.
std::vector<std::pair<long, bool>> recurrence_check(const std::vector<BigRat>& seq, long start_n);

}  // namespace apery

#endif
