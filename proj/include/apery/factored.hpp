#ifndef APERY_FACTORED_HPP
#define APERY_FACTORED_HPP

#include <map>
#include <vector>

#include "apery/poly.hpp"
#include "apery/ratfunc.hpp"

namespace apery {

/// A rational function kept in factored form
///   scalar * poly(t) * prod (t+a)^num_shifts[a] / prod (t+a)^den_shifts[a].
/// Telescoping identities are verified by putting several such terms over
/// their shared denominator profile and summing numerators, so no gcd ever
/// runs on the large products.
struct FactoredTerm {
    BigRat scalar = BigRat(1);
    Poly poly = Poly::constant(BigRat(1));
    std::map<long, int> num_shifts;
    std::map<long, int> den_shifts;

    void add_num(long a, int e = 1);
    void add_den(long a, int e = 1);
    /// Cancels (t+a) powers shared by numerator and denominator.
    void reduce();

    /// t -> t + d.
    FactoredTerm shifted(long d) const;
    FactoredTerm scaled(const BigRat& s) const;
    FactoredTerm times(const Poly& p) const;
};

/// Pointwise maximum of the terms' denominator exponents.
std::map<long, int> denominator_profile(const std::vector<FactoredTerm>& terms);

/// Numerator of term over the profile denominator; every exponent in the
/// term's denominator must be covered by the profile.
Poly numerator_over(const FactoredTerm& term, const std::map<long, int>& profile);

/// Expanded canonical form. Requires a reduced term whose poly factor has no
/// root at any -a of the denominator (true for the kernels built below).
RatFunc to_ratfunc(const FactoredTerm& term);

/// ((t-1)...(t-n))^2 / (t(t+1)...(t+n))^2.
FactoredTerm apery_kernel_factors(long n);

/// n!^2 (2t+n) (t-1)...(t-n) (t+n+1)...(t+2n) / (t(t+1)...(t+n))^4.
/// For even n the factor 2(t + n/2) is folded into the shift maps, so the
/// pole at t = -n/2 drops to order 3 after reduction.
FactoredTerm ball_kernel_factors(long n);

/// The ball kernel divided by (2t+n)(t+2n-1)(t+2n); multiplying by the
/// degree-6 certificate polynomial gives the telescoping summand. n >= 1.
FactoredTerm ball_prefactor_base(long n);

}  // namespace apery

#endif
