#ifndef APERY_RATFUNC_HPP
#define APERY_RATFUNC_HPP

#include <map>
#include <utility>
#include <vector>

#include "apery/poly.hpp"

namespace apery {

/// Quotient of two polynomials in canonical form: gcd(num, den) = 1 and the
/// denominator is monic (its content is folded into the numerator).
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(BigRat(1))) {}
    RatFunc(Poly num, Poly den);
    static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), known_canonical_tag{}); }

    /// Caller guarantees gcd(num, den) = 1 already; only the monic scaling
    /// is applied. Used by kernel builders whose factorizations are known.
    struct coprime_tag {};
    RatFunc(Poly num, Poly den, coprime_tag);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// deg(den) - deg(num); large positive values mean fast decay at infinity.
    long degree_drop() const { return den_.degree() - num_.degree(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator*(const BigRat& s) const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// f(t + a). An automorphism, so no re-normalization is needed.
    RatFunc shift(const BigRat& a) const;
    RatFunc shift1() const { return shift(BigRat(1)); }
    RatFunc derivative() const;
    /// Throws PoleError when x is a root of the denominator.
    BigRat eval(const BigRat& x) const;

    std::string str() const;

private:
    struct known_canonical_tag {};
    RatFunc(Poly num, known_canonical_tag) : num_(std::move(num)), den_(Poly::constant(BigRat(1))) {}
    void scale_monic();
    Poly num_, den_;
};

/// Partial-fraction data of a rational function whose poles all sit at
/// non-positive integers: terms[(k, j)] is the coefficient of 1/(t+k)^j.
class PartialFraction {
public:
    using Key = std::pair<long, int>;

    PartialFraction() = default;
    PartialFraction(std::map<Key, BigRat> terms, Poly poly_part)
        : terms_(std::move(terms)), poly_part_(std::move(poly_part)) {}

    const std::map<Key, BigRat>& terms() const { return terms_; }
    const Poly& poly_part() const { return poly_part_; }
    /// Zero when the (k, j) term is absent.
    BigRat coeff(long k, int j) const;
    /// Sum over poles of the order-j coefficients.
    BigRat order_sum(int j) const;

    /// Reassembles sum coeff/(t+k)^j + poly_part as a canonical RatFunc.
    RatFunc reconstruct() const;

private:
    std::map<Key, BigRat> terms_;
    Poly poly_part_;
};

/// Exact decomposition of f at the given poles, each a pair (k, max_order)
/// for the pole at t = -k. Requires deg num < deg den; verifies the
/// reconstruction identity before returning.
PartialFraction pf_decompose(const RatFunc& f, const std::vector<std::pair<long, int>>& poles);

}  // namespace apery

#endif
