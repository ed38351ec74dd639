#ifndef APERY_POLY_HPP
#define APERY_POLY_HPP

#include <string>
#include <vector>

#include "apery/bigrat.hpp"

namespace apery {

/// Dense univariate polynomial over BigRat.
///
/// Coefficients are stored low degree first with no trailing zeros; the zero
/// polynomial is the empty list and reports degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const BigRat& v);
    /// The monomial c * t^k.
    static Poly monomial(const BigRat& c, std::size_t k);
    /// t + a.
    static Poly linear(const BigRat& a);
    /// prod_{i} (t + shifts[i]).
    static Poly linear_product(const std::vector<BigRat>& shifts);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const BigRat& leading() const;
    /// Coefficient of t^k (zero beyond the degree).
    const BigRat& coeff(std::size_t k) const;
    const std::vector<BigRat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend Poly operator*(const Poly& a, const BigRat& s);
    friend Poly operator*(const BigRat& s, const Poly& a) { return a * s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;
    BigRat eval(const BigRat& x) const;
    Poly derivative() const;
    /// p(t + a).
    Poly shift(const BigRat& a) const;
    /// First count coefficients of p(a + s) as a series in s.
    std::vector<BigRat> taylor(const BigRat& a, std::size_t count) const;

    /// Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Exact quotient; throws ConsistencyError if the remainder is nonzero.
    Poly exact_div(const Poly& divisor) const;

    /// Scale so coefficients are coprime integers; returns the factor pulled
    /// out, i.e. *this == factor * primitive.
    std::pair<BigRat, std::vector<BigInt>> integer_primitive() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

/// Monic gcd over BigRat, computed on integer primitive parts with the
/// subresultant remainder sequence. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace apery

#endif
