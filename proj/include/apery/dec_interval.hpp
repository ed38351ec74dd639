#ifndef APERY_DEC_INTERVAL_HPP
#define APERY_DEC_INTERVAL_HPP

#include <string>
#include <utility>

#include "apery/bigrat.hpp"

namespace apery {

/// Self-validating decimal interval: the represented target lies within
/// [(mantissa - err) * 10^exp10, (mantissa + err) * 10^exp10]. Operations
/// work on the exact rational endpoints and round outward to the requested
/// number of significant digits, so enclosure is preserved unconditionally.
class DecInterval {
public:
    DecInterval() : mant_(0), err_(0), exp10_(0) {}

    static DecInterval exact(const BigRat& q, long digits);
    static DecInterval exact(long v) { return exact(BigRat(v), 1); }
    /// Requires lo <= hi.
    static DecInterval from_bounds(const BigRat& lo, const BigRat& hi, long digits);

    BigRat lo() const { return BigRat(mant_ - err_) * pow10_rat(exp10_); }
    BigRat hi() const { return BigRat(mant_ + err_) * pow10_rat(exp10_); }
    BigRat midpoint() const { return BigRat(mant_) * pow10_rat(exp10_); }
    BigRat radius() const { return BigRat(err_) * pow10_rat(exp10_); }

    const BigInt& mantissa() const { return mant_; }
    const BigInt& err_ulps() const { return err_; }
    long exp10() const { return exp10_; }

    bool is_exact_zero() const { return mant_ == 0 && err_ == 0; }
    bool contains_zero() const;
    bool is_positive() const;  // entire interval > 0
    bool is_negative() const;
    bool contains(const BigRat& x) const;
    /// Certified strict order: every point of *this < every point of o.
    bool certainly_less(const DecInterval& o) const;

    DecInterval neg() const;
    DecInterval add(const DecInterval& o, long digits) const;
    DecInterval sub(const DecInterval& o, long digits) const;
    DecInterval mul(const DecInterval& o, long digits) const;
    /// Throws PrecisionError when o's interval contains zero.
    DecInterval div(const DecInterval& o, long digits) const;
    DecInterval powi(unsigned long e, long digits) const;
    /// Requires a nonnegative lower endpoint.
    DecInterval sqrt(long digits) const;
    /// Natural log; requires a positive lower endpoint.
    DecInterval ln(long digits) const;

    /// Truncated-toward-zero decimal rendering of the midpoint with `digits`
    /// significant digits; scientific notation outside a moderate range.
    std::string to_string(long digits) const;
    /// Total certified error of to_string's rendering (radius plus the
    /// truncation slack), rounded up to two significant digits, e.g. "3.1e-12".
    std::string error_string(long digits) const;

private:
    BigInt mant_;
    BigInt err_;
    long exp10_;
};

/// Enclosure of ln(q) by exact rationals; q > 0.
std::pair<BigRat, BigRat> ln_enclosure(const BigRat& q, long digits);

/// Enclosure of sqrt(q); q >= 0.
std::pair<BigRat, BigRat> sqrt_enclosure(const BigRat& q, long digits);

/// Decimal rendering of an exact rational, truncated toward zero, with
/// `frac_digits` digits after the point.
std::string decimal_string(const BigRat& q, long frac_digits);

}  // namespace apery

#endif
