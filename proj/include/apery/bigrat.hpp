#ifndef APERY_BIGRAT_HPP
#define APERY_BIGRAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace apery {

using BigInt = mpz_class;

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den >= 1.
class BigRat {
public:
    BigRat() : q_(0) {}
    BigRat(long v) : q_(static_cast<signed long>(v)) {}
    BigRat(const BigInt& v) : q_(v) {}
    BigRat(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        q_.canonicalize();
    }
    BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}
    explicit BigRat(const std::string& s) : q_(s) {
        q_.canonicalize();
    }

    const BigInt numerator() const { return q_.get_num(); }
    const BigInt denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    BigRat operator-() const { return BigRat(mpq_class(-q_), raw_tag{}); }
    BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
    BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
    BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { a += b; return a; }
    friend BigRat operator-(BigRat a, const BigRat& b) { a -= b; return a; }
    friend BigRat operator*(BigRat a, const BigRat& b) { a *= b; return a; }
    friend BigRat operator/(BigRat a, const BigRat& b) { a /= b; return a; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.q_ >= b.q_; }

    BigRat abs() const { return BigRat(mpq_class(::abs(q_)), raw_tag{}); }
    BigRat inverse() const {
        if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
        return BigRat(mpq_class(1 / q_), raw_tag{});
    }

    /// "num/den", or just "num" when den == 1.
    std::string str() const { return q_.get_str(); }

private:
    struct raw_tag {};
    BigRat(mpq_class q, raw_tag) : q_(std::move(q)) {}
    mpq_class q_;
};

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt pow10(unsigned long e) { return pow(BigInt(10), e); }

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// floor(sqrt(v)), v >= 0.
inline BigInt isqrt(const BigInt& v) {
    if (v < 0) throw std::domain_error("isqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

/// Number of decimal digits of |v| (1 for v == 0). May overestimate by one.
inline long dec_digits(const BigInt& v) {
    if (v == 0) return 1;
    return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 10));
}

inline BigInt rat_floor(const BigRat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return r;
}

inline BigInt rat_ceil(const BigRat& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return r;
}

/// 10^e as an exact rational, e of either sign.
inline BigRat pow10_rat(long e) {
    if (e >= 0) return BigRat(pow10(static_cast<unsigned long>(e)));
    return BigRat(BigInt(1), pow10(static_cast<unsigned long>(-e)));
}

}  // namespace apery

#endif
