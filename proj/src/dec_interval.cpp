#include "apery/dec_interval.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "apery/errors.hpp"

namespace apery {

namespace {

// |q| lies within a factor ~10 of 10^result; only used to pick scales, never
// for correctness.
long rat_magnitude(const BigRat& q) {
    if (q.is_zero()) return 0;
    return dec_digits(q.numerator()) - dec_digits(q.denominator());
}

// Enclosure of atanh(u) for |u| < 1/2 by exact rational series arithmetic.
std::pair<BigRat, BigRat> atanh_enclosure(const BigRat& u, long digits) {
    const BigRat tol = pow10_rat(-(digits + 4));
    const BigRat u2 = u * u;
    BigRat p = u;
    BigRat s(0);
    long idx = 1;
    while (p.abs() > tol) {
        s += p / BigRat(idx);
        p *= u2;
        idx += 2;
    }
    // Remaining terms share the sign of u; bound by the geometric series.
    const BigRat tail = p.abs() / (BigRat(idx) * (BigRat(1) - u2));
    return {s - tail, s + tail};
}

const std::pair<BigRat, BigRat>& ln2_enclosure(long digits) {
    static std::map<long, std::pair<BigRat, BigRat>> cache;
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
    auto a = atanh_enclosure(BigRat(1, 3), digits);
    return cache.emplace(digits, std::make_pair(BigRat(2) * a.first, BigRat(2) * a.second)).first->second;
}

}  // namespace

DecInterval DecInterval::from_bounds(const BigRat& lo, const BigRat& hi, long digits) {
    if (hi < lo) throw PrecisionError("DecInterval: inverted bounds");
    if (digits < 1) digits = 1;
    if (lo.is_zero() && hi.is_zero()) return DecInterval();

    DecInterval r;
    const long mag = std::max(rat_magnitude(lo), rat_magnitude(hi));
    r.exp10_ = mag - digits;
    const BigRat scale = pow10_rat(-r.exp10_);
    const BigInt mlo = rat_floor(lo * scale);
    const BigInt mhi = rat_ceil(hi * scale);
    BigInt mid = mlo + mhi;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    const BigInt e1 = mid - mlo;
    const BigInt e2 = mhi - mid;
    r.mant_ = mid;
    r.err_ = (e1 > e2) ? e1 : e2;
    return r;
}

DecInterval DecInterval::exact(const BigRat& q, long digits) { return from_bounds(q, q, digits); }

bool DecInterval::contains_zero() const { return mant_ - err_ <= 0 && mant_ + err_ >= 0; }
bool DecInterval::is_positive() const { return mant_ - err_ > 0; }
bool DecInterval::is_negative() const { return mant_ + err_ < 0; }
bool DecInterval::contains(const BigRat& x) const { return lo() <= x && x <= hi(); }
bool DecInterval::certainly_less(const DecInterval& o) const { return hi() < o.lo(); }

DecInterval DecInterval::neg() const {
    DecInterval r = *this;
    r.mant_ = -r.mant_;
    return r;
}

DecInterval DecInterval::add(const DecInterval& o, long digits) const {
    return from_bounds(lo() + o.lo(), hi() + o.hi(), digits);
}

DecInterval DecInterval::sub(const DecInterval& o, long digits) const { return add(o.neg(), digits); }

DecInterval DecInterval::mul(const DecInterval& o, long digits) const {
    const BigRat p1 = lo() * o.lo(), p2 = lo() * o.hi(), p3 = hi() * o.lo(), p4 = hi() * o.hi();
    const BigRat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
    const BigRat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
    return from_bounds(nlo, nhi, digits);
}

DecInterval DecInterval::div(const DecInterval& o, long digits) const {
    if (o.contains_zero()) throw PrecisionError("DecInterval: division by interval containing zero");
    const BigRat q1 = lo() / o.lo(), q2 = lo() / o.hi(), q3 = hi() / o.lo(), q4 = hi() / o.hi();
    const BigRat nlo = std::min(std::min(q1, q2), std::min(q3, q4));
    const BigRat nhi = std::max(std::max(q1, q2), std::max(q3, q4));
    return from_bounds(nlo, nhi, digits);
}

DecInterval DecInterval::powi(unsigned long e, long digits) const {
    DecInterval result = exact(BigRat(1), digits);
    DecInterval base = *this;
    const long guard = digits + 6;
    while (e > 0) {
        if (e & 1UL) result = result.mul(base, guard);
        e >>= 1UL;
        if (e > 0) base = base.mul(base, guard);
    }
    return from_bounds(result.lo(), result.hi(), digits);
}

DecInterval DecInterval::sqrt(long digits) const {
    const BigRat l = lo();
    if (l.sign() < 0) throw PrecisionError("DecInterval: sqrt of interval reaching below zero");
    return from_bounds(sqrt_enclosure(l, digits + 2).first, sqrt_enclosure(hi(), digits + 2).second,
                       digits);
}

DecInterval DecInterval::ln(long digits) const {
    if (!is_positive()) throw PrecisionError("DecInterval: ln of interval reaching zero");
    return from_bounds(ln_enclosure(lo(), digits + 2).first, ln_enclosure(hi(), digits + 2).second,
                       digits);
}

std::pair<BigRat, BigRat> sqrt_enclosure(const BigRat& q, long digits) {
    if (q.sign() < 0) throw PrecisionError("sqrt_enclosure: negative argument");
    const BigInt m = pow10(static_cast<unsigned long>(digits + 2));
    const BigRat scaled = q * BigRat(m * m);
    const BigInt a = rat_floor(scaled);
    const BigInt lo = isqrt(a);
    const BigInt b = rat_ceil(scaled);
    BigInt hi = isqrt(b);
    if (hi * hi < b) hi += 1;
    return {BigRat(lo, m), BigRat(hi, m)};
}

std::pair<BigRat, BigRat> ln_enclosure(const BigRat& q, long digits) {
    if (q.sign() <= 0) throw PrecisionError("ln_enclosure: argument must be positive");
    // q = m * 2^k with m in [3/4, 3/2), so |(m-1)/(m+1)| <= 1/5.
    const BigRat upper(3, 2), lower(3, 4);
    BigRat m = q;
    long k = 0;
    while (m >= upper) {
        m /= BigRat(2);
        ++k;
    }
    while (m < lower) {
        m *= BigRat(2);
        --k;
    }
    const BigRat u = (m - BigRat(1)) / (m + BigRat(1));
    auto a = atanh_enclosure(u, digits);
    BigRat lo = BigRat(2) * a.first;
    BigRat hi = BigRat(2) * a.second;
    if (k != 0) {
        const auto& l2 = ln2_enclosure(digits);
        if (k > 0) {
            lo += BigRat(k) * l2.first;
            hi += BigRat(k) * l2.second;
        } else {
            lo += BigRat(k) * l2.second;
            hi += BigRat(k) * l2.first;
        }
    }
    return {lo, hi};
}

std::string decimal_string(const BigRat& q, long frac_digits) {
    if (frac_digits < 0) frac_digits = 0;
    const BigRat scaled = q * pow10_rat(frac_digits);
    const BigInt t = (q.sign() >= 0) ? rat_floor(scaled) : rat_ceil(scaled);
    std::string digits = BigInt(::abs(t)).get_str();
    std::string out = (t < 0) ? "-" : "";
    if (frac_digits == 0) return out + digits;
    if (static_cast<long>(digits.size()) <= frac_digits)
        digits.insert(0, static_cast<std::size_t>(frac_digits) - digits.size() + 1, '0');
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(frac_digits));
    out += ".";
    out += digits.substr(digits.size() - static_cast<std::size_t>(frac_digits));
    return out;
}

std::string DecInterval::to_string(long digits) const {
    if (digits < 1) digits = 1;
    if (mant_ == 0) {
        // Centered on zero; the rendering is just 0 and error_string carries
        // the width.
        return "0";
    }
    const bool negative = mant_ < 0;
    std::string s = BigInt(::abs(mant_)).get_str();
    const long full = static_cast<long>(s.size());
    const long keep = std::min(full, digits);
    std::string d = s.substr(0, static_cast<std::size_t>(keep));
    const long point_pos = full + exp10_;  // value = 0.d1 d2... * 10^point_pos

    std::ostringstream os;
    if (negative) os << "-";
    if (point_pos > 0 && point_pos <= 15 && point_pos >= keep - 40) {
        if (point_pos >= keep) {
            os << d << std::string(static_cast<std::size_t>(point_pos - keep), '0');
        } else {
            os << d.substr(0, static_cast<std::size_t>(point_pos)) << "."
               << d.substr(static_cast<std::size_t>(point_pos));
        }
    } else if (point_pos <= 0 && point_pos > -5) {
        os << "0." << std::string(static_cast<std::size_t>(-point_pos), '0') << d;
    } else {
        os << d.substr(0, 1);
        if (d.size() > 1) os << "." << d.substr(1);
        os << "e" << (point_pos - 1);
    }
    return os.str();
}

std::string DecInterval::error_string(long digits) const {
    if (digits < 1) digits = 1;
    BigRat total = radius();
    if (mant_ != 0) {
        // Slack from digits dropped by to_string's truncation.
        const long full = static_cast<long>(BigInt(::abs(mant_)).get_str().size());
        if (full > digits) total += pow10_rat(exp10_ + (full - digits));
    }
    if (total.is_zero()) return "0";
    long e = rat_magnitude(total) + 2;
    BigInt m2 = rat_ceil(total * pow10_rat(-(e - 2)));
    while (m2 >= 100) {
        m2 = rat_ceil(BigRat(m2, 10));
        ++e;
    }
    while (m2 < 10) {
        m2 *= 10;
        --e;
    }
    const std::string ds = m2.get_str();
    std::ostringstream os;
    os << ds[0] << "." << ds[1] << "e" << (e - 2);
    return os.str();
}

}  // namespace apery
