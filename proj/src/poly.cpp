#include "apery/poly.hpp"

#include <algorithm>
#include <sstream>

#include "apery/errors.hpp"

namespace apery {

namespace {
const BigRat kZero{};
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const BigRat& v) {
    Poly p;
    if (!v.is_zero()) p.c_ = {v};
    return p;
}

Poly Poly::monomial(const BigRat& c, std::size_t k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, BigRat());
    p.c_[k] = c;
    return p;
}

Poly Poly::linear(const BigRat& a) {
    Poly p;
    p.c_ = {a, BigRat(1)};
    return p;
}

Poly Poly::linear_product(const std::vector<BigRat>& shifts) {
    Poly p = Poly::constant(BigRat(1));
    for (const auto& a : shifts) p *= Poly::linear(a);
    return p;
}

const BigRat& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

const BigRat& Poly::coeff(std::size_t k) const {
    if (k >= c_.size()) return kZero;
    return c_[k];
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigRat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const BigRat& s) {
    if (s.is_zero()) return Poly();
    Poly r(a);
    for (auto& v : r.c_) v *= s;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(BigRat(1));
    Poly base(*this);
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<BigRat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::shift(const BigRat& a) const {
    auto t = taylor(a, c_.size());
    return Poly(std::move(t));
}

std::vector<BigRat> Poly::taylor(const BigRat& a, std::size_t count) const {
    // In-place Horner rebase: after round i, work[i] is the coefficient of
    // s^i in p(a + s).
    std::vector<BigRat> work(c_);
    std::size_t n = work.size();
    std::size_t rounds = std::min(count, n);
    for (std::size_t i = 0; i < rounds; ++i) {
        for (std::size_t j = n - 1; j > i; --j) work[j - 1] += a * work[j];
    }
    work.resize(count);
    return work;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (degree() < divisor.degree()) return {Poly(), *this};
    std::vector<BigRat> rem(c_);
    std::size_t dn = divisor.c_.size();
    std::vector<BigRat> quot(rem.size() - dn + 1);
    const BigRat& lead = divisor.c_.back();
    for (std::size_t i = rem.size(); i-- >= dn;) {
        if (rem[i].is_zero()) {
            if (i + 1 == dn) break;
            continue;
        }
        BigRat q = rem[i] / lead;
        quot[i - dn + 1] = q;
        for (std::size_t j = 0; j < dn; ++j) rem[i - dn + 1 + j] -= q * divisor.c_[j];
        if (i + 1 == dn) break;
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw ConsistencyError("Poly: division expected to be exact");
    return q;
}

std::pair<BigRat, std::vector<BigInt>> Poly::integer_primitive() const {
    if (is_zero()) return {BigRat(), {}};
    BigInt den_lcm(1);
    for (const auto& v : c_) den_lcm = lcm(den_lcm, v.denominator());
    std::vector<BigInt> ints(c_.size());
    BigInt content(0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        BigRat scaled = c_[i] * BigRat(den_lcm);
        ints[i] = scaled.numerator();
        content = gcd(content, ints[i]);
    }
    if (ints.back() < 0) content = -content;
    for (auto& v : ints) v /= content;
    return {BigRat(content, den_lcm), std::move(ints)};
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigRat& v = c_[i];
        if (v.is_zero()) continue;
        BigRat a = v.abs();
        if (first) {
            if (v.sign() < 0) os << "-";
            first = false;
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == BigRat(1));
        if (i == 0 || !unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// lc(b)^(delta+1) * a = q*b + r over the integers.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> r, const std::vector<BigInt>& b) {
    const BigInt lead = b.back();
    long e = static_cast<long>(r.size()) - static_cast<long>(b.size()) + 1;
    while (!r.empty() && r.size() >= b.size()) {
        BigInt top = r.back();
        std::size_t off = r.size() - b.size();
        for (auto& v : r) v *= lead;
        for (std::size_t j = 0; j < b.size(); ++j) r[off + j] -= top * b[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        --e;
    }
    if (e > 0 && !r.empty()) {
        BigInt f = ::apery::pow(lead, static_cast<unsigned long>(e));
        for (auto& v : r) v *= f;
    }
    return r;
}

std::vector<BigInt> make_primitive(std::vector<BigInt> v) {
    BigInt content(0);
    for (const auto& x : v) content = gcd(content, x);
    if (content == 0) return v;
    if (v.back() < 0) content = -content;
    for (auto& x : v) x /= content;
    return v;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        const Poly& nz = a.is_zero() ? b : a;
        return nz * nz.leading().inverse();
    }
    auto pa = make_primitive(a.integer_primitive().second);
    auto pb = make_primitive(b.integer_primitive().second);
    if (pa.size() < pb.size()) std::swap(pa, pb);

    // Subresultant PRS (Brown); keeps intermediate coefficients polynomial
    // in size instead of doubling every step.
    BigInt g(1), h(1);
    while (true) {
        long delta = static_cast<long>(pa.size()) - static_cast<long>(pb.size());
        std::vector<BigInt> rem = pseudo_rem(pa, pb);
        if (rem.empty()) break;
        if (rem.size() == 1) {
            // Constant remainder: inputs are coprime.
            return Poly::constant(BigRat(1));
        }
        BigInt divisor = g * ::apery::pow(h, static_cast<unsigned long>(delta));
        for (auto& v : rem) v /= divisor;
        pa = std::move(pb);
        pb = std::move(rem);
        g = pa.back();
        if (delta >= 1) {
            BigInt gd = ::apery::pow(g, static_cast<unsigned long>(delta));
            BigInt hd = ::apery::pow(h, static_cast<unsigned long>(delta - 1));
            h = gd / hd;
        }
        // delta == 0 leaves h unchanged.
    }
    pb = make_primitive(std::move(pb));
    std::vector<BigRat> out(pb.size());
    BigRat lead(pb.back());
    for (std::size_t i = 0; i < pb.size(); ++i) out[i] = BigRat(pb[i]) / lead;
    return Poly(std::move(out));
}

}  // namespace apery
