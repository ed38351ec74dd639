#include "apery/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

#include "apery/errors.hpp"

namespace apery {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(BigRat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    scale_monic();
}

RatFunc::RatFunc(Poly num, Poly den, coprime_tag) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(BigRat(1));
        return;
    }
    scale_monic();
}

void RatFunc::scale_monic() {
    const BigRat lead = den_.coeff(den_.degree());
    if (lead == BigRat(1)) return;
    den_ = den_ * lead.inverse();
    num_ = num_ * lead.inverse();
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Split off the common denominator factor first to keep the gcd small.
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.degree() > 0) {
        Poly da = a.den_.exact_div(g);
        Poly db = b.den_.exact_div(g);
        return RatFunc(a.num_ * db + b.num_ * da, da * db * g);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel before multiplying; both factors are canonical already.
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly na = (g1.degree() > 0) ? a.num_.exact_div(g1) : a.num_;
    Poly db = (g1.degree() > 0) ? b.den_.exact_div(g1) : b.den_;
    Poly nb = (g2.degree() > 0) ? b.num_.exact_div(g2) : b.num_;
    Poly da = (g2.degree() > 0) ? a.den_.exact_div(g2) : a.den_;
    RatFunc r;
    r.num_ = na * nb;
    r.den_ = da * db;
    r.scale_monic();
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.scale_monic();
    return a * inv;
}

RatFunc RatFunc::operator*(const BigRat& s) const {
    if (s.is_zero() || is_zero()) return RatFunc();
    RatFunc r;
    r.num_ = num_ * s;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::shift(const BigRat& a) const {
    // t -> t + a maps coprime pairs to coprime pairs and keeps den monic.
    RatFunc r;
    r.num_ = num_.shift(a);
    r.den_ = den_.shift(a);
    return r;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRat RatFunc::eval(const BigRat& x) const {
    const BigRat d = den_.eval(x);
    if (d.is_zero()) throw PoleError(x);
    return num_.eval(x) / d;
}

std::string RatFunc::str() const {
    if (den_ == Poly::constant(BigRat(1))) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

BigRat PartialFraction::coeff(long k, int j) const {
    auto it = terms_.find({k, j});
    return it == terms_.end() ? BigRat(0) : it->second;
}

BigRat PartialFraction::order_sum(int j) const {
    BigRat s(0);
    for (const auto& [key, c] : terms_)
        if (key.second == j) s = s + c;
    return s;
}

RatFunc PartialFraction::reconstruct() const {
    // Assemble over the minimal common denominator. Minimality (nonzero top
    // coefficient at each pole) makes the result coprime by construction:
    // at t = -k only the (k, max_order) part survives, so no gcd is needed.
    std::map<long, int> max_order;
    for (const auto& [key, c] : terms_) {
        if (c.is_zero()) continue;
        int& m = max_order[key.first];
        if (key.second > m) m = key.second;
    }
    Poly den = Poly::constant(BigRat(1));
    for (const auto& [k, m] : max_order) den = den * Poly::linear(BigRat(k)).pow(static_cast<unsigned>(m));
    Poly num = poly_part_ * den;
    for (const auto& [key, c] : terms_) {
        if (c.is_zero()) continue;
        Poly part = Poly::constant(c);
        for (const auto& [k, m] : max_order) {
            const int e = (k == key.first) ? m - key.second : m;
            if (e > 0) part = part * Poly::linear(BigRat(k)).pow(static_cast<unsigned>(e));
        }
        num = num + part;
    }
    return RatFunc(std::move(num), std::move(den), RatFunc::coprime_tag{});
}

PartialFraction pf_decompose(const RatFunc& f, const std::vector<std::pair<long, int>>& poles) {
    if (f.num().degree() >= f.den().degree())
        throw DecompositionError("pf_decompose: proper rational function required");

    std::map<PartialFraction::Key, BigRat> terms;
    for (const auto& [k, declared] : poles) {
        // Actual multiplicity of the pole at t = -k in the canonical form.
        const Poly lin = Poly::linear(BigRat(k));
        Poly cofactor = f.den();
        int m = 0;
        while (true) {
            auto [q, r] = cofactor.divmod(lin);
            if (!r.is_zero()) break;
            cofactor = std::move(q);
            ++m;
        }
        if (m == 0) continue;
        if (m > declared) throw DecompositionError("pf_decompose: pole order exceeds declared bound");

        // f = num / ((t+k)^m cofactor). Expanding num/cofactor as a power
        // series in s = t + k gives the coefficients of 1/(t+k)^(m-i).
        const BigRat a(-k);
        const std::vector<BigRat> nt = f.num().taylor(a, static_cast<std::size_t>(m));
        const std::vector<BigRat> ct = cofactor.taylor(a, static_cast<std::size_t>(m));
        std::vector<BigRat> h(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            BigRat s = nt[static_cast<std::size_t>(i)];
            for (int l = 1; l <= i; ++l)
                s = s - ct[static_cast<std::size_t>(l)] * h[static_cast<std::size_t>(i - l)];
            h[static_cast<std::size_t>(i)] = s / ct[0];
        }
        for (int i = 0; i < m; ++i) {
            if (h[static_cast<std::size_t>(i)].is_zero()) continue;
            terms[{k, m - i}] = h[static_cast<std::size_t>(i)];
        }
    }

    PartialFraction pf(std::move(terms), Poly::zero());
    if (!(pf.reconstruct() == f))
        throw DecompositionError("pf_decompose: reconstruction mismatch, pole list incomplete");
    return pf;
}

}  // namespace apery
