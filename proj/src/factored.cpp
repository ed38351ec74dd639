#include "apery/factored.hpp"

#include <stdexcept>

#include "apery/errors.hpp"

namespace apery {

void FactoredTerm::add_num(long a, int e) {
    if (e == 0) return;
    int& v = num_shifts[a];
    v += e;
    if (v == 0) num_shifts.erase(a);
}

void FactoredTerm::add_den(long a, int e) {
    if (e == 0) return;
    int& v = den_shifts[a];
    v += e;
    if (v == 0) den_shifts.erase(a);
}

void FactoredTerm::reduce() {
    for (auto it = num_shifts.begin(); it != num_shifts.end();) {
        auto dit = den_shifts.find(it->first);
        if (dit == den_shifts.end()) {
            ++it;
            continue;
        }
        const int c = std::min(it->second, dit->second);
        it->second -= c;
        dit->second -= c;
        if (dit->second == 0) den_shifts.erase(dit);
        if (it->second == 0)
            it = num_shifts.erase(it);
        else
            ++it;
    }
}

FactoredTerm FactoredTerm::shifted(long d) const {
    FactoredTerm r;
    r.scalar = scalar;
    r.poly = poly.shift(BigRat(d));
    for (const auto& [a, e] : num_shifts) r.num_shifts[a + d] = e;
    for (const auto& [a, e] : den_shifts) r.den_shifts[a + d] = e;
    return r;
}

FactoredTerm FactoredTerm::scaled(const BigRat& s) const {
    FactoredTerm r = *this;
    r.scalar = r.scalar * s;
    return r;
}

FactoredTerm FactoredTerm::times(const Poly& p) const {
    FactoredTerm r = *this;
    r.poly = r.poly * p;
    return r;
}

std::map<long, int> denominator_profile(const std::vector<FactoredTerm>& terms) {
    std::map<long, int> profile;
    for (const auto& t : terms)
        for (const auto& [a, e] : t.den_shifts) {
            int& v = profile[a];
            if (e > v) v = e;
        }
    return profile;
}

Poly numerator_over(const FactoredTerm& term, const std::map<long, int>& profile) {
    std::vector<BigRat> shifts;
    for (const auto& [a, e] : term.num_shifts)
        for (int i = 0; i < e; ++i) shifts.push_back(BigRat(a));
    for (const auto& [a, e] : profile) {
        auto it = term.den_shifts.find(a);
        const int have = (it == term.den_shifts.end()) ? 0 : it->second;
        if (have > e) throw ConsistencyError("numerator_over: profile does not cover denominator");
        for (int i = 0; i < e - have; ++i) shifts.push_back(BigRat(a));
    }
    for (const auto& [a, e] : term.den_shifts)
        if (profile.find(a) == profile.end() && e > 0)
            throw ConsistencyError("numerator_over: profile does not cover denominator");
    return Poly::linear_product(shifts) * term.poly * term.scalar;
}

RatFunc to_ratfunc(const FactoredTerm& term) {
    std::vector<BigRat> ns, ds;
    for (const auto& [a, e] : term.num_shifts)
        for (int i = 0; i < e; ++i) ns.push_back(BigRat(a));
    for (const auto& [a, e] : term.den_shifts)
        for (int i = 0; i < e; ++i) ds.push_back(BigRat(a));
    return RatFunc(Poly::linear_product(ns) * term.poly * term.scalar, Poly::linear_product(ds),
                   RatFunc::coprime_tag{});
}

FactoredTerm apery_kernel_factors(long n) {
    if (n < 0) throw std::invalid_argument("apery_kernel_factors: n must be nonnegative");
    FactoredTerm t;
    for (long j = 1; j <= n; ++j) t.add_num(-j, 2);
    for (long j = 0; j <= n; ++j) t.add_den(j, 2);
    return t;
}

FactoredTerm ball_kernel_factors(long n) {
    if (n < 0) throw std::invalid_argument("ball_kernel_factors: n must be nonnegative");
    FactoredTerm t;
    const BigInt f = factorial(static_cast<unsigned long>(n));
    t.scalar = BigRat(f * f);
    for (long j = 1; j <= n; ++j) t.add_num(-j);
    for (long j = n + 1; j <= 2 * n; ++j) t.add_num(j);
    for (long j = 0; j <= n; ++j) t.add_den(j, 4);
    if (n % 2 == 0) {
        t.scalar = t.scalar * BigRat(2);
        t.add_num(n / 2);
    } else {
        t.poly = Poly({BigRat(n), BigRat(2)});
    }
    t.reduce();
    return t;
}

FactoredTerm ball_prefactor_base(long n) {
    if (n < 1) throw std::invalid_argument("ball_prefactor_base: n must be positive");
    FactoredTerm t;
    const BigInt f = factorial(static_cast<unsigned long>(n));
    t.scalar = BigRat(f * f);
    for (long j = 1; j <= n; ++j) t.add_num(-j);
    for (long j = n + 1; j <= 2 * n; ++j) t.add_num(j);
    for (long j = 0; j <= n; ++j) t.add_den(j, 4);
    t.add_den(2 * n - 1);
    t.add_den(2 * n);
    t.reduce();
    return t;
}

}  // namespace apery
