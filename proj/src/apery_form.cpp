#include "apery/apery_form.hpp"

#include <stdexcept>

#include "apery/errors.hpp"
#include "apery/factored.hpp"
#include "apery/lcm_sieve.hpp"

namespace apery {

namespace {

BigRat cube(long m) {
    const BigInt b(m);
    return BigRat(b * b * b);
}

// Signed residue of the unsquared kernel: (t-1)...(t-n)/(t(t+1)...(t+n))
// equals sum c_k/(t+k).
std::vector<BigRat> residue_row(long n) {
    std::vector<BigRat> c(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        BigInt m = binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(n)) *
                   binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        if ((n - k) % 2 != 0) m = -m;
        c[static_cast<std::size_t>(k)] = BigRat(m);
    }
    return c;
}

}  // namespace

RatFunc build_R(long n) {
    if (n < 0) throw std::invalid_argument("build_R: n must be nonnegative");
    return to_ratfunc(apery_kernel_factors(n));
}

AperyCoefficients apery_coeffs(long n) {
    if (n < 0) throw std::invalid_argument("apery_coeffs: n must be nonnegative");
    AperyCoefficients out;
    out.n = n;
    const std::vector<BigRat> c = residue_row(n);
    const std::size_t m = c.size();
    out.a2.resize(m);
    out.a1.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        out.a2[k] = c[k] * c[k];
        BigRat s(0);
        for (std::size_t l = 0; l < m; ++l) {
            if (l == k) continue;
            s = s + c[l] / BigRat(static_cast<long>(l) - static_cast<long>(k));
        }
        out.a1[k] = BigRat(2) * c[k] * s;
    }

    // Independent path: exact decomposition of the squared kernel.
    std::vector<std::pair<long, int>> poles;
    for (long k = 0; k <= n; ++k) poles.push_back({k, 2});
    const PartialFraction pf = pf_decompose(build_R(n), poles);
    for (long k = 0; k <= n; ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        if (pf.coeff(k, 2) != out.a2[i] || pf.coeff(k, 1) != out.a1[i])
            throw ConsistencyError("apery_coeffs: closed form disagrees with decomposition");
    }
    return out;
}

LinearForm apery_uv(const AperyCoefficients& coeffs, HarmonicTable& harmonic) {
    LinearForm f;
    f.n = coeffs.n;
    f.kind = FormKind::apery;
    BigRat u(0), v(0), a1sum(0);
    for (std::size_t k = 0; k < coeffs.a2.size(); ++k) {
        const long kk = static_cast<long>(k);
        u = u + coeffs.a2[k];
        v = v + BigRat(2) * coeffs.a2[k] * harmonic.h(3, kk) + coeffs.a1[k] * harmonic.h(2, kk);
        a1sum = a1sum + coeffs.a1[k];
    }
    f.u = BigRat(2) * u;
    f.v = v;

    if (!a1sum.is_zero()) throw ConsistencyError("apery_uv: residues do not sum to zero");
    const BigInt d = lcm_upto(coeffs.n);
    if (!f.u.is_integer()) throw ConsistencyError("apery_uv: u is not an integer");
    if (!(BigRat(d * d * d) * f.v).is_integer())
        throw ConsistencyError("apery_uv: lcm(1..n)^3 does not clear v");
    for (const BigRat& a : coeffs.a1)
        if (!(BigRat(d) * a).is_integer())
            throw ConsistencyError("apery_uv: lcm(1..n) does not clear a residue");
    return f;
}

LinearForm apery_uv(long n) {
    HarmonicTable harmonic;
    const AperyCoefficients coeffs = apery_coeffs(n);
    return apery_uv(coeffs, harmonic);
}

Certificate certificate_s(long n) {
    if (n < 1) throw std::domain_error("certificate_s: defined for n >= 1");
    const BigInt b(2 * n + 1);
    Certificate c;
    c.n = n;
    c.kind = FormKind::apery;
    c.prefactor_num = Poly({BigRat(b * b), BigRat(1), BigRat(-2)}) * BigRat(4 * b);
    return c;
}

AperyTelescoping verify_apery_telescoping(long n) {
    if (n < 1) throw std::domain_error("verify_apery_telescoping: defined for n >= 1");
    const Poly s = certificate_s(n).prefactor_num;

    std::vector<FactoredTerm> terms;
    terms.push_back(apery_kernel_factors(n + 1).scaled(cube(n + 1)));
    terms.push_back(apery_kernel_factors(n).scaled(BigRat(-recurrence_lambda(n))));
    terms.push_back(apery_kernel_factors(n - 1).scaled(cube(n)));
    terms.push_back(apery_kernel_factors(n).shifted(1).times(s.shift(BigRat(1))).scaled(BigRat(-1)));
    terms.push_back(apery_kernel_factors(n).times(s));

    const auto profile = denominator_profile(terms);
    Poly sum;
    for (const auto& t : terms) sum += numerator_over(t, profile);

    AperyTelescoping v;
    v.identity_ok = sum.is_zero();

    // Zeros at t = 1 are read off the numerators; the denominator has all
    // its roots at t <= 0, so it cannot interfere.
    std::vector<BigRat> neg, pos;
    for (long j = 1; j <= n; ++j) {
        neg.push_back(BigRat(-j));
        neg.push_back(BigRat(-j));
    }
    for (long j = 0; j <= n; ++j) {
        pos.push_back(BigRat(j));
        pos.push_back(BigRat(j));
    }
    const Poly nr = Poly::linear_product(neg);
    const Poly dr = Poly::linear_product(pos);
    const Poly ns = s * nr;
    const BigRat one(1);
    const BigRat s_quot_deriv = ns.derivative().eval(one) * dr.eval(one) - ns.eval(one) * dr.derivative().eval(one);
    v.s_prime_at_1_is_zero = s_quot_deriv.is_zero();
    v.double_zero_at_1 = nr.eval(one).is_zero() && nr.derivative().eval(one).is_zero() &&
                         ns.eval(one).is_zero() && s_quot_deriv.is_zero();
    return v;
}

Certificate fit_certificate(long n, CertificateShape shape) {
    if (n < 1) throw std::domain_error("fit_certificate: defined for n >= 1");
    const bool deg2 = shape == CertificateShape::apery_deg2;
    const std::size_t unknowns = deg2 ? 3 : 7;

    const FactoredTerm base = deg2 ? apery_kernel_factors(n) : ball_prefactor_base(n);
    const FactoredTerm base_next = base.shifted(1);

    std::vector<FactoredTerm> lhs;
    if (deg2) {
        lhs.push_back(apery_kernel_factors(n + 1).scaled(cube(n + 1)));
        lhs.push_back(apery_kernel_factors(n).scaled(BigRat(-recurrence_lambda(n))));
        lhs.push_back(apery_kernel_factors(n - 1).scaled(cube(n)));
    } else {
        lhs.push_back(ball_kernel_factors(n + 1).scaled(cube(n + 1)));
        lhs.push_back(ball_kernel_factors(n).scaled(BigRat(-recurrence_lambda(n))));
        lhs.push_back(ball_kernel_factors(n - 1).scaled(cube(n)));
    }

    std::vector<FactoredTerm> all = lhs;
    all.push_back(base);
    all.push_back(base_next);
    const auto profile = denominator_profile(all);

    Poly target;
    for (const auto& t : lhs) target += numerator_over(t, profile);
    const Poly ng = numerator_over(base, profile);
    const Poly ns = numerator_over(base_next, profile);

    // Ansatz P(t) = sum p_i t^i: the identity demands
    // sum_i p_i ((t+1)^i ns - t^i ng) = target, coefficient by coefficient.
    std::vector<Poly> cols(unknowns);
    Poly ti = Poly::constant(BigRat(1));
    Poly t1i = Poly::constant(BigRat(1));
    const Poly t_mono = Poly::monomial(BigRat(1), 1);
    const Poly t1 = Poly::linear(BigRat(1));
    for (std::size_t i = 0; i < unknowns; ++i) {
        cols[i] = t1i * ns - ti * ng;
        ti = ti * t_mono;
        t1i = t1i * t1;
    }

    long maxdeg = target.degree();
    for (const auto& c : cols) maxdeg = std::max(maxdeg, c.degree());
    const std::size_t rows = static_cast<std::size_t>(maxdeg + 1);

    std::vector<std::vector<BigRat>> m(rows, std::vector<BigRat>(unknowns + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < unknowns; ++i) m[r][i] = cols[i].coeff(r);
        m[r][unknowns] = target.coeff(r);
    }

    // Exact Gauss-Jordan elimination.
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_row(unknowns, 0);
    for (std::size_t col = 0; col < unknowns; ++col) {
        std::size_t pr = rank;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[rank], m[pr]);
        const BigRat inv = m[rank][col].inverse();
        for (auto& x : m[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const BigRat f = m[r][col];
            for (std::size_t i = col; i <= unknowns; ++i) m[r][i] = m[r][i] - f * m[rank][i];
        }
        pivot_row[col] = rank;
        ++rank;
        if (rank == unknowns) break;
    }
    if (rank < unknowns)
        throw AnsatzError("fit_certificate: ansatz underdetermined (rank deficiency)");
    for (std::size_t r = rank; r < rows; ++r)
        if (!m[r][unknowns].is_zero())
            throw AnsatzError("fit_certificate: no solution under the ansatz");

    std::vector<BigRat> p(unknowns);
    for (std::size_t col = 0; col < unknowns; ++col) p[col] = m[pivot_row[col]][unknowns];

    Poly recomposed;
    for (std::size_t i = 0; i < unknowns; ++i) recomposed += cols[i] * p[i];
    if (!(recomposed == target)) throw AnsatzError("fit_certificate: solution fails to reproduce the identity");

    Certificate c;
    c.n = n;
    c.kind = deg2 ? FormKind::apery : FormKind::ball;
    c.prefactor_num = Poly(std::move(p));
    if (!deg2)
        c.prefactor_den =
            Poly({BigRat(n), BigRat(2)}) * Poly::linear(BigRat(2 * n - 1)) * Poly::linear(BigRat(2 * n));
    return c;
}

std::vector<std::pair<long, bool>> recurrence_check(const std::vector<BigRat>& seq, long start_n) {
    if (seq.size() < 3) throw std::invalid_argument("recurrence_check: need at least three terms");
    std::vector<std::pair<long, bool>> out;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        const long mid = start_n + static_cast<long>(i);
        const BigRat residual = cube(mid + 1) * seq[i + 1] - BigRat(recurrence_lambda(mid)) * seq[i] +
                                cube(mid) * seq[i - 1];
        out.push_back({mid, residual.is_zero()});
    }
    return out;
}

}  // namespace apery
