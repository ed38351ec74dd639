#include <doctest.h>

#include <utility>
#include <vector>

#include "apery/dec_interval.hpp"
#include "apery/errors.hpp"
#include "apery/factored.hpp"
#include "apery/harmonic.hpp"
#include "apery/lcm_sieve.hpp"
#include "apery/poly.hpp"
#include "apery/ratfunc.hpp"
#include "test_util.hpp"

using namespace apery;
using apery::test::dec;

namespace {

Poly P(std::vector<long> coeffs) {
    std::vector<BigRat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("bigrat helpers") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 11) == 0);
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    for (long v : {0L, 1L, 2L, 3L, 4L, 99L, 100L, 101L, 123456789L}) {
        const BigInt r = isqrt(BigInt(v));
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
    }
    CHECK(pow10(3) == 1000);
    CHECK(dec_digits(BigInt(0)) == 1);
    // contract allows one-too-big (mpz_sizeinbase), so bracket instead of pin
    CHECK(dec_digits(BigInt(9)) >= 1);
    CHECK(dec_digits(BigInt(9)) <= 2);
    CHECK(dec_digits(BigInt(-100)) == 3);
    CHECK(rat_floor(BigRat(-7, 2)) == -4);
    CHECK(rat_ceil(BigRat(-7, 2)) == -3);
    CHECK(rat_floor(BigRat(7, 2)) == 3);
    CHECK(pow10_rat(-3) == BigRat(1, 1000));
    CHECK(gcd(BigInt(12), BigInt(18)) == 6);
    CHECK(lcm(BigInt(4), BigInt(6)) == 12);
    CHECK(pow(BigInt(3), 5) == 243);
}

TEST_CASE("poly arithmetic and structure") {
    const Poly a = P({1, 2, 3});   // 3t^2 + 2t + 1
    const Poly b = P({-1, 1});     // t - 1
    const Poly c = P({5, 0, 0, 2});

    CHECK(Poly::zero().is_zero());
    CHECK(Poly::zero().degree() == -1);
    CHECK(P({7}).degree() == 0);
    CHECK(P({0, 0}).is_zero());  // trailing zeros trimmed
    CHECK(a.degree() == 2);
    CHECK(a.leading() == BigRat(3));
    CHECK(a.coeff(5) == BigRat(0));

    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Poly::zero());
    CHECK(-(-a) == a);
    CHECK(a * BigRat(2) == a + a);
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0) == Poly::constant(BigRat(1)));

    CHECK(a.eval(BigRat(2)) == BigRat(17));
    CHECK(Poly::linear(BigRat(4)).eval(BigRat(-4)).is_zero());
    CHECK(Poly::monomial(BigRat(2), 3) == P({0, 0, 0, 2}));
    CHECK(Poly::linear_product({BigRat(1), BigRat(2)}) == P({2, 3, 1}));

    CHECK(a.shift(BigRat(1)).shift(BigRat(-1)) == a);
    CHECK(a.shift(BigRat(1)).eval(BigRat(0)) == a.eval(BigRat(1)));
    CHECK((a * c).derivative() == a.derivative() * c + a * c.derivative());

    const auto taylor = c.taylor(BigRat(2), 4);
    const Poly shifted = c.shift(BigRat(2));
    for (std::size_t k = 0; k < 4; ++k) CHECK(taylor[k] == shifted.coeff(k));
}

TEST_CASE("poly division and gcd") {
    const Poly a = P({3, 0, 1, 4});
    const Poly b = P({1, 2});
    const auto [quot, rem] = a.divmod(b);
    CHECK(a == b * quot + rem);
    CHECK(rem.degree() < b.degree());
    CHECK((a * b).exact_div(b) == a);
    CHECK_THROWS_AS(P({1, 1}).exact_div(P({0, 1})), ConsistencyError);

    const Poly t1 = P({1, 1});
    CHECK(poly_gcd(t1 * P({2, 1}), t1 * P({3, 1})) == t1);  // monic result
    CHECK(poly_gcd(Poly::zero(), Poly::zero()).is_zero());
    CHECK(poly_gcd(P({0, 0, 1}), P({0, 1})) == P({0, 1}));

    const auto [content, prim] = (P({4, 6}) * BigRat(1, 9)).integer_primitive();
    CHECK(content == BigRat(2, 9));
    CHECK(prim == std::vector<BigInt>{BigInt(2), BigInt(3)});
}

TEST_CASE("ratfunc canonical form and calculus") {
    const Poly t1 = P({1, 1}), t2 = P({2, 1}), t3 = P({3, 1});
    CHECK(RatFunc(t1 * t2, t2 * t3) == RatFunc(t1, t3));
    CHECK(RatFunc(t1 * BigRat(3), t2 * BigRat(6)).den().leading() == BigRat(1));

    const RatFunc f(P({0, 1}), t1);  // t / (t+1)
    const RatFunc g(P({1}), t2);     // 1 / (t+2)
    CHECK(f * g / g == f);
    CHECK(f - f == RatFunc());
    CHECK((f + g).eval(BigRat(1)) == f.eval(BigRat(1)) + g.eval(BigRat(1)));
    CHECK_THROWS_AS(g.eval(BigRat(-2)), PoleError);
    CHECK(f.shift1().eval(BigRat(0)) == f.eval(BigRat(1)));

    // quotient rule against an explicit expansion
    const RatFunc df = f.derivative();
    CHECK(df == RatFunc(P({1}), t1 * t1));
    CHECK(g.degree_drop() == 1);
    CHECK(RatFunc(P({1}), t1 * t1).degree_drop() == 2);
}

TEST_CASE("partial fractions round-trip") {
    // 1 / (t (t+1)) = 1/t - 1/(t+1)
    const RatFunc f(P({1}), P({0, 1}) * P({1, 1}));
    const PartialFraction pf = pf_decompose(f, {{0, 1}, {1, 1}});
    CHECK(pf.coeff(0, 1) == BigRat(1));
    CHECK(pf.coeff(1, 1) == BigRat(-1));
    CHECK(pf.coeff(2, 1).is_zero());
    CHECK(pf.order_sum(1).is_zero());
    CHECK(pf.poly_part().is_zero());
    CHECK(pf.reconstruct() == f);

    // higher-order pole: (2t + 3) / (t+1)^2 = 2/(t+1) + 1/(t+1)^2
    const RatFunc g(P({3, 2}), P({1, 1}).pow(2));
    const PartialFraction pg = pf_decompose(g, {{1, 2}});
    CHECK(pg.coeff(1, 1) == BigRat(2));
    CHECK(pg.coeff(1, 2) == BigRat(1));
    CHECK(pg.reconstruct() == g);
}

TEST_CASE("factored kernels match the assembled rational functions") {
    FactoredTerm one;
    one.add_num(3);
    one.add_den(1, 2);
    const RatFunc r = to_ratfunc(one);
    CHECK(r == RatFunc(P({3, 1}), P({1, 1}).pow(2)));

    FactoredTerm reducible;
    reducible.add_num(2);
    reducible.add_num(2);
    reducible.add_den(2, 1);
    reducible.reduce();
    CHECK(to_ratfunc(reducible) == RatFunc::from_poly(P({2, 1})));
}

TEST_CASE("lcm sieve") {
    BigInt direct(1);
    DenominatorLcm dl;
    for (long n = 0; n <= 40; ++n) {
        if (n >= 2) direct = lcm(direct, BigInt(n));
        CHECK(dl.advance_to(n) == direct);
        CHECK(lcm_upto(n) == direct);
    }
    CHECK(lcm_upto(10) == 2520);
    CHECK(lcm_upto(1) == 1);
    // D_n < 3^n for n >= 1
    for (long n = 1; n <= 40; ++n)
        CHECK(lcm_upto(n) < pow(BigInt(3), static_cast<unsigned long>(n)));
}

TEST_CASE("harmonic table") {
    HarmonicTable h;
    CHECK(h.h(1, 0).is_zero());
    CHECK(h.h(1, 3) == BigRat(11, 6));
    CHECK(h.h(3, 2) == BigRat(9, 8));
    CHECK(h.h(2, 4) == BigRat(1) + BigRat(1, 4) + BigRat(1, 9) + BigRat(1, 16));
    // D_n^j H_j(k) integral for k <= n
    for (long n = 1; n <= 10; ++n) {
        const BigInt D = lcm_upto(n);
        for (int j = 1; j <= 4; ++j)
            for (long k = 0; k <= n; ++k)
                CHECK((h.h(j, k) * BigRat(pow(D, static_cast<unsigned long>(j)))).is_integer());
    }
}

TEST_CASE("dec interval construction and containment") {
    const BigRat third(1, 3);
    const DecInterval t = DecInterval::exact(third, 20);
    CHECK(t.contains(third));
    CHECK(t.radius() <= pow10_rat(-20));
    CHECK(t.is_positive());
    CHECK_FALSE(t.contains_zero());

    const DecInterval z = DecInterval::exact(0);
    CHECK(z.is_exact_zero());
    CHECK(z.contains_zero());

    const DecInterval fb = DecInterval::from_bounds(BigRat(1, 7), BigRat(1, 5), 10);
    CHECK(fb.contains(BigRat(1, 7)));
    CHECK(fb.contains(BigRat(1, 5)));
    CHECK(fb.contains(BigRat(1, 6)));
    CHECK_FALSE(fb.contains(BigRat(1, 4)));
    CHECK_THROWS_AS(DecInterval::from_bounds(BigRat(1), BigRat(0), 10), PrecisionError);

    CHECK(DecInterval::exact(-5).is_negative());
    CHECK(DecInterval::exact(-5).neg().is_positive());
}

TEST_CASE("dec interval arithmetic encloses the exact result") {
    const BigRat a(22, 7), b(-355, 113);
    const DecInterval A = DecInterval::exact(a, 25), B = DecInterval::exact(b, 25);
    CHECK(A.add(B, 25).contains(a + b));
    CHECK(A.sub(B, 25).contains(a - b));
    CHECK(A.mul(B, 25).contains(a * b));
    CHECK(A.div(B, 25).contains(a / b));
    CHECK(A.powi(7, 25).contains(a * a * a * a * a * a * a));
    CHECK_THROWS_AS(A.div(DecInterval::from_bounds(BigRat(-1), BigRat(1), 5), 10), PrecisionError);

    const DecInterval s = DecInterval::exact(BigRat(2), 30).sqrt(30);
    CHECK(s.mul(s, 30).contains(BigRat(2)));
    CHECK(s.radius() <= pow10_rat(-29));

    const DecInterval l = DecInterval::exact(BigRat(2), 40).ln(35);
    CHECK(apery::test::close_to(l, "0.69314718055994530941723212145817656807", 34));
    CHECK(DecInterval::exact(BigRat(1), 20).ln(20).contains_zero());

    CHECK(DecInterval::exact(1).certainly_less(DecInterval::exact(2)));
    CHECK_FALSE(DecInterval::from_bounds(BigRat(0), BigRat(2), 10)
                    .certainly_less(DecInterval::exact(1)));
}

TEST_CASE("dec interval rendering truncates toward zero") {
    CHECK(DecInterval::exact(BigRat(2, 3), 20).to_string(5) == "0.66666");
    CHECK(DecInterval::exact(BigRat(-2, 3), 20).to_string(5) == "-0.66666");
    CHECK(DecInterval::exact(BigRat(1, 8), 20).to_string(3) == "0.125");
    CHECK(DecInterval::exact(5).to_string(2) == "5.0");
    // a tighter request than the enclosure supports is reported, not hidden
    const DecInterval wide = DecInterval::from_bounds(BigRat(1), BigRat(2), 3);
    CHECK(wide.error_string(10) != "0");

    CHECK(decimal_string(BigRat(1, 8), 4) == "0.1250");
    CHECK(decimal_string(BigRat(-2, 3), 4) == "-0.6666");

    // ln 2 = 0.693147180559945309417232121458176...; straddle with literals
    // on either side so a tight one-sided bound cannot trip the comparison
    const auto [llo, lhi] = ln_enclosure(BigRat(2), 30);
    CHECK(llo <= dec("0.693147180559945309417232121459"));
    CHECK(lhi >= dec("0.693147180559945309417232121458"));
    CHECK(lhi - llo <= pow10_rat(-25));
    const auto [slo, shi] = sqrt_enclosure(BigRat(2), 30);
    CHECK(slo * slo <= BigRat(2));
    CHECK(shi * shi >= BigRat(2));
    CHECK(shi - slo <= pow10_rat(-29));
}
