#ifndef APERY_FORMS_HPP
#define APERY_FORMS_HPP

#include "apery/bigrat.hpp"
#include "apery/poly.hpp"

namespace apery {

enum class FormKind { apery, ball };

/// Coefficients of u*zeta(3) - v.
struct LinearForm {
    long n = 0;
    BigRat u;
    BigRat v;
    FormKind kind = FormKind::apery;
};

/// Telescoping certificate: the multiplier (prefactor_num / prefactor_den)
/// applied to the kernel gives the summand whose forward difference equals
/// the three-term combination of kernels.
struct Certificate {
    long n = 0;
    Poly prefactor_num;
    Poly prefactor_den = Poly::constant(BigRat(1));
    FormKind kind = FormKind::apery;
};

enum class CertificateShape { apery_deg2, ball_deg6 };

/// Middle coefficient of the shared three-term recurrence:
/// (n+1)^3 x_{n+1} - lambda(n) x_n + n^3 x_{n-1} = 0.
inline BigInt recurrence_lambda(long n) {
    const BigInt m(n);
    return (2 * m + 1) * (17 * m * m + 17 * m + 5);
}

}  // namespace apery

#endif
