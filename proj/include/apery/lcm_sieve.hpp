#ifndef APERY_LCM_SIEVE_HPP
#define APERY_LCM_SIEVE_HPP

#include "apery/bigrat.hpp"

namespace apery {

/// lcm(1, 2, ..., n); returns 1 for n <= 1.
BigInt lcm_upto(long n);

/// Incrementally maintained lcm(1..n): value grows by a factor p exactly
/// when n steps onto a prime power p^k.
class DenominatorLcm {
public:
    DenominatorLcm() : n_(0), value_(1) {}

    long n() const { return n_; }
    const BigInt& value() const { return value_; }

    /// Advance from n to n+1.
    void advance();
    /// Advance until n() == target (which must not be behind).
    const BigInt& advance_to(long target);

private:
    long n_;
    BigInt value_;
};

}  // namespace apery

#endif
