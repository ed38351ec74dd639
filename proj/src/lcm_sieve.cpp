#include "apery/lcm_sieve.hpp"

#include <stdexcept>
#include <vector>

namespace apery {

namespace {

// Smallest prime factor, or 0 when m < 2.
long smallest_prime_factor(long m) {
    if (m < 2) return 0;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) return p;
    return m;
}

// Returns p when m = p^k for a prime p, otherwise 0.
long prime_power_base(long m) {
    const long p = smallest_prime_factor(m);
    if (p == 0) return 0;
    long r = m;
    while (r % p == 0) r /= p;
    return r == 1 ? p : 0;
}

}  // namespace

BigInt lcm_upto(long n) {
    if (n < 0) throw std::invalid_argument("lcm_upto: negative argument");
    BigInt result = 1;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (long q = p * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
        // Largest power of p not exceeding n.
        BigInt pk = p;
        while (pk * p <= n) pk *= p;
        result *= pk;
    }
    return result;
}

void DenominatorLcm::advance() {
    ++n_;
    const long p = prime_power_base(n_);
    if (p != 0) value_ *= p;
}

const BigInt& DenominatorLcm::advance_to(long target) {
    if (target < n_) throw std::invalid_argument("DenominatorLcm: cannot rewind");
    while (n_ < target) advance();
    return value_;
}

}  // namespace apery
