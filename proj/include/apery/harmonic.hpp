#ifndef APERY_HARMONIC_HPP
#define APERY_HARMONIC_HPP

#include <array>
#include <vector>

#include "apery/bigrat.hpp"

namespace apery {

/// Cached generalized harmonic numbers H_j(k) = sum_{i=1}^{k} 1/i^j for
/// j = 1..4, with H_j(0) = 0. Grows on demand; one table per instance so
/// callers control the cache lifetime.
class HarmonicTable {
public:
    static constexpr int max_order = 4;

    HarmonicTable();

    /// H_j(k); requires 1 <= j <= 4 and k >= 0.
    const BigRat& h(int j, long k);

private:
    std::array<std::vector<BigRat>, max_order> table_;
};

}  // namespace apery

#endif
