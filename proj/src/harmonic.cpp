#include "apery/harmonic.hpp"

#include <stdexcept>

namespace apery {

HarmonicTable::HarmonicTable() {
    for (auto& column : table_) column.push_back(BigRat(0));
}

const BigRat& HarmonicTable::h(int j, long k) {
    if (j < 1 || j > max_order) throw std::invalid_argument("HarmonicTable: order out of range");
    if (k < 0) throw std::invalid_argument("HarmonicTable: negative index");
    auto& column = table_[static_cast<std::size_t>(j - 1)];
    while (column.size() <= static_cast<std::size_t>(k)) {
        const long i = static_cast<long>(column.size());
        const BigInt ij = pow(BigInt(i), static_cast<unsigned long>(j));
        column.push_back(column.back() + BigRat(BigInt(1), ij));
    }
    return column[static_cast<std::size_t>(k)];
}

}  // namespace apery
