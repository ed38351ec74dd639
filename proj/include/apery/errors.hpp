#ifndef APERY_ERRORS_HPP
#define APERY_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "apery/bigrat.hpp"

namespace apery {

/// Evaluation of a rational function at one of its poles.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const BigRat& where)
        : std::domain_error("evaluation at pole t = " + where.str()), pole_(where) {}
    const BigRat& pole() const { return pole_; }

private:
    BigRat pole_;
};

/// Partial-fraction decomposition fed an improper fraction or an
/// incomplete pole list.
class DecompositionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two supposedly independent computations of the same quantity disagreed.
/// Firing means an arithmetic bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Certificate ansatz admits no solution or a non-unique one.
class AnsatzError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative numeric routine failed to reach the requested precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace apery

#endif
