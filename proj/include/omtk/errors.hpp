#pragma once

#include <stdexcept>
#include <string>

namespace omtk {

/// Operands have incompatible ground-set sizes.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An element index lies outside the ground set.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A restriction or configuration does not have rank 3.
class RankError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text, JSON or sign data.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller-side precondition was violated (e.g. incomparable oriented matroids).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * A structural invariant that should hold mathematically failed to hold.
 *
 * Raised by the bug traps: a non-graded covector closure, a non-unique
 * maximum in maxcov, an antisymmetry violation while building a poset.
 */
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A computation would exceed its configured resource budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace omtk
