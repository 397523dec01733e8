#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfree {

/// Input violates an operation's mathematical precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact search was asked to handle more points than its cap allows.
class CapError : public std::runtime_error {
public:
    CapError(const std::string& what, std::size_t points, std::size_t cap, long largest_feasible = -1)
        : std::runtime_error(what), points_(points), cap_(cap), largest_feasible_(largest_feasible) {}

    std::size_t points() const { return points_; }
    std::size_t cap() const { return cap_; }
    /// Largest feasible truncation depth, or -1 when not applicable.
    long largest_feasible() const { return largest_feasible_; }

private:
    std::size_t points_;
    std::size_t cap_;
    long largest_feasible_;
};

/// An iterative computation ran out of its enumeration budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certified comparison could not be decided at the maximum precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The smooth sequence does not reach far enough for the query.
class InsufficientEnumeration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The monochromatization sweep met a configuration its cases cannot handle.
class SweepError : public std::runtime_error {
public:
    SweepError(const std::string& what, long diagonal) : std::runtime_error(what), diagonal_(diagonal) {}
    long diagonal() const { return diagonal_; }

private:
    long diagonal_;
};

}  // namespace qfree
