#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyptrace {

/// Input that violates a structural precondition (loops, duplicate edges,
/// endpoints out of range, unparsable files).
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter outside the domain of an operation (m < 2, k < 1, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Graph does not belong to the class an operation requires
/// (e.g. a tree passed where a unicyclic graph is expected).
class ClassificationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A closed form was asked for outside its range of validity.
class FormulaOutOfRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Enumeration exceeded its candidate cap. Never returned as a partial sum.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t cap)
        : std::runtime_error("enumeration budget of " + std::to_string(cap) +
                             " candidates exceeded"),
          cap_(cap) {}

    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

/// No trace method applies to an instance within the configured budget.
class UnsupportedInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hyptrace
