#pragma once

#include <stdexcept>
#include <string>

namespace subduction {

// A partition, tableau or pattern violates its shape invariants.
class InvalidShape : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A query is well-formed but outside the domain of the formula used.
class InvalidQuery : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configurable size cap was hit before the computation could finish.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace subduction
