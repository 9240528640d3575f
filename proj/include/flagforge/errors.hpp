#pragma once

#include <stdexcept>
#include <string>

namespace flagforge {

/// Input violates an operation's precondition (wrong kind of graph, void complex, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed graph or complex file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace flagforge
