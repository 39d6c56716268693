#pragma once

#include <stdexcept>
#include <string>

namespace dengfan {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed molecule database or fixture file. `field()` names the offending key.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Requested (n, l) is not a normalizable bound state.
class UnboundStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root or eigenvalue search interval does not contain a sign change / state.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver or quadrature did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// NU coefficient set outside the c3 != 0 branch.
class UnsupportedBranchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dengfan
