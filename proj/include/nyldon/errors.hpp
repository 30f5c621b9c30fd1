#pragma once

#include <stdexcept>
#include <string>

namespace nyldon {

// Base class for every domain error raised by the library. The CLI maps
// these to exit status 1; anything else is a bug or a usage error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotPrimitiveError : public Error {
public:
    explicit NotPrimitiveError(std::string root_text)
        : Error("word is periodic (period " + root_text + ")"), root_(std::move(root_text)) {}

    // Text of the primitive root, e.g. "10" for 1010.
    const std::string& root() const noexcept { return root_; }

private:
    std::string root_;
};

class PolicyViolationError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

}  // namespace nyldon
