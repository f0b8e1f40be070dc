#ifndef THINSET_ERRORS_HPP
#define THINSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thinset {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or contradictory input data (bad graph, bad table, bad witness).
class InputError : public Error {
public:
    using Error::Error;
};

/// An instance exceeds a documented size guard.
class SizeGuardError : public InputError {
public:
    using InputError::InputError;
};

/// A search ran out of its node or wall-clock budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// The finite data at hand cannot support the requested conclusion.
/// The message names the blocking case.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

} // namespace thinset

#endif
