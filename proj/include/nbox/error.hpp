#pragma once

#include <stdexcept>
#include <string>

namespace nbox {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two strings (or lists) that must share a width do not.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Two lists that must have the same number of entries do not.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the domain where the operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (strings, code files, covering files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// compound() on triples that are not concordant.
class NotConcordant : public Error {
public:
    using Error::Error;
};

/// A result that the construction guarantees failed its own check.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace nbox
