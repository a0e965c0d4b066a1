#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (files, command-line values).
class InputError : public Error {
public:
    explicit InputError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Rankings or sets that do not range over the expected universe.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured enumeration bound would be exceeded.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A decision problem was handed an instance violating its promise
/// (e.g. a restriction variant with a non-minimal cover).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace conlab
