#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rado {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text did not match a grammar; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A mathematical precondition of an operation does not hold for its input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace rado
