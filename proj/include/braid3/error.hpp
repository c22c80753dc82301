#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braid3 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(what + " at position " + std::to_string(position)), position_(position), message_(what) {}

    std::size_t position() const noexcept { return position_; }
    /// The description without the position suffix.
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

/// Division by zero, singular matrices, poles, excluded family parameters.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Dimension or field-tag mismatch between operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A decomposition request that has no answer for this input.
class DecompositionError : public Error {
public:
    using Error::Error;
};

/// Question outside what the implemented decision procedures can settle.
class UndecidedError : public Error {
public:
    using Error::Error;
};

} // namespace braid3
