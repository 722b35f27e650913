#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turanc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (tree expressions, graph6, formulas).
/// `position()` is the 0-based character offset where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace turanc
