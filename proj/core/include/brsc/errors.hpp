#pragma once

#include <stdexcept>
#include <string>

namespace brsc {

/// Malformed input text or JSON. CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated precondition of an operation (non-square matrix, complex not
/// boolean representable, dimension mismatch, ...). CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace brsc
