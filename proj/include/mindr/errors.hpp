#pragma once

#include <stdexcept>
#include <string>

namespace mindr {

/// Invalid argument or malformed input outside the text parsers.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number of the offending record.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Raised by the exact solver when an instance with more than one set has no useful edge.
class NotDecomposableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force search space exceeds the configured cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& message, unsigned long long product)
        : std::runtime_error(message), product_(product) {}

    unsigned long long product() const { return product_; }

private:
    unsigned long long product_;
};

/// Non-finite value produced by an iterative numerical method.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mindr
