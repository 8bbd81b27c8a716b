#pragma once

#include <stdexcept>
#include <string>

namespace rsa {

// Invalid input to a mathematical routine (outside its domain).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed configuration: bad JSON, unknown preset, inconsistent flags.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical routine could not deliver the requested accuracy.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tail class of a tabulated density is unknown.
class ClassificationUnavailable : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace rsa
