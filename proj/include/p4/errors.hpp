#pragma once

#include <stdexcept>
#include <string>

namespace p4 {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gauge flags of two factors disagree, or an operator shape is not supported
// on gauged functions.
class GaugeMismatchError : public Error {
public:
    using Error::Error;
};

// A lattice cell was requested outside the region where the family is defined.
class OutOfRegionError : public Error {
public:
    using Error::Error;
};

// A transformation evaluated on a concrete solution hit an identically
// vanishing denominator.
class SingularTransformError : public Error {
public:
    using Error::Error;
};

// Malformed textual input (words, partitions, rationals).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace p4
