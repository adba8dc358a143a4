#pragma once

#include <stdexcept>
#include <string>

namespace qts {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Register or problem size outside the supported range.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Qubit or classical-bit index out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Sequence lengths that are supposed to agree do not.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed coupling map, knapsack instance, or candidate-edge text.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A two-qubit gate cannot be placed on the coupling map.
class RoutingError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qts
