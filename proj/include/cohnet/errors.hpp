#pragma once

#include <stdexcept>
#include <string>

namespace cohnet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data cannot support the requested statistic (constant series,
/// zero variance, zero spectral power, length too short).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// A numeric argument is outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Not enough samples for the requested spectral configuration.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// The Welch configuration would average fewer than two segments, which
/// makes the coherence estimate identically one.
class DegenerateCoherenceError : public Error {
public:
    using Error::Error;
};

/// A spanning tree was requested on a disconnected graph.
class ConnectivityError : public Error {
public:
    using Error::Error;
};

/// Structured input (matrix, file, network description) failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Filesystem or stream failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace cohnet
