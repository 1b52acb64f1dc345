#ifndef DLMKIT_ERRORS_HPP
#define DLMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 text or other unparsable input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A distance-based operation was asked for on a disconnected graph.
class DisconnectedGraph : public Error {
public:
    using Error::Error;
};

/// The diameter <= 2 spectral transfer was asked for on a graph of larger diameter.
class DiameterTooLarge : public Error {
public:
    using Error::Error;
};

/// Bad parameters: out-of-range vertex ids, size cap exceeded, invalid family parameters, ...
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The numeric eigensolver exhausted its sweep budget. Signals a bug, not a data condition.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

} // namespace dlm

#endif
