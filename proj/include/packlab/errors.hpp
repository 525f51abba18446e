#pragma once

#include <stdexcept>
#include <string>

namespace packlab {

/// A parameter lies outside the range for which an operation is defined.
class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 or edge-list input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algorithm's stated input hypotheses do not hold for the given graph.
class HypothesisViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size cap (vertex count, enumeration order, path-search order) was exceeded.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An exponential search stopped before reaching a decision, either because the
/// node cap was hit or because cancellation was requested. Never means "no".
class SearchAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace packlab
