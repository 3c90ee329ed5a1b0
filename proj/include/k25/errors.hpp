#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k25 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// graph6 decoding failure; carries the byte offset of the offending input byte.
struct DecodeError : Error {
    std::size_t offset;
    DecodeError(const std::string& msg, std::size_t at)
        : Error(msg + " (byte offset " + std::to_string(at) + ")"), offset(at) {}
};

/// A documented operation precondition does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// Input exceeds a documented size limit of a search-based operation.
struct CapabilityError : Error {
    using Error::Error;
};

/// A checker was invoked on a graph that fails its hypotheses.
struct HypothesisError : Error {
    using Error::Error;
};

/// The requested construction is excluded for this input (e.g. K_4 in the
/// line-graph witness builder).
struct NotApplicableError : Error {
    using Error::Error;
};

/// A structural fact the construction relies on failed to materialize; the
/// message carries the offending graph.
struct ClaimViolationError : Error {
    using Error::Error;
};

} // namespace k25
