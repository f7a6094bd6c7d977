#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

// Base class for all mathematically meaningful failures. CLI maps these to
// exit code 1 (falsification / hard contract violation), usage problems to 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct SubstitutionError : Error {
    using Error::Error;
};

// Thrown by solve on a singular system; carries the rank actually found.
struct SingularError : Error {
    int rank = 0;
    SingularError(const std::string& msg, int rank_found) : Error(msg), rank(rank_found) {}
};

struct DomainError : Error {
    using Error::Error;
};

// An exact polynomial identity from the construction failed to hold.
struct IdentityViolation : Error {
    using Error::Error;
};

struct EliminationError : Error {
    using Error::Error;
};

struct ExtractionError : Error {
    using Error::Error;
};

struct EnumerationError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

struct DecompositionError : Error {
    using Error::Error;
};

struct SamplingError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

// A rational-function limit that should extend finitely has a genuine pole.
struct ExtensionFailure : Error {
    using Error::Error;
};

}  // namespace hilb
