#pragma once

#include <stdexcept>
#include <string>

namespace cohomjump {

// Base class for all domain errors raised by the library. The CLI maps these
// to exit code 1; anything else escaping is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands carry different parameter sets or truncation orders.
struct ParamMismatchError : Error {
    using Error::Error;
};

// A degree or order argument lies outside the valid range.
struct DegreeRangeError : Error {
    using Error::Error;
};

// Malformed user input (bad expression, bad direction vector, zero class
// where a nonzero one is required, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

// Model file violates a structural requirement (antisymmetry contradiction,
// Jacobi failure, bad indices).
struct ModelError : Error {
    using Error::Error;
};

// A class reduction was asked for a form that is not closed; the message
// carries the rendered differential of the offending input.
struct NotACocycleError : Error {
    using Error::Error;
};

// Deformation data is structurally invalid: wrong form degree or a nonzero
// constant part.
struct InvalidDeformationError : Error {
    using Error::Error;
};

// Deformation fails the Maurer-Cartan equation at some order, or the exported
// family operator does not square to zero.
struct InconsistentDeformationError : Error {
    using Error::Error;
};

// An extension state is used against a deformation that changed since the
// state was created.
struct StaleExtensionError : Error {
    using Error::Error;
};

// Text that failed to parse; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

// Tripwire for conditions the mathematics guarantees. Never expected.
struct InternalConsistencyError : Error {
    using Error::Error;
};

} // namespace cohomjump
