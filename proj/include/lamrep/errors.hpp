#pragma once

#include <stdexcept>
#include <string>

namespace lamrep {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

// Partitions compared or combined with different weights.
struct UnequalWeight : Error {
    using Error::Error;
};

// A row/column operation outside Aut(X) x Aut(Y): non-unit scaling or a
// transvection coefficient missing the required power of T.
struct IllegalOperation : Error {
    using Error::Error;
};

struct NotUnital : Error {
    using Error::Error;
};

struct SpanNotClosed : Error {
    using Error::Error;
};

// Radical computation via the trace form is only valid in characteristic 0.
struct CharPositive : Error {
    using Error::Error;
};

struct NotNilpotent : Error {
    using Error::Error;
};

struct PartExceedsBound : Error {
    using Error::Error;
};

struct NotCandidate : Error {
    using Error::Error;
};

struct NoRepeatedPart : Error {
    using Error::Error;
};

struct RelationViolation : Error {
    using Error::Error;
};

struct CertificateFailure : Error {
    using Error::Error;
};

}  // namespace lamrep
