#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tessella {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data (bad construction arguments, bad flags).
struct InputError : Error {
    using Error::Error;
};

/// Text could not be parsed; carries the 1-based source line.
struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// An operation was asked about an incomplete vertex/face.
struct CompletenessError : Error {
    using Error::Error;
};

/// The patch window is too small for the requested completeness margin.
struct MarginError : Error {
    using Error::Error;
};

/// A face set whose union is not a combinatorial disc.
struct PolygonError : Error {
    using Error::Error;
};

/// The cyclic enumeration of a distance sphere is inconsistent.
struct EnumerationError : Error {
    using Error::Error;
};

struct GeneratorError : Error {
    using Error::Error;
};

struct CertificationError : Error {
    using Error::Error;
};

/// A state the theory rules out was observed (harness treats as failure).
struct InconsistencyError : Error {
    using Error::Error;
};

} // namespace tessella
