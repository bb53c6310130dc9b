#ifndef ALPHAENERGY_ERROR_HPP
#define ALPHAENERGY_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphaenergy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// densela
class NonSymmetric : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

// graphcore
class InvalidGraph : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class GenerationFailure : public Error {
public:
    using Error::Error;
};

class NoSuchEdge : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

/// Parse errors remember where in the input they happened.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// `position()` is a zero-based byte offset into the record.
class MalformedGraph6 : public ParseError {
public:
    using ParseError::ParseError;
};

/// `position()` is a one-based line number.
class MalformedEdgeList : public ParseError {
public:
    using ParseError::ParseError;
};

// spectra
class AlphaOutOfRange : public Error {
public:
    using Error::Error;
};

} // namespace alphaenergy

#endif // ALPHAENERGY_ERROR_HPP
