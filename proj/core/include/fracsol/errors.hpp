#ifndef FRACSOL_ERRORS_HPP
#define FRACSOL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracsol {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed expression text. Carries the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Identifier other than `x` or `exp` in expression text.
class UnknownSymbol : public Error {
public:
    UnknownSymbol(const std::string& name, std::size_t offset)
        : Error("unknown symbol '" + name + "' (byte " + std::to_string(offset) + ")"),
          name_(name), offset_(offset) {}
    const std::string& name() const { return name_; }
    std::size_t offset() const { return offset_; }

private:
    std::string name_;
    std::size_t offset_;
};

/// Evaluation hit a pole, an invalid power, or an argument outside an
/// operation's domain. The message names the offending subexpression.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two series with different fractional orders were combined.
class AlphaMismatch : public Error {
public:
    using Error::Error;
};

/// Nonlinear operator is not polynomial in {u, ux, uxx}.
class UnsupportedNonlinearity : public Error {
public:
    using Error::Error;
};

/// A grid or collocation value exceeded the divergence bound.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Explicit-part step restriction violated for a time-stepping scheme.
class StabilityError : public Error {
public:
    using Error::Error;
};

/// Collocation system could not be solved reliably. The message suggests a
/// shape-parameter change; the triggering condition estimate is attached.
class IllConditionedError : public Error {
public:
    IllConditionedError(const std::string& what, double cond_estimate)
        : Error(what), cond_estimate_(cond_estimate) {}
    double cond_estimate() const { return cond_estimate_; }

private:
    double cond_estimate_ = 0.0;
};

/// Problem or series document could not be parsed. Carries a location string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, const std::string& location)
        : Error(what + " [" + location + "]"), location_(location) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// A parsed document violates a field constraint; names the field.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, const std::string& field)
        : Error(what + " [field: " + field + "]"), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace fracsol

#endif
