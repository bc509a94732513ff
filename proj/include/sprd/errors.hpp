#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sprd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied an argument outside the operation's domain.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A problem field produced a non-finite value or failed to evaluate.
class DataEvaluationError : public Error {
public:
    using Error::Error;
};

/// Linear algebra breakdown (zero pivot, non-finite solution).
class NumericError : public Error {
public:
    using Error::Error;
};

/// Expression source text does not match the grammar.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Identifier other than x, t or a known function.
class UnknownIdentifierError : public Error {
public:
    UnknownIdentifierError(std::size_t offset, const std::string& name)
        : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
          offset_(offset), name_(name) {}

    std::size_t offset() const { return offset_; }
    const std::string& name() const { return name_; }

private:
    std::size_t offset_;
    std::string name_;
};

/// Domain error during expression evaluation (ln of non-positive, x/0, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

/// Run configuration is malformed or violates an invariant.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace sprd
