#pragma once

#include <stdexcept>
#include <string>

namespace sdlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands whose dimensions do not agree, or other violated preconditions.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A computation produced a NaN or infinity.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Normalizing a (numerically) zero vector.
class DegenerateDirection : public Error {
public:
    using Error::Error;
};

/// Normalizing a series whose initial value is zero.
class AlreadySolved : public Error {
public:
    using Error::Error;
};

/// Invalid experiment or figure configuration, or a malformed input file.
class ConfigError : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace sdlab
