#ifndef QTSTEER_ERRORS_HPP
#define QTSTEER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtsteer {

// Operand dimensions or tensor shapes do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical precondition (Hermiticity, unit trace, ...) was violated.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotPsdError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A physical model parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Invalid sweep configuration (bad flag value, unknown key, empty grid).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qtsteer

#endif
