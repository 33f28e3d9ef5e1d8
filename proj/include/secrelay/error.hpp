#pragma once

#include <stdexcept>
#include <string>

namespace secrelay {

// Base of every exception thrown by the library. The CLI maps the concrete
// type to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid configuration value (quadrature order, geometry, sample counts).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Result not representable in double precision.
class RangeError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Config file syntax or value error, carrying the offending line.
class ParseError : public ConfigError {
public:
    ParseError(const std::string& msg, int line)
        : ConfigError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Numerical integration did not reach the requested tolerance.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& msg, double best_estimate, double error_estimate)
        : Error(msg), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

} // namespace secrelay
