#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z4nu {

// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A candidate nu^2 value for which Z4 + nu Z4 is a chain ring.
class ChainRingError : public Error {
public:
    using Error::Error;
};

// Operands built over different lengths or different theta.
class MismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// A staged generator set that does not satisfy the divisibility/degree
// conditions of the staged form. `condition()` is one of "3.1".."3.4".
class ConditionViolation : public Error {
public:
    ConditionViolation(std::string condition, const std::string& what)
        : Error(what), condition_(std::move(condition)) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

// A shift count of the spanning-set construction came out negative.
class ShiftCountError : public Error {
public:
    using Error::Error;
};

// Enumeration refused because the predicted code size exceeds the limit.
class LimitExceeded : public Error {
public:
    LimitExceeded(int predicted_log2, const std::string& what)
        : Error(what), predicted_log2_(predicted_log2) {}
    int predicted_log2() const { return predicted_log2_; }

private:
    int predicted_log2_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected, const std::string& what)
        : Error(what), position_(position), expected_(std::move(expected)) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// A spec file that is well-formed but describes no valid code.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Something that must hold by construction did not.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace z4nu
