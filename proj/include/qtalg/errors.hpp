#pragma once

#include <stdexcept>
#include <string>

namespace qtalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct CalibrationError : Error {
    using Error::Error;
};

struct NonLaurentCoefficient : Error {
    using Error::Error;
};

struct QSingular : Error {
    using Error::Error;
};

struct RetryExhausted : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t off, std::string expected, std::string msg)
        : Error(msg + " at byte " + std::to_string(off) + " (expected " + expected + ")"),
          offset(off),
          expected_set(std::move(expected)) {}
    std::size_t offset;
    std::string expected_set;
};

}  // namespace qtalg
