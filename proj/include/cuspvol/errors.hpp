#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cuspvol {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

// A recursion or geometric construction left its valid parameter range.
class InvalidRegime : public Error {
public:
    using Error::Error;
};

}  // namespace cuspvol
