#pragma once

#include <stdexcept>
#include <string>

namespace pfaffian {

// Violated input contract of a library call (wrong shape, missing perfect
// matching, disconnected input where connectivity is required, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact computation was refused because the instance exceeds a configured limit.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace pfaffian
