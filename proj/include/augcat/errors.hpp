#pragma once

#include <stdexcept>
#include <string>

namespace augcat {

// Input text could not be parsed. Line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0, int col = 0)
        : std::runtime_error(format(msg, line, col)), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(const std::string& msg, int line, int col)
    {
        if (line <= 0)
            return msg;
        std::string s = "line " + std::to_string(line);
        if (col > 0)
            s += ", col " + std::to_string(col);
        return s + ": " + msg;
    }

    int line_;
    int col_;
};

// Finite-field misuse: mixed fields, inverse of zero, malformed modulus.
class FieldError : public std::runtime_error {
public:
    explicit FieldError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical precondition fails for the given inputs.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A resource guard tripped (not a mathematical verdict).
class FeasibilityError : public std::runtime_error {
public:
    explicit FeasibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace augcat
