#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emt {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing non-negative and signed extended reals in one operation.
class flavor_error : public error {
public:
    explicit flavor_error(const std::string& what) : error(what) {}
};

// Non-square matrices, size mismatches between functions and spaces.
class shape_error : public error {
public:
    explicit shape_error(const std::string& what) : error(what) {}
};

// Violated preconditions on values (negative scale factor, empty subset, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Enumeration would exceed a configured size cap.
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

// Malformed input text; carries a 1-based position.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace emt
