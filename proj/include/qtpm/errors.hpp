#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtpm {

// Input outside an operation's mathematical domain (e.g. t >= t').
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed textual input. Column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qtpm
