#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lndcert {

/// Contract violation or invalid input. All throwing operations in the
/// library throw this (or a subclass).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax or semantic error while reading model text. Positions are 1-based.
class ParseError : public Error {
public:
    int line;
    int column;
    ParseError(int line, int column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
};

std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

}  // namespace lndcert
