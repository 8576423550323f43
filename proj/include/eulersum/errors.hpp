#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulersum {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyNodeSet : public Error {
public:
    EmptyNodeSet() : Error("node set is empty") {}
};

/// Two nodes compared equal; the offending value is kept in canonical "p/q" form.
class DuplicateNode : public Error {
public:
    explicit DuplicateNode(std::string value)
        : Error("duplicate node: " + value), value_(std::move(value)) {}

    const std::string& value() const noexcept { return value_; }

private:
    std::string value_;
};

class NegativeExponent : public Error {
public:
    explicit NegativeExponent(long long n)
        : Error("exponent must be nonnegative, got " + std::to_string(n)) {}
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what) : Error(what + ": empty input") {}
};

class NodeSetTooSmall : public Error {
public:
    NodeSetTooSmall(std::size_t have, std::size_t need)
        : Error("node set has " + std::to_string(have) + " nodes, need at least " +
                std::to_string(need)) {}
};

/// Malformed token in node text. `position` is the byte offset of the token.
class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string token, const std::string& why = "malformed number")
        : Error("parse error at position " + std::to_string(position) + ": " + why + " '" + token + "'"),
          position_(position), token_(std::move(token)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

} // namespace eulersum
