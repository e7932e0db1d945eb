#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oreext {

enum class ErrorKind {
    InvalidArgument,
    Parse,
    Io,
    AlgebraMismatch,
    NotDomain,       // s = 0: sigma is not injective, S has zero divisors
    Degenerate,      // input is a scalar (or otherwise outside the operation's domain)
    NotCommuting,
    BoundExhausted,
    BudgetExhausted,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& msg)
        : Error(ErrorKind::Parse, "parse error at offset " + std::to_string(offset) + ": " + msg),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace oreext
