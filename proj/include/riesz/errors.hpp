#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two operands live in spaces of different dimension.
class dimension_error : public error {
public:
    using error::error;
};

/// A value violates an operation's precondition (mask not in the algebra,
/// charge not of the required sign, theta out of range, ...).
class precondition_error : public error {
public:
    using error::error;
};

/// An exhaustive enumeration would exceed the configured bound.
class bound_error : public error {
public:
    using error::error;
};

/// Instance file is malformed; `path` is a JSON-pointer-style location.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::string where)
        : error(msg + " (at " + where + ")"), path(std::move(where)) {}
    std::string path;
};

/// A generic matrix functional failed validation.
class functional_error : public error {
public:
    enum class kind_t { range, homogeneity };
    functional_error(kind_t k, const std::string& msg, std::string witness_)
        : error(msg), kind(k), witness(std::move(witness_)) {}
    kind_t kind;
    std::string witness;
};

} // namespace riesz
