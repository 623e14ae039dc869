#pragma once

#include <stdexcept>
#include <string>

namespace centra {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing scalars of different fields, inverting zero, unsupported root order.
class field_error : public error {
public:
    explicit field_error(const std::string& what) : error(what) {}
};

/// Shape mismatches in matrix/vector arithmetic.
class dimension_error : public error {
public:
    explicit dimension_error(const std::string& what) : error(what) {}
};

/// Structural validation failures (group axioms, cocycle condition, ...).
/// The message carries the witness.
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
};

/// A configured size bound was exceeded.
class bound_error : public error {
public:
    explicit bound_error(const std::string& what) : error(what) {}
};

} // namespace centra
