#pragma once

#include <stdexcept>
#include <string>

namespace tropcat {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed JSON or payload that does not match the expected schema.
class parse_error : public error {
public:
  explicit parse_error(const std::string& what) : error(what) {}
};

/// Structural mismatch between operands (periods, ranks, ambient data).
class mismatch_error : public error {
public:
  explicit mismatch_error(const std::string& what) : error(what) {}
};

/// Operation not defined for this input (e.g. transpose of degree >= 2).
class unsupported_error : public error {
public:
  explicit unsupported_error(const std::string& what) : error(what) {}
};

/// Exhaustive enumeration would exceed the configured bound.
class bound_error : public error {
public:
  explicit bound_error(const std::string& what) : error(what) {}
};

namespace detail {

// Throws tropcat::error naming the violated invariant.
inline void require(bool cond, const char* invariant) {
  if (!cond) throw error(invariant);
}

inline void require_match(bool cond, const char* what) {
  if (!cond) throw mismatch_error(what);
}

}  // namespace detail

}  // namespace tropcat
