#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "rackmod/report.hpp"

namespace rackmod {

// Root of the library's exception hierarchy. The CLI maps the subclasses to
// exit codes: MalformedInput/ResourceError -> 2, ValidationError and
// PreconditionError -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that cannot be interpreted at all (ragged tables, out-of-range
// entries, bad JSON, unparseable PD code).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public MalformedInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : MalformedInput(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed data that violates the axioms of the structure it claims to be.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : Error(what + ": " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured cap (order, dimension, closure size, cube count) was exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t partial = 0)
      : Error(what), partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

// Two structures that must share an underlying object (e.g. the same group)
// do not.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

// A check that holds by theorem failed; this indicates a bug upstream.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rackmod
