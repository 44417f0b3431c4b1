#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fdglab {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or dimension violation. `axis` is the offending axis when known.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg, int axis = -1)
      : Error(msg), axis_(axis) {}
  int axis() const noexcept { return axis_; }

 private:
  int axis_;
};

// Bad numeric argument or violated precondition.
class ValueError : public Error {
 public:
  using Error::Error;
};

// Parameter registry / checkpoint schema mismatch. `name` is the first
// divergent entry.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg, std::string name = {})
      : Error(msg), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Invalid experiment or training configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdglab
