#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pursuit {

// Base for every error raised by the library. Callers that only want to
// report and exit can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point that does not belong to the space it was handed to.
class MalformedPoint : public Error {
 public:
  using Error::Error;
};

class MalformedPath : public Error {
 public:
  using Error::Error;
};

// Something would not fit: net point budget, DP layer budget, suite limits.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t required, std::size_t available)
      : Error(what + " (required " + std::to_string(required) + ", available " +
              std::to_string(available) + ")"),
        required_(required),
        available_(available) {}
  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class EmptyAgility : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

// A strategy asked for a move longer than the step allows.
class StrategyFault : public Error {
 public:
  using Error::Error;
};

class PlayoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace pursuit
