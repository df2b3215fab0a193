#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperline {

// Input could not be parsed. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t line = 0)
      : std::runtime_error(std::move(msg)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A configured resource cap (e.g. product-matrix memory) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string msg, std::size_t estimate_bytes, std::size_t cap_bytes)
      : std::runtime_error(std::move(msg)),
        estimate_bytes_(estimate_bytes),
        cap_bytes_(cap_bytes) {}
  std::size_t estimate_bytes() const { return estimate_bytes_; }
  std::size_t cap_bytes() const { return cap_bytes_; }

 private:
  std::size_t estimate_bytes_;
  std::size_t cap_bytes_;
};

// Invalid command/pipeline configuration, detected before any work starts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative solver hit its iteration cap; carries the best residual seen.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string msg, double residual, std::size_t iterations)
      : std::runtime_error(std::move(msg)),
        residual_(residual),
        iterations_(iterations) {}
  double residual() const { return residual_; }
  std::size_t iterations() const { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

}  // namespace hyperline
