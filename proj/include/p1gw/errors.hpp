#pragma once

#include <stdexcept>
#include <string>

namespace p1gw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient was requested below the validity depth of a truncated series.
/// Callers recover by rebuilding at a larger truncation.
class DepthExceeded : public Error {
 public:
  DepthExceeded(int exponent, int depth)
      : Error("coefficient of lambda^" + std::to_string(exponent) +
              " requested, but series is only exact down to lambda^" +
              std::to_string(-depth)),
        exponent_(exponent),
        depth_(depth) {}
  int exponent() const { return exponent_; }
  int depth() const { return depth_; }

 private:
  int exponent_;
  int depth_;
};

class CancellationFailure : public Error {
 public:
  using Error::Error;
};

class UnstableExtraction : public Error {
 public:
  using Error::Error;
};

class MalformedValue : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class CacheCorrupt : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace p1gw
