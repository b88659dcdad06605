#pragma once

#include <stdexcept>
#include <string>

namespace darkgallery {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class InvalidInput : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-input"; }
};

class UnboundedRegion : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "unbounded"; }
};

class UnsupportedMode : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported-mode"; }
};

}  // namespace darkgallery
