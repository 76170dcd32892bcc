// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace socsim {

// Base for every error raised by the library. The CLI maps these to exit
// code 2 (data error); anything else is a usage error or a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTopology : public Error {
 public:
  using Error::Error;
};

class UnknownSoC : public Error {
 public:
  explicit UnknownSoC(int id) : Error("unknown SoC id " + std::to_string(id)), id_(id) {}
  int id() const noexcept { return id_; }

 private:
  int id_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateKey : public Error {
 public:
  using Error::Error;
};

class NegativeValue : public Error {
 public:
  using Error::Error;
};

class MissingCalibration : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class UnitMismatch : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class InvalidScenario : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace socsim
