#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace csi {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Specification text does not conform to the grammar.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t column, std::string found,
              std::vector<std::string> expected)
      : Error(format(line, column, found, expected)),
        line_(line),
        column_(column),
        found_(std::move(found)),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& found,
                            const std::vector<std::string>& expected) {
    std::string msg = "syntax error at " + std::to_string(line) + ":" +
                      std::to_string(column) + ": found " + found;
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
        msg += expected[i];
      }
    }
    return msg;
  }

  std::size_t line_;
  std::size_t column_;
  std::string found_;
  std::vector<std::string> expected_;
};

/// Operator-like token that is not part of the grammar (e.g. `=`, `**`).
class UnknownOperator : public Error {
public:
  UnknownOperator(std::size_t line, std::size_t column, const std::string& op)
      : Error("unknown operator '" + op + "' at " + std::to_string(line) +
              ":" + std::to_string(column)) {}
};

class UnknownVariable : public Error {
public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class IndexOutOfRange : public Error {
public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error("sample index " + std::to_string(index) +
              " out of range (trace has " + std::to_string(size) +
              " samples)") {}
};

class OverlappingSets : public Error {
public:
  explicit OverlappingSets(const std::string& name)
      : Error("variable '" + name + "' appears in both X and Y") {}
};

/// Term evaluation failure (currently: division by a near-zero value).
class EvalError : public Error {
public:
  explicit EvalError(const std::string& msg) : Error(msg) {}
};

/// (mu, nu) combination outside the IA-STL table: indicates a monitor bug.
class InconsistentPair : public Error {
public:
  InconsistentPair(double mu, double nu)
      : Error("inconsistent (mu, nu) pair: (" + std::to_string(mu) + ", " +
              std::to_string(nu) + ")") {}
};

class UnsupportedDimension : public Error {
public:
  explicit UnsupportedDimension(std::size_t dims)
      : Error("parameter space has " + std::to_string(dims) +
              " dimensions; at most 25 are supported") {}
};

class DegenerateSamples : public Error {
public:
  DegenerateSamples() : Error("all sample points coincide; cannot fit surrogate") {}
};

class InvalidParams : public Error {
public:
  explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

class NegativeVelocity : public Error {
public:
  explicit NegativeVelocity(double v)
      : Error("velocity must be nonnegative, got " + std::to_string(v)) {}
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace csi
