#pragma once

#include <stdexcept>
#include <string>

namespace odr {

// Error categories map one-to-one onto the CLI exit codes.
enum class ErrorKind {
  Config = 2,   // invalid parameters or configuration
  Data = 3,     // malformed or inconsistent input data
  Numeric = 4,  // numeric domain, solver or infeasibility failures
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& w) : Error(ErrorKind::Config, w) {}
};

struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::Data, w) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};

struct InfeasibleError : Error {
  explicit InfeasibleError(const std::string& w) : Error(ErrorKind::Numeric, w) {}
};

}  // namespace odr
