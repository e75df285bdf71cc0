#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hycap {

enum class ErrorKind {
  domain,
  regime,
  range,
  degenerate,
  divergence,
  accuracy,
  evaluation,
  bracket,
  validation,
  inconsistent_input,
  data_inconsistency,
  wrong_condenser,
};

std::string_view to_string(ErrorKind kind);

/// Base of every failure raised by the library. The kind drives the CLI
/// exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Quadrature ran out of budget before meeting its tolerance. Carries the
/// best estimate reached so far.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& message, double best_value,
                double best_error)
      : Error(ErrorKind::accuracy, message),
        best_value_(best_value),
        best_error_(best_error) {}

  [[nodiscard]] double best_value() const noexcept { return best_value_; }
  [[nodiscard]] double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace hycap
