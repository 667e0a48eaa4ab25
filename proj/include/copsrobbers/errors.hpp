#pragma once

#include <stdexcept>
#include <string>

namespace copsrobbers {

enum class ErrorKind {
  invalid_input,
  precondition,
  resource,
  numerical,
  adversary_fault,
  internal,
};

// Process exit code associated with each error class.
constexpr int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return 2;
    case ErrorKind::precondition: return 3;
    case ErrorKind::resource: return 4;
    case ErrorKind::numerical: return 5;
    case ErrorKind::adversary_fault: return 6;
    case ErrorKind::internal: return 1;
  }
  return 1;
}

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::resource: return "resource";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::adversary_fault: return "adversary-fault";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::invalid_input, what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

struct ResourceError : Error {
  ResourceError(const std::string& what, unsigned long long required)
      : Error(ErrorKind::resource, what), required_(required) {}
  // Budget that would have been needed; 0 when not applicable.
  unsigned long long required() const noexcept { return required_; }

 private:
  unsigned long long required_;
};

// No k <= k_max admits a cop win.
struct BoundExceeded : Error {
  explicit BoundExceeded(int k_max)
      : Error(ErrorKind::resource, "no cop count up to k_max=" + std::to_string(k_max) + " wins"),
        k_max_(k_max) {}
  int k_max() const noexcept { return k_max_; }

 private:
  int k_max_;
};

struct NumericalError : Error {
  NumericalError(const std::string& what, double residual)
      : Error(ErrorKind::numerical, what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

struct AdversaryFault : Error {
  explicit AdversaryFault(const std::string& what) : Error(ErrorKind::adversary_fault, what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace copsrobbers
