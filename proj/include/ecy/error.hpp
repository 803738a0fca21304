#pragma once

#include <stdexcept>
#include <string>

namespace ecy {

enum class ErrorKind { Config, Validity, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

enum class Violation { NoSmallResolution, NonMinimal, NonIntegral, Negative };

const char* violation_name(Violation v);

class ValidityError : public Error {
 public:
  ValidityError(Violation v, const std::string& what) : Error(ErrorKind::Validity, what), violation_(v) {}
  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

// a stored table disagrees with itself or the pipelines disagree
class TableError : public Error {
 public:
  explicit TableError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

int exit_code(ErrorKind kind);

}  // namespace ecy
