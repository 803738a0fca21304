#include "ecy/error.hpp"

namespace ecy {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::NoSmallResolution: return "NSR";
    case Violation::NonMinimal: return "NM";
    case Violation::NonIntegral: return "non-integral";
    case Violation::Negative: return "negative";
  }
  return "?";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return 2;
    case ErrorKind::Validity: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

}  // namespace ecy
