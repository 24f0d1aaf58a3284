#include "mellinlab/errors.hpp"

namespace mellinlab {

std::string_view to_string(ErrorCategory c) noexcept {
  switch (c) {
    case ErrorCategory::pole: return "pole";
    case ErrorCategory::domain: return "domain";
    case ErrorCategory::overflow: return "overflow";
    case ErrorCategory::convergence: return "convergence";
    case ErrorCategory::contour: return "contour";
    case ErrorCategory::depth: return "depth";
    case ErrorCategory::parity: return "parity";
    case ErrorCategory::primitivity: return "primitivity";
    case ErrorCategory::order: return "order";
    case ErrorCategory::oscillation: return "oscillation";
    case ErrorCategory::config: return "config";
  }
  return "unknown";
}

}  // namespace mellinlab
