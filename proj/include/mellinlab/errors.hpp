#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mellinlab {

enum class ErrorCategory {
  pole,
  domain,
  overflow,
  convergence,
  contour,
  depth,
  parity,
  primitivity,
  order,
  oscillation,
  config,
};

std::string_view to_string(ErrorCategory c) noexcept;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define MELLINLAB_DEFINE_ERROR(Name, cat)                                   \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(ErrorCategory::cat, what) {} \
  };

MELLINLAB_DEFINE_ERROR(PoleError, pole)
MELLINLAB_DEFINE_ERROR(DomainError, domain)
MELLINLAB_DEFINE_ERROR(OverflowError, overflow)
MELLINLAB_DEFINE_ERROR(ConvergenceError, convergence)
MELLINLAB_DEFINE_ERROR(ContourError, contour)
MELLINLAB_DEFINE_ERROR(DepthError, depth)
MELLINLAB_DEFINE_ERROR(ParityError, parity)
MELLINLAB_DEFINE_ERROR(PrimitivityError, primitivity)
MELLINLAB_DEFINE_ERROR(OrderOverflowError, order)
MELLINLAB_DEFINE_ERROR(OscillationError, oscillation)
MELLINLAB_DEFINE_ERROR(ConfigError, config)

#undef MELLINLAB_DEFINE_ERROR

}  // namespace mellinlab
