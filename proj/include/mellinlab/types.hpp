#pragma once

#include <cmath>
#include <complex>
#include <compare>
#include <string>

#include "mellinlab/errors.hpp"

namespace mellinlab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr cplx I{0.0, 1.0};

/// Element of Z/2Z: the sign character x -> (sg x)^value.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(int v) : v_(static_cast<unsigned>(((v % 2) + 2) % 2)) {}

  constexpr unsigned value() const noexcept { return v_; }
  constexpr bool odd() const noexcept { return v_ == 1; }
  /// (-1)^value
  constexpr double sign() const noexcept { return v_ == 0 ? 1.0 : -1.0; }

  friend constexpr Parity operator+(Parity a, Parity b) noexcept { return Parity(static_cast<int>(a.v_ + b.v_)); }
  friend constexpr Parity operator+(Parity a, int b) noexcept { return Parity(static_cast<int>(a.v_) + b); }
  friend constexpr bool operator==(Parity, Parity) = default;

 private:
  unsigned v_ = 0;
};

inline constexpr Parity even{0};
inline constexpr Parity odd{1};

/// (sg x)^p for x != 0
constexpr double sign_power(double x, Parity p) noexcept { return (p.odd() && x < 0) ? -1.0 : 1.0; }

/// Throws OverflowError unless both components are finite.
inline cplx checked(cplx z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw OverflowError(std::string(where) + ": non-finite result");
  return z;
}

/// A term (sg x)^eta |x|^alpha (log|x|)^log_index near x = 0.
struct SingularityType {
  cplx alpha;
  Parity eta;
  int log_index = 0;
};

/// Upper bound on log_index accepted by the expansion machinery.
inline constexpr int max_log_index = 3;

}  // namespace mellinlab
