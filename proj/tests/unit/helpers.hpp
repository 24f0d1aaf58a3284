#pragma once

#include <algorithm>
#include <cmath>

#include "mellinlab/types.hpp"

namespace testing {

/// |a - b| relative to max(1, |b|)
inline double rel_err(mellinlab::cplx a, mellinlab::cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// |a - b| / |b| for b != 0
inline double pure_rel(mellinlab::cplx a, mellinlab::cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace testing
