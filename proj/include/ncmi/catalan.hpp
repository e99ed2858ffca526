#pragma once

#include <cstdint>

namespace ncmi {

/// n-th Catalan number in exact 64-bit arithmetic.
/// Exact through n = 33; larger n throws std::overflow_error.
std::int64_t catalan(int n);

}  // namespace ncmi
