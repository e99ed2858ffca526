#include "ncmi/catalan.hpp"

#include <stdexcept>
#include <string>

namespace ncmi {

namespace {
constexpr int kMaxExact = 33;  // largest n whose computation stays inside 64-bit
}

std::int64_t catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be non-negative");
    if (n > kMaxExact)
        throw std::overflow_error("catalan: C_" + std::to_string(n) +
                                  " exceeds the supported 64-bit range (n <= 33)");
    // C_{k+1} = C_k * 2(2k+1) / (k+2); the division is exact.
    unsigned __int128 c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * (2 * (2 * static_cast<unsigned __int128>(k) + 1));
        c /= static_cast<unsigned>(k + 2);
    }
    return static_cast<std::int64_t>(c);
}

}  // namespace ncmi
