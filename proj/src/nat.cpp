#include "zadic/nat.hpp"

#include "zadic/errors.hpp"

#include <cctype>
#include <limits>

namespace zadic {

Nat parse_nat(std::string_view text) {
    if (text.empty()) {
        throw InvalidInput("expected a decimal integer, got empty input");
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InvalidInput("malformed decimal integer: '" + std::string(text) + "'");
        }
    }
    return Nat(std::string(text));
}

Nat nat_from_u128(unsigned __int128 v) {
    Nat hi = static_cast<std::uint64_t>(v >> 64);
    hi <<= 64;
    hi += static_cast<std::uint64_t>(v);
    return hi;
}

bool fits_u64(const Nat& n) {
    return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

}  // namespace zadic
