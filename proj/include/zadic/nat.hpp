#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zadic {

/// Arbitrary-precision natural number. Start values may be arbitrarily
/// large; transformed values collapse to a machine word almost
/// immediately, and cpp_int keeps those allocation-free.
using Nat = boost::multiprecision::cpp_int;

struct NatHash {
    std::size_t operator()(const Nat& n) const { return boost::hash<Nat>{}(n); }
};

/// Parse a plain nonnegative decimal integer of any length.
/// Throws InvalidInput on empty input, signs, or non-digit characters.
Nat parse_nat(std::string_view text);

Nat nat_from_u128(unsigned __int128 v);

/// True when n fits in a std::uint64_t.
bool fits_u64(const Nat& n);

}  // namespace zadic
