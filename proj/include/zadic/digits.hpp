#pragma once

#include "zadic/nat.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zadic {

/// Base-k digit vector, least-significant first. Canonical form carries
/// no leading zero, except that zero itself is the single digit [0].
struct DigitString {
    std::vector<std::uint64_t> digits;
    std::uint64_t radix = 10;

    /// The digit count m of the expansion.
    std::size_t size() const { return digits.size(); }

    bool operator==(const DigitString&) const = default;
};

/// Canonical base-k digits of n. Throws InvalidParameter when k < 2.
DigitString digits_of(const Nat& n, std::uint64_t k);

/// Horner evaluation of a digit string; the exact inverse of digits_of on
/// canonical strings. Throws InvalidDigit when any digit is >= k.
Nat value_of(const std::vector<std::uint64_t>& digits, std::uint64_t k);
Nat value_of(const DigitString& ds);

/// Digit count of n in base k (1 for n = 0).
std::size_t num_digits(const Nat& n, std::uint64_t k);

namespace detail {

/// Fast path for word-sized values; appends to out, least-significant first.
void digits_of_u64(std::uint64_t n, std::uint64_t k, std::vector<std::uint64_t>& out);

}  // namespace detail
}  // namespace zadic
