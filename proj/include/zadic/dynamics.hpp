#pragma once

#include "zadic/digits.hpp"
#include "zadic/params.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace zadic {

inline constexpr std::uint64_t kDefaultBudget = 10'000;

/// The piecewise digit map. With q = x / p and j = x mod p:
///
///     j == 1  ->  (q+1)(q+2)
///     j == 0  ->  q
///     else    ->  q + 1
///
/// Computed through (q, j) so every intermediate stays an integer; debug
/// builds cross-check the equivalent rational forms, in which all
/// divisions are exact ((x+p-1)(x+2p-1)/p^2 on the j == 1 branch and
/// (x+p-j)/p elsewhere).
Nat digit_map(std::uint64_t x, std::uint64_t p);

/// Sum of digit_map over the base-k digits of n. Total map: 0 -> 0.
Nat z_transform(const Nat& n, const Parameters& params);

enum class TrajectoryStatus { CycleFound, BudgetExhausted };

/// The orbit of a start value: the transient prefix followed by exactly
/// one pass around the detected cycle.
struct Trajectory {
    Nat start;
    std::vector<Nat> steps;  // steps[0] == start
    std::uint64_t transient_length = 0;
    std::vector<Nat> cycle;  // rotated so the minimum element is first
    TrajectoryStatus status = TrajectoryStatus::BudgetExhausted;
};

/// Iterate the transformation from n, recording every value, until some
/// value repeats or `budget` applications have been spent. The first
/// repeat fixes the transient length and the cycle; the cycle is reported
/// in canonical (minimum-first) rotation. Budget exhaustion is a status,
/// not an error. Deterministic in (n, k, p, budget).
Trajectory trajectory(const Nat& n, const Parameters& params,
                      std::uint64_t budget = kDefaultBudget);

/// z_transform(n) < k^(m-1) for the m-digit n: transforming a value of 3
/// or more digits strictly contracts the digit count. Exists to drive
/// property tests; true for every valid input. Throws InvalidInput unless
/// the parameters conform and n has at least 3 digits in base k.
bool contraction_bound_holds(const Nat& n, const Parameters& params);

/// Rotate a cycle so its minimum element comes first.
std::vector<Nat> canonical_rotation(std::vector<Nat> cycle);

namespace detail {

/// Digit-map value as a 128-bit integer. Never overflows: q < 2^63.
unsigned __int128 digit_map_u128(std::uint64_t x, std::uint64_t p);

/// Word-sized transform; nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> z_transform_u64(std::uint64_t n, std::uint64_t k,
                                             std::uint64_t p);

/// Transform with the word-sized fast path applied when possible.
Nat z_transform_nat(const Nat& n, std::uint64_t k, std::uint64_t p);

}  // namespace detail
}  // namespace zadic
