#pragma once

#include "zadic/nat.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace zadic {

/// The (k, p) pair together with the unique decomposition
/// k = r*p + s + 1, 1 <= s <= p. The derived pieces are computed at
/// construction and the object is immutable, so they can never go stale.
class Parameters {
public:
    /// Throws InvalidParameter unless k >= 2 and p >= 2.
    Parameters(std::uint64_t k, std::uint64_t p);

    std::uint64_t k() const { return k_; }
    std::uint64_t p() const { return p_; }
    std::uint64_t r() const { return r_; }
    std::uint64_t s() const { return s_; }

    /// p+2 <= k < p^2 - 3p + 2 and p > 5 (the convergence assumptions).
    bool assumptions_hold() const { return assumptions_hold_; }

    bool operator==(const Parameters&) const = default;

private:
    std::uint64_t k_;
    std::uint64_t p_;
    std::uint64_t r_;
    std::uint64_t s_;
    bool assumptions_hold_;
};

/// Unique (r, s) with k = r*p + s + 1 and 1 <= s <= p; r >= 0.
std::pair<std::uint64_t, std::uint64_t> decompose_k(std::uint64_t k, std::uint64_t p);

struct AssumptionReport {
    Parameters parameters;
    bool holds_H;    // p+2 <= k < p^2 - 3p + 2 and p > 5
    bool holds_H1;   // 1 <= r <= p-4
    bool holds_H2;   // (r+1)(r+2) <= r*p + 1
    Nat f_max;       // maximum of the digit map over digits 0..k-1
};

/// Evaluate all three assumption forms plus the digit-map maximum.
AssumptionReport check_assumptions(std::uint64_t k, std::uint64_t p);

/// Scan p in [p_lo, p_hi] and k in [2, p^2], returning every (k, p) where
/// H and (H1 && H2) disagree. Empirically empty for p > 5; a nonempty
/// result is a finding about the assumption forms, not an error.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
audit_assumption_equivalence(std::uint64_t p_lo, std::uint64_t p_hi);

}  // namespace zadic
