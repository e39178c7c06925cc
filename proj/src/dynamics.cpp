#include "zadic/dynamics.hpp"

#include "zadic/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_map>
#include <utility>

namespace zadic {

namespace detail {

using u128 = unsigned __int128;

#ifndef NDEBUG
// Literal piecewise form: every division must come out exact.
static u128 digit_map_literal(std::uint64_t x, std::uint64_t p) {
    const std::uint64_t j = x % p;
    if (j == 0) {
        return x / p;
    }
    if (j == 1) {
        const u128 num = (u128(x) + p - 1) * (u128(x) + 2 * u128(p) - 1);
        const u128 p2 = u128(p) * p;
        assert(num % p2 == 0);
        return num / p2;
    }
    const u128 num = u128(x) + p - j;
    assert(num % p == 0);
    return num / p;
}
#endif

u128 digit_map_u128(std::uint64_t x, std::uint64_t p) {
    const std::uint64_t q = x / p;
    const std::uint64_t j = x % p;
    u128 out;
    if (j == 1) {
        out = u128(q + 1) * (q + 2);
    } else if (j == 0) {
        out = q;
    } else {
        out = u128(q) + 1;
    }
    // The literal products need ~2*64 bits plus slack; skip the cross-check
    // only where it would itself overflow.
    assert(x >= (std::uint64_t{1} << 62) || p >= (std::uint64_t{1} << 62) ||
           out == digit_map_literal(x, p));
    return out;
}

std::optional<std::uint64_t> z_transform_u64(std::uint64_t n, std::uint64_t k,
                                             std::uint64_t p) {
    // Each term is < 2^126 and a 64-bit value has at most 64 base-k digits
    // with terms shrinking as the digit count grows, so the accumulator
    // never overflows 128 bits.
    u128 acc = 0;
    if (n == 0) {
        return 0;
    }
    while (n != 0) {
        acc += digit_map_u128(n % k, p);
        n /= k;
    }
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

Nat z_transform_nat(const Nat& n, std::uint64_t k, std::uint64_t p) {
    if (fits_u64(n)) {
        if (auto fast = z_transform_u64(n.convert_to<std::uint64_t>(), k, p)) {
            return Nat(*fast);
        }
    }
    if (n == 0) {
        return Nat(0);
    }
    Nat acc = 0;
    Nat cur = n;
    const Nat radix = k;
    Nat quotient, remainder;
    while (cur != 0) {
        boost::multiprecision::divide_qr(cur, radix, quotient, remainder);
        acc += nat_from_u128(digit_map_u128(remainder.convert_to<std::uint64_t>(), p));
        cur.swap(quotient);
    }
    return acc;
}

}  // namespace detail

Nat digit_map(std::uint64_t x, std::uint64_t p) {
    if (p < 2) {
        throw InvalidParameter("modulus p must be >= 2, got " + std::to_string(p));
    }
    return nat_from_u128(detail::digit_map_u128(x, p));
}

Nat z_transform(const Nat& n, const Parameters& params) {
    return detail::z_transform_nat(n, params.k(), params.p());
}

std::vector<Nat> canonical_rotation(std::vector<Nat> cycle) {
    if (cycle.size() < 2) {
        return cycle;
    }
    const auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), cycle.begin() + (min_it - cycle.begin()), cycle.end());
    return cycle;
}

Trajectory trajectory(const Nat& n, const Parameters& params, std::uint64_t budget) {
    if (budget < 1) {
        throw InvalidParameter("budget must be >= 1");
    }
    Trajectory t;
    t.start = n;
    t.steps.push_back(n);

    std::unordered_map<Nat, std::uint64_t, NatHash> first_seen;
    first_seen.emplace(n, 0);

    Nat cur = n;
    for (std::uint64_t step = 1; step <= budget; ++step) {
        cur = detail::z_transform_nat(cur, params.k(), params.p());
        if (auto it = first_seen.find(cur); it != first_seen.end()) {
            t.transient_length = it->second;
            t.cycle.assign(t.steps.begin() + static_cast<std::ptrdiff_t>(it->second),
                           t.steps.end());
            t.cycle = canonical_rotation(std::move(t.cycle));
            t.status = TrajectoryStatus::CycleFound;
            return t;
        }
        first_seen.emplace(cur, step);
        t.steps.push_back(cur);
    }
    t.status = TrajectoryStatus::BudgetExhausted;
    t.transient_length = 0;
    t.cycle.clear();
    return t;
}

bool contraction_bound_holds(const Nat& n, const Parameters& params) {
    if (!params.assumptions_hold()) {
        throw InvalidInput("parameters (k=" + std::to_string(params.k()) +
                           ", p=" + std::to_string(params.p()) +
                           ") do not satisfy the convergence assumptions");
    }
    const std::size_t m = num_digits(n, params.k());
    if (m < 3) {
        throw InvalidInput("bound check needs at least 3 digits, n has " +
                           std::to_string(m));
    }
    const Nat bound = boost::multiprecision::pow(Nat(params.k()),
                                                 static_cast<unsigned>(m - 1));
    return z_transform(n, params) < bound;
}

}  // namespace zadic
