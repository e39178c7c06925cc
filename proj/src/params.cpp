#include "zadic/params.hpp"

#include "zadic/dynamics.hpp"
#include "zadic/errors.hpp"

#include <cassert>

namespace zadic {

namespace {

using u128 = unsigned __int128;

void validate_kp(std::uint64_t k, std::uint64_t p) {
    if (k < 2) {
        throw InvalidParameter("radix k must be >= 2, got " + std::to_string(k));
    }
    if (p < 2) {
        throw InvalidParameter("modulus p must be >= 2, got " + std::to_string(p));
    }
}

// p+2 <= k < p^2 - 3p + 2 and p > 5. The upper bound factors as
// (p-1)(p-2), which keeps the arithmetic nonnegative.
bool eval_H(std::uint64_t k, std::uint64_t p) {
    return p > 5 && k >= p + 2 && u128(k) < u128(p - 1) * (p - 2);
}

bool eval_H1(std::uint64_t r, std::uint64_t p) { return r >= 1 && r + 4 <= p; }

bool eval_H2(std::uint64_t r, std::uint64_t p) {
    return u128(r + 1) * (r + 2) <= u128(r) * p + 1;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> decompose_k(std::uint64_t k, std::uint64_t p) {
    validate_kp(k, p);
    const std::uint64_t r = (k - 2) / p;
    const std::uint64_t s = k - r * p - 1;
    assert(s >= 1 && s <= p && k == r * p + s + 1);
    return {r, s};
}

Parameters::Parameters(std::uint64_t k, std::uint64_t p) : k_(k), p_(p) {
    const auto [r, s] = decompose_k(k, p);
    r_ = r;
    s_ = s;
    assumptions_hold_ = eval_H(k, p);
}

AssumptionReport check_assumptions(std::uint64_t k, std::uint64_t p) {
    Parameters params(k, p);

    // f peaks at the largest digit congruent to 1 mod p, which is r*p + 1,
    // giving (r+1)(r+2). Small radixes are scanned outright; the scan and
    // the closed form agree everywhere (asserted in debug builds).
    Nat f_max;
    const Nat closed_form = nat_from_u128(u128(params.r() + 1) * (params.r() + 2));
    if (k <= (std::uint64_t{1} << 20)) {
        unsigned __int128 best = 0;
        for (std::uint64_t x = 0; x < k; ++x) {
            const auto fx = detail::digit_map_u128(x, p);
            if (fx > best) {
                best = fx;
            }
        }
        f_max = nat_from_u128(best);
        assert(f_max == closed_form);
    } else {
        f_max = closed_form;
    }

    return AssumptionReport{
        .parameters = params,
        .holds_H = params.assumptions_hold(),
        .holds_H1 = eval_H1(params.r(), p),
        .holds_H2 = eval_H2(params.r(), p),
        .f_max = f_max,
    };
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
audit_assumption_equivalence(std::uint64_t p_lo, std::uint64_t p_hi) {
    if (p_lo < 2 || p_lo > p_hi) {
        throw InvalidParameter("audit needs 2 <= p_lo <= p_hi");
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> deviations;
    for (std::uint64_t p = p_lo; p <= p_hi; ++p) {
        for (std::uint64_t k = 2; k <= p * p; ++k) {
            const auto [r, s] = decompose_k(k, p);
            (void)s;
            const bool h = eval_H(k, p);
            if (h != (eval_H1(r, p) && eval_H2(r, p))) {
                deviations.emplace_back(k, p);
            }
        }
    }
    return deviations;
}

}  // namespace zadic
