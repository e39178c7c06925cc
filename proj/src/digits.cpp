#include "zadic/digits.hpp"

#include "zadic/errors.hpp"

#include <limits>

namespace zadic {

namespace detail {

void digits_of_u64(std::uint64_t n, std::uint64_t k, std::vector<std::uint64_t>& out) {
    if (n == 0) {
        out.push_back(0);
        return;
    }
    while (n != 0) {
        out.push_back(n % k);
        n /= k;
    }
}

}  // namespace detail

DigitString digits_of(const Nat& n, std::uint64_t k) {
    if (k < 2) {
        throw InvalidParameter("radix must be >= 2, got " + std::to_string(k));
    }
    DigitString ds;
    ds.radix = k;
    if (fits_u64(n)) {
        detail::digits_of_u64(n.convert_to<std::uint64_t>(), k, ds.digits);
        return ds;
    }
    Nat cur = n;
    const Nat radix = k;
    Nat quotient, remainder;
    while (cur != 0) {
        boost::multiprecision::divide_qr(cur, radix, quotient, remainder);
        ds.digits.push_back(remainder.convert_to<std::uint64_t>());
        cur.swap(quotient);
    }
    return ds;
}

Nat value_of(const std::vector<std::uint64_t>& digits, std::uint64_t k) {
    if (k < 2) {
        throw InvalidParameter("radix must be >= 2, got " + std::to_string(k));
    }
    for (std::uint64_t d : digits) {
        if (d >= k) {
            throw InvalidDigit("digit " + std::to_string(d) + " is not below radix " +
                               std::to_string(k));
        }
    }
    Nat acc = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc *= k;
        acc += *it;
    }
    return acc;
}

Nat value_of(const DigitString& ds) { return value_of(ds.digits, ds.radix); }

std::size_t num_digits(const Nat& n, std::uint64_t k) {
    if (k < 2) {
        throw InvalidParameter("radix must be >= 2, got " + std::to_string(k));
    }
    if (n == 0) {
        return 1;
    }
    if (fits_u64(n)) {
        std::size_t m = 0;
        for (std::uint64_t v = n.convert_to<std::uint64_t>(); v != 0; v /= k) {
            ++m;
        }
        return m;
    }
    std::size_t m = 0;
    Nat cur = n;
    const Nat radix = k;
    while (cur != 0) {
        cur /= radix;
        ++m;
    }
    return m;
}

}  // namespace zadic
