#include "qprs/field.hpp"

#include <string>

namespace qprs {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5}})
        if (n % d == 0)
            return n == d;
    for (std::uint64_t d = 7; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0)
            return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t q) : q_(q) {
    if (q < 2)
        throw TooSmallError("modulus must be at least 2, got " + std::to_string(q));
    if (!is_prime(q))
        throw CompositeModulusError("modulus must be prime, got " + std::to_string(q));
}

RingModulus::RingModulus(PrimeModulus q, std::uint32_t r) : q_(q), r_(r), modulus_(0) {
    if (r == 0)
        throw InvalidParameterError("ring exponent must be positive");
    constexpr unsigned __int128 limit = (unsigned __int128){1} << 63;
    unsigned __int128 m = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        m *= q.value();
        if (m >= limit)
            throw OverflowError("q^r = " + std::to_string(q.value()) + "^" + std::to_string(r) +
                                " does not fit below 2^63");
    }
    modulus_ = static_cast<std::uint64_t>(m);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    const std::uint64_t s = a + b; // canonical operands are < 2^63, no wrap
    return s >= m ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return a >= b ? a - b : a + (m - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m < 2)
        throw TooSmallError("pow_mod modulus must be at least 2");
    std::uint64_t base = a % m;
    std::uint64_t result = 1 % m;
    while (e > 0) {
        if (e & 1)
            result = mul_mod(result, base, m);
        e >>= 1;
        if (e)
            base = mul_mod(base, base, m);
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    if (m < 2)
        throw TooSmallError("inv_mod modulus must be at least 2");
    // Extended Euclid; m < 2^63 keeps all intermediates in signed range.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw NotInvertibleError(std::to_string(a % m) + " is not invertible mod " +
                                 std::to_string(m));
    if (t < 0)
        t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace qprs
