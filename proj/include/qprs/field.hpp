#pragma once

#include <cstdint>

#include "qprs/errors.hpp"

namespace qprs {

// Exhaustive sweeps (truth-table synthesis, period search, full grid
// verification) refuse to run past this many points.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 20;

// Deterministic trial division; parameters here are desk-scale.
bool is_prime(std::uint64_t n);

// A validated prime modulus q >= 2.
class PrimeModulus {
public:
    // Throws TooSmallError for q < 2, CompositeModulusError for composite q.
    explicit PrimeModulus(std::uint64_t q);

    std::uint64_t value() const noexcept { return q_; }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t q_;
};

// The residue ring modulo q^r. Rejects q^r >= 2^63 so every product of two
// canonical residues fits an unsigned 128-bit widening multiply.
class RingModulus {
public:
    RingModulus(PrimeModulus q, std::uint32_t r);

    std::uint64_t q() const noexcept { return q_.value(); }
    PrimeModulus prime() const noexcept { return q_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    friend bool operator==(const RingModulus&, const RingModulus&) = default;

private:
    PrimeModulus q_;
    std::uint32_t r_;
    std::uint64_t modulus_;
};

// Residue arithmetic. add/sub expect canonical operands (< m); mul accepts
// any 64-bit operands. All results are canonical.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;

// a^e mod m with a^0 = 1. Throws TooSmallError for m < 2.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Multiplicative inverse mod m (extended Euclid; m need not be prime).
// Throws NotInvertibleError when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

} // namespace qprs
