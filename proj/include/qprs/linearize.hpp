#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qprs/lfsr.hpp"

namespace qprs {

// The r x r table of reduced lookahead coefficients: row l (0-based) holds
// the mod-q linear form computing s_{n+r+l} from the window
// (s_n, ..., s_{n+r-1}), coefficients in oldest-first order. Row 0 is the
// raw recurrence (p_0, ..., p_{r-1}).
class BlockCoeffMatrix {
public:
    BlockCoeffMatrix(PrimeModulus q, std::vector<std::vector<std::uint64_t>> rows);

    std::uint64_t q() const noexcept { return q_.value(); }
    PrimeModulus prime() const noexcept { return q_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(rows_.size()); }
    std::span<const std::uint64_t> row(std::uint32_t l) const { return rows_.at(l); }
    const std::vector<std::vector<std::uint64_t>>& rows() const noexcept { return rows_; }

    friend bool operator==(const BlockCoeffMatrix&, const BlockCoeffMatrix&) = default;

private:
    PrimeModulus q_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Derives the lookahead table by iterated substitution of the recurrence:
// each row is the previous one shifted onto the next window, with the
// coefficient that falls off folded back through (p_0, ..., p_{r-1}).
BlockCoeffMatrix block_coeffs(const CharPoly& p);

// Evaluates all r lookahead forms at once: the result window holds the next
// r sequence elements, i.e. the state advanced by r steps.
LfsrState block_step(const LfsrState& state, const BlockCoeffMatrix& m);

} // namespace qprs
