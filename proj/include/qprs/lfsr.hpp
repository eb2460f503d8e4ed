#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qprs/field.hpp"
#include "qprs/modmatrix.hpp"

namespace qprs {

// Characteristic polynomial P(z) = z^r - (p_{r-1} z^{r-1} + ... + p_0) over
// GF(q), held as the ascending coefficient vector (p_0, ..., p_{r-1}).
// Everything in this library takes coefficients in that order; printed
// polynomial notation is descending, so convert once at the boundary.
//
// p_0 != 0 is required: it keeps the one-step state map invertible, so every
// orbit is purely periodic and jump-ahead is well defined.
class CharPoly {
public:
    CharPoly(PrimeModulus q, std::vector<std::uint64_t> coeffs);

    std::uint64_t q() const noexcept { return q_.value(); }
    PrimeModulus prime() const noexcept { return q_; }
    std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(coeffs_.size()); }
    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
    std::uint64_t coeff(std::uint32_t j) const { return coeffs_.at(j); }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    PrimeModulus q_;
    std::vector<std::uint64_t> coeffs_;
};

// Window of r consecutive sequence elements (s_n, ..., s_{n+r-1}), oldest
// element first.
class LfsrState {
public:
    LfsrState(PrimeModulus q, std::vector<std::uint64_t> window);

    std::uint64_t q() const noexcept { return q_.value(); }
    PrimeModulus prime() const noexcept { return q_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(window_.size()); }
    std::span<const std::uint64_t> window() const noexcept { return window_; }
    bool is_zero() const noexcept;

    friend bool operator==(const LfsrState&, const LfsrState&) = default;

private:
    PrimeModulus q_;
    std::vector<std::uint64_t> window_;
};

struct Step {
    std::uint64_t element; // the newly produced sequence element s_{n+r}
    LfsrState state;       // window advanced one position
};

// One step of the recurrence s_{n+r} = sum_j p_j s_{n+j} (mod q).
Step lfsr_next(const LfsrState& state, const CharPoly& p);

// Companion matrix of P in the newest-first product form: column 0 carries
// (p_{r-1}, ..., p_0) and the superdiagonal shifts the rest of the window.
ModMatrix companion(const CharPoly& p);

// Applies a power of the companion matrix to a state window. The window is
// stored oldest-first while the matrix acts on newest-first row vectors;
// this function owns that reversal, so apply(companion(p), s) is exactly
// lfsr_next(s, p).state.
LfsrState apply(const ModMatrix& m, const LfsrState& state);

// State after n steps, via square-and-multiply on the companion matrix:
// O(r^3 log n) ring operations. jump(s, p, 0) == s.
LfsrState jump(const LfsrState& state, const CharPoly& p, std::uint64_t n);

} // namespace qprs
