#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qprs/field.hpp"
#include "qprs/lfsr.hpp"

namespace qprs {

// Index conventions shared by truth tables and monomials: a tuple
// (d_0, ..., d_{r-1}) with d_u < q packs into i = sum_u d_u * q^(r-1-u),
// so the first (oldest) position is the most significant q-ary digit.
// For a monomial, digit u is the exponent of the window variable s_{n+u}.

std::uint64_t tuple_to_index(std::span<const std::uint64_t> digits, std::uint64_t q);
std::vector<std::uint32_t> exponents_of(std::uint64_t index, std::uint64_t q, std::uint32_t r);
std::uint64_t state_to_index(const LfsrState& state);

// A function {0..q-1}^r -> [0, q^r), tabulated on the full grid. Entry j is
// the value at the window whose packed index is j.
class TruthTable {
public:
    TruthTable(RingModulus ring, std::vector<std::uint64_t> values);

    const RingModulus& ring() const noexcept { return ring_; }
    std::span<const std::uint64_t> values() const noexcept { return values_; }

private:
    RingModulus ring_;
    std::vector<std::uint64_t> values_;
};

struct Term {
    std::uint64_t index;                  // packed exponent tuple
    std::vector<std::uint32_t> exponents; // exponent of s_{n+u} at position u
    std::uint64_t coeff;                  // canonical, in [1, q^r)

    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over Z_{q^r} on the monomials s_n^{e_0} ... s_{n+r-1}^{e_{r-1}}
// with all exponents below q. Zero coefficients are never stored; terms are
// kept sorted by packed index. Immutable after construction.
class ModularPoly {
public:
    ModularPoly(RingModulus ring, std::map<std::uint64_t, std::uint64_t> coeffs);

    const RingModulus& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    std::uint64_t coeff(std::uint64_t index) const; // 0 when absent

    friend bool operator==(const ModularPoly&, const ModularPoly&) = default;

private:
    RingModulus ring_;
    std::vector<Term> terms_;
};

// Exact interpolation on the grid {0..q-1}^r, all arithmetic in Z_{q^r}:
// a tensor product of univariate inverse Vandermonde transforms on the
// nodes 0..q-1. Those transforms exist because every node difference lies
// in [1, q-1] and is therefore a unit mod q^r. The result reproduces the
// table exactly at every grid point.
ModularPoly interpolate(const TruthTable& table);

// The packed generator polynomial for P: tabulates the r lookahead forms on
// the whole grid, packs them as F(S) = sum_l q^(l-1) f_l(S) so that q-ary
// digit t of the value is the sequence element s_{n+r+t}, and interpolates F.
ModularPoly build_modular_form(const CharPoly& p);

// sum_i c_i * prod_u S_u^{e_u} (mod q^r), with per-variable power tables.
std::uint64_t evaluate(const ModularPoly& poly, const LfsrState& state);

// Digit extraction: floor(v / q^t) mod q. Throws IndexOutOfRangeError for
// t >= r and InvalidParameterError for v >= q^r.
std::uint64_t mask(const RingModulus& ring, std::uint64_t v, std::uint32_t t);

} // namespace qprs
