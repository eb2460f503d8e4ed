#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qprs/lfsr.hpp"

namespace qprs {

struct AnalysisOptions {
    // Autocorrelation profile covers shifts [0, min(period, max_autocorr_shifts)).
    std::uint64_t max_autocorr_shifts = 128;
    // Shift-and-add is checked for every shift in [1, period) up to this many
    // shifts; beyond it a deterministic evenly spaced sample is used.
    std::uint64_t max_shift_add_shifts = 4096;
};

struct AnalysisReport {
    std::uint64_t q = 0;
    std::uint32_t r = 0;
    std::uint64_t period = 0;
    bool is_primitive = false; // period == q^r - 1
    std::map<std::uint64_t, std::uint64_t> symbol_counts;
    bool shift_add_ok = false;
    std::uint64_t shift_add_shifts_checked = 0;
    bool shift_add_exhaustive = false;
    std::vector<std::complex<double>> autocorrelation; // entry t = value at shift t
};

// Smallest t >= 1 returning the window to itself. Exhaustive state
// iteration; requires a nonzero seed (ZeroSeedError) and q^r within
// kExhaustiveLimit (CapExceededError). With p_0 != 0 the orbit is purely
// periodic, so the walk always comes home.
std::uint64_t period(const CharPoly& p, const LfsrState& seed);

// One full period of sequence elements starting with the seed window's
// oldest element.
std::vector<std::uint64_t> period_sequence(const CharPoly& p, const LfsrState& seed);

// Histogram of residues.
std::map<std::uint64_t, std::uint64_t> balance(std::span<const std::uint64_t> seq);

// True iff the elementwise sum of the sequence with its tau-shifted self is
// a cyclic rotation of the sequence or identically zero. The zero case is
// the degenerate family member: over odd q, shifting a maximal-length
// sequence by half its period negates it, so that one sum cancels while
// still satisfying the recurrence. tau must be nonzero mod the period.
bool shift_add_check(std::span<const std::uint64_t> seq, std::uint64_t q, std::uint64_t tau);

// counts[d] = number of positions t with (s_{t+tau} - s_t) mod q = d.
// The exact integer backing for the autocorrelation value.
std::vector<std::uint64_t> difference_counts(std::span<const std::uint64_t> seq, std::uint64_t q,
                                             std::uint64_t tau);

// (1/L) sum_t w^((s_{t+tau} - s_t) mod q) with w = exp(2*pi*i/q), summed
// directly over positions.
std::complex<double> autocorrelation(std::span<const std::uint64_t> seq, std::uint64_t q,
                                     std::uint64_t tau);

AnalysisReport analyze(const CharPoly& p, const LfsrState& seed, const AnalysisOptions& opt = {});

// First polynomial in ascending coefficient order whose nonzero states form
// a single orbit of length q^r - 1. Deterministic; desk-scale only.
CharPoly find_primitive(PrimeModulus q, std::uint32_t r);

} // namespace qprs
