#include "qprs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qprs {

namespace {

// States per grid, with the exhaustive cap applied. Also catches q^r
// overflow before it happens.
std::uint64_t grid_size(const CharPoly& p) {
    const RingModulus ring(p.prime(), p.degree());
    if (ring.modulus() > kExhaustiveLimit)
        throw CapExceededError("state space of q^r = " + std::to_string(ring.modulus()) +
                               " exceeds the exhaustive limit of " +
                               std::to_string(kExhaustiveLimit));
    return ring.modulus();
}

// KMP prefix-function search: is `pattern` a substring of `text`?
bool contains(std::span<const std::uint64_t> text, std::span<const std::uint64_t> pattern) {
    if (pattern.empty())
        return true;
    std::vector<std::size_t> fail(pattern.size(), 0);
    for (std::size_t i = 1, k = 0; i < pattern.size(); ++i) {
        while (k > 0 && pattern[i] != pattern[k])
            k = fail[k - 1];
        if (pattern[i] == pattern[k])
            ++k;
        fail[i] = k;
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        while (k > 0 && text[i] != pattern[k])
            k = fail[k - 1];
        if (text[i] == pattern[k])
            ++k;
        if (k == pattern.size())
            return true;
    }
    return false;
}

} // namespace

std::uint64_t period(const CharPoly& p, const LfsrState& seed) {
    if (seed.q() != p.q() || seed.size() != p.degree())
        throw DimensionMismatchError("seed window does not match the polynomial");
    if (seed.is_zero())
        throw ZeroSeedError("period is undefined for the all-zero window");
    const std::uint64_t bound = grid_size(p);
    LfsrState state = seed;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        state = lfsr_next(state, p).state;
        if (state == seed)
            return t;
    }
    // Unreachable: p_0 != 0 makes the step map invertible, so the orbit of
    // any state is a pure cycle of length at most q^r - 1.
    throw Error("internal: orbit did not close within q^r steps");
}

std::vector<std::uint64_t> period_sequence(const CharPoly& p, const LfsrState& seed) {
    if (seed.q() != p.q() || seed.size() != p.degree())
        throw DimensionMismatchError("seed window does not match the polynomial");
    if (seed.is_zero())
        throw ZeroSeedError("period is undefined for the all-zero window");
    const std::uint64_t bound = grid_size(p);
    std::vector<std::uint64_t> seq;
    LfsrState state = seed;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        seq.push_back(state.window().front());
        state = lfsr_next(state, p).state;
        if (state == seed)
            return seq;
    }
    throw Error("internal: orbit did not close within q^r steps");
}

std::map<std::uint64_t, std::uint64_t> balance(std::span<const std::uint64_t> seq) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const auto v : seq)
        ++counts[v];
    return counts;
}

bool shift_add_check(std::span<const std::uint64_t> seq, std::uint64_t q, std::uint64_t tau) {
    if (seq.empty())
        throw InvalidParameterError("shift-and-add needs a nonempty period");
    const std::size_t length = seq.size();
    tau %= length;
    if (tau == 0)
        throw InvalidParameterError("shift must be nonzero mod the period");
    std::vector<std::uint64_t> sum(length);
    for (std::size_t t = 0; t < length; ++t)
        sum[t] = (seq[t] + seq[(t + tau) % length]) % q;
    // The sum satisfies the same recurrence as seq, so for a maximal-length
    // sequence it is either another cyclic shift or identically zero. The
    // zero outcome is the degenerate family member: over odd q the shift by
    // half a period negates the sequence, and the sum cancels.
    if (std::all_of(sum.begin(), sum.end(), [](std::uint64_t v) { return v == 0; }))
        return true;
    // Rotation test: sum must occur in the doubled sequence.
    std::vector<std::uint64_t> doubled(seq.begin(), seq.end());
    doubled.insert(doubled.end(), seq.begin(), seq.end() - 1);
    return contains(doubled, sum);
}

std::vector<std::uint64_t> difference_counts(std::span<const std::uint64_t> seq, std::uint64_t q,
                                             std::uint64_t tau) {
    if (seq.empty())
        throw InvalidParameterError("difference counts need a nonempty period");
    std::vector<std::uint64_t> counts(q, 0);
    const std::size_t length = seq.size();
    tau %= length;
    for (std::size_t t = 0; t < length; ++t) {
        const std::uint64_t a = seq[(t + tau) % length] % q;
        const std::uint64_t b = seq[t] % q;
        ++counts[(a + q - b) % q];
    }
    return counts;
}

std::complex<double> autocorrelation(std::span<const std::uint64_t> seq, std::uint64_t q,
                                     std::uint64_t tau) {
    if (seq.empty())
        throw InvalidParameterError("autocorrelation needs a nonempty period");
    const std::size_t length = seq.size();
    tau %= length;
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < length; ++t) {
        const std::uint64_t a = seq[(t + tau) % length] % q;
        const std::uint64_t b = seq[t] % q;
        const std::uint64_t d = (a + q - b) % q;
        acc += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(d) /
                                   static_cast<double>(q));
    }
    return acc / static_cast<double>(length);
}

AnalysisReport analyze(const CharPoly& p, const LfsrState& seed, const AnalysisOptions& opt) {
    AnalysisReport report;
    report.q = p.q();
    report.r = p.degree();

    const std::vector<std::uint64_t> seq = period_sequence(p, seed);
    report.period = seq.size();
    report.is_primitive = report.period == grid_size(p) - 1;
    report.symbol_counts = balance(seq);

    // Shift-and-add verdict across [1, period); evenly spaced sample once the
    // period outgrows the configured budget.
    report.shift_add_ok = true;
    if (report.period > 1) {
        const std::uint64_t shifts = report.period - 1;
        if (shifts <= opt.max_shift_add_shifts || opt.max_shift_add_shifts == 0) {
            report.shift_add_exhaustive = true;
            for (std::uint64_t tau = 1; tau < report.period; ++tau) {
                ++report.shift_add_shifts_checked;
                if (!shift_add_check(seq, report.q, tau)) {
                    report.shift_add_ok = false;
                    break;
                }
            }
        } else {
            const std::uint64_t step = shifts / opt.max_shift_add_shifts;
            for (std::uint64_t tau = 1; tau < report.period; tau += step) {
                ++report.shift_add_shifts_checked;
                if (!shift_add_check(seq, report.q, tau)) {
                    report.shift_add_ok = false;
                    break;
                }
            }
        }
    } else {
        report.shift_add_exhaustive = true; // no valid shifts exist
    }

    const std::uint64_t profile = std::min<std::uint64_t>(report.period, opt.max_autocorr_shifts);
    report.autocorrelation.reserve(profile);
    for (std::uint64_t tau = 0; tau < profile; ++tau)
        report.autocorrelation.push_back(autocorrelation(seq, report.q, tau));

    return report;
}

CharPoly find_primitive(PrimeModulus q, std::uint32_t r) {
    const RingModulus ring(q, r);
    if (ring.modulus() > kExhaustiveLimit)
        throw CapExceededError("primitive search beyond the exhaustive limit");
    const std::uint64_t target = ring.modulus() - 1;

    std::vector<std::uint64_t> coeffs(r, 0);
    coeffs[0] = 1;
    std::vector<std::uint64_t> unit(r, 0);
    unit[0] = 1;
    while (true) {
        const CharPoly candidate(q, coeffs);
        if (period(candidate, LfsrState(q, unit)) == target)
            return candidate;
        // next coefficient vector: odometer with p_0 in [1, q)
        std::uint32_t pos = r;
        while (pos-- > 0) {
            if (++coeffs[pos] < q.value())
                break;
            coeffs[pos] = pos == 0 ? 1 : 0;
            if (pos == 0)
                throw Error("no primitive polynomial found (exhausted candidates)");
        }
    }
}

} // namespace qprs
