#include "qprs/lfsr.hpp"

#include <algorithm>
#include <string>

namespace qprs {

namespace {

void require_same_shape(const LfsrState& state, const CharPoly& p) {
    if (state.q() != p.q() || state.size() != p.degree())
        throw DimensionMismatchError("state window (q=" + std::to_string(state.q()) + ", r=" +
                                     std::to_string(state.size()) + ") does not match polynomial (q=" +
                                     std::to_string(p.q()) + ", r=" + std::to_string(p.degree()) + ")");
}

} // namespace

CharPoly::CharPoly(PrimeModulus q, std::vector<std::uint64_t> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidParameterError("characteristic polynomial needs degree >= 1");
    for (const auto c : coeffs_)
        if (c >= q_.value())
            throw InvalidParameterError("coefficient " + std::to_string(c) + " out of range mod " +
                                        std::to_string(q_.value()));
    if (coeffs_[0] == 0)
        throw InvalidParameterError("p_0 must be nonzero (a zero low coefficient degenerates to a "
                                    "shorter register and breaks pure periodicity)");
}

LfsrState::LfsrState(PrimeModulus q, std::vector<std::uint64_t> window)
    : q_(q), window_(std::move(window)) {
    if (window_.empty())
        throw InvalidParameterError("state window must be nonempty");
    for (const auto v : window_)
        if (v >= q_.value())
            throw InvalidParameterError("state element " + std::to_string(v) + " out of range mod " +
                                        std::to_string(q_.value()));
}

bool LfsrState::is_zero() const noexcept {
    return std::ranges::all_of(window_, [](std::uint64_t v) { return v == 0; });
}

Step lfsr_next(const LfsrState& state, const CharPoly& p) {
    require_same_shape(state, p);
    const std::uint64_t q = p.q();
    const auto w = state.window();
    std::uint64_t element = 0;
    for (std::uint32_t j = 0; j < p.degree(); ++j)
        element = add_mod(element, mul_mod(p.coeff(j), w[j], q), q);
    std::vector<std::uint64_t> next(w.begin() + 1, w.end());
    next.push_back(element);
    return {element, LfsrState(p.prime(), std::move(next))};
}

ModMatrix companion(const CharPoly& p) {
    const std::uint32_t r = p.degree();
    ModMatrix c(p.q(), r);
    for (std::uint32_t i = 0; i < r; ++i)
        c.set(i, 0, p.coeff(r - 1 - i));
    for (std::uint32_t i = 0; i + 1 < r; ++i)
        c.set(i, i + 1, 1);
    return c;
}

LfsrState apply(const ModMatrix& m, const LfsrState& state) {
    if (m.modulus() != state.q() || m.dim() != state.size())
        throw DimensionMismatchError("matrix does not match the state window");
    const std::uint32_t r = state.size();
    const std::uint64_t q = m.modulus();
    const auto w = state.window();
    // Row vector (newest first) times the matrix, reversed back to the
    // oldest-first window layout.
    std::vector<std::uint64_t> out(r, 0);
    for (std::uint32_t col = 0; col < r; ++col) {
        std::uint64_t acc = 0;
        for (std::uint32_t k = 0; k < r; ++k)
            acc = add_mod(acc, mul_mod(w[r - 1 - k], m.at(k, col), q), q);
        out[r - 1 - col] = acc;
    }
    return LfsrState(state.prime(), std::move(out));
}

LfsrState jump(const LfsrState& state, const CharPoly& p, std::uint64_t n) {
    require_same_shape(state, p);
    if (n == 0)
        return state;
    return apply(companion(p).pow(n), state);
}

} // namespace qprs
