#include "qprs/linearize.hpp"

#include <string>

namespace qprs {

BlockCoeffMatrix::BlockCoeffMatrix(PrimeModulus q, std::vector<std::vector<std::uint64_t>> rows)
    : q_(q), rows_(std::move(rows)) {
    if (rows_.empty())
        throw InvalidParameterError("lookahead table must have at least one row");
    for (const auto& row : rows_) {
        if (row.size() != rows_.size())
            throw DimensionMismatchError("lookahead table must be square");
        for (const auto c : row)
            if (c >= q_.value())
                throw InvalidParameterError("lookahead coefficient out of range mod " +
                                            std::to_string(q_.value()));
    }
}

BlockCoeffMatrix block_coeffs(const CharPoly& p) {
    const std::uint64_t q = p.q();
    const std::uint32_t r = p.degree();
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(r);
    std::vector<std::uint64_t> row(p.coeffs().begin(), p.coeffs().end());
    rows.push_back(row);
    for (std::uint32_t l = 1; l < r; ++l) {
        // Shift the form onto the next window; the coefficient that falls
        // off multiplies the recurrence.
        const std::uint64_t wrapped = row[r - 1];
        std::vector<std::uint64_t> next(r, 0);
        for (std::uint32_t j = 0; j < r; ++j) {
            std::uint64_t v = mul_mod(wrapped, p.coeff(j), q);
            if (j > 0)
                v = add_mod(v, row[j - 1], q);
            next[j] = v;
        }
        rows.push_back(next);
        row = std::move(next);
    }
    return BlockCoeffMatrix(p.prime(), std::move(rows));
}

LfsrState block_step(const LfsrState& state, const BlockCoeffMatrix& m) {
    if (state.q() != m.q() || state.size() != m.size())
        throw DimensionMismatchError("state window does not match the lookahead table");
    const std::uint64_t q = m.q();
    const std::uint32_t r = m.size();
    const auto w = state.window();
    std::vector<std::uint64_t> out(r, 0);
    for (std::uint32_t l = 0; l < r; ++l) {
        const auto row = m.row(l);
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < r; ++j)
            acc = add_mod(acc, mul_mod(row[j], w[j], q), q);
        out[l] = acc;
    }
    return LfsrState(state.prime(), std::move(out));
}

} // namespace qprs
