#include "qprs/arithpoly.hpp"

#include <string>

#include "qprs/linearize.hpp"

namespace qprs {

std::uint64_t tuple_to_index(std::span<const std::uint64_t> digits, std::uint64_t q) {
    std::uint64_t index = 0;
    for (const auto d : digits) {
        if (d >= q)
            throw InvalidParameterError("tuple digit " + std::to_string(d) +
                                        " out of range mod " + std::to_string(q));
        index = index * q + d;
    }
    return index;
}

std::vector<std::uint32_t> exponents_of(std::uint64_t index, std::uint64_t q, std::uint32_t r) {
    std::vector<std::uint32_t> exps(r, 0);
    for (std::uint32_t u = r; u-- > 0;) {
        exps[u] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    if (index != 0)
        throw IndexOutOfRangeError("packed index does not fit " + std::to_string(r) +
                                   " base-" + std::to_string(q) + " digits");
    return exps;
}

std::uint64_t state_to_index(const LfsrState& state) {
    return tuple_to_index(state.window(), state.q());
}

TruthTable::TruthTable(RingModulus ring, std::vector<std::uint64_t> values)
    : ring_(ring), values_(std::move(values)) {
    if (values_.size() != ring_.modulus())
        throw LengthMismatchError("truth table needs exactly q^r = " +
                                  std::to_string(ring_.modulus()) + " entries, got " +
                                  std::to_string(values_.size()));
    for (const auto v : values_)
        if (v >= ring_.modulus())
            throw InvalidParameterError("truth table value out of range mod " +
                                        std::to_string(ring_.modulus()));
}

ModularPoly::ModularPoly(RingModulus ring, std::map<std::uint64_t, std::uint64_t> coeffs)
    : ring_(ring) {
    terms_.reserve(coeffs.size());
    for (const auto& [index, c] : coeffs) {
        if (index >= ring_.modulus())
            throw IndexOutOfRangeError("monomial index " + std::to_string(index) +
                                       " out of range for q^r = " + std::to_string(ring_.modulus()));
        const std::uint64_t canon = c % ring_.modulus();
        if (canon == 0)
            continue;
        terms_.push_back(Term{index, exponents_of(index, ring_.q(), ring_.r()), canon});
    }
}

std::uint64_t ModularPoly::coeff(std::uint64_t index) const {
    for (const auto& t : terms_)
        if (t.index == index)
            return t.coeff;
    return 0;
}

namespace {

// Coefficients of the Lagrange basis polynomials on the nodes 0..q-1 as a
// q x q table W with W[e][x] = coefficient of z^e in L_x(z), reduced mod m.
// Every denominator is a product of node differences in [1, q-1], each
// coprime to q, hence a unit mod m = q^r.
std::vector<std::vector<std::uint64_t>> lagrange_basis_coeffs(std::uint64_t q, std::uint64_t m) {
    std::vector<std::vector<std::uint64_t>> w(q, std::vector<std::uint64_t>(q, 0));
    for (std::uint64_t x = 0; x < q; ++x) {
        std::vector<std::uint64_t> num{1 % m}; // ascending coefficients of prod_{y != x} (z - y)
        std::uint64_t den = 1 % m;
        for (std::uint64_t y = 0; y < q; ++y) {
            if (y == x)
                continue;
            const std::uint64_t neg_y = (m - y % m) % m;
            std::vector<std::uint64_t> grown(num.size() + 1, 0);
            for (std::size_t e = 0; e < num.size(); ++e) {
                grown[e + 1] = add_mod(grown[e + 1], num[e], m);
                grown[e] = add_mod(grown[e], mul_mod(num[e], neg_y, m), m);
            }
            num = std::move(grown);
            den = mul_mod(den, x >= y ? x - y : m - (y - x) % m, m);
        }
        const std::uint64_t inv_den = inv_mod(den, m);
        for (std::size_t e = 0; e < num.size(); ++e)
            w[e][x] = mul_mod(num[e], inv_den, m);
    }
    return w;
}

void require_desk_scale(std::uint64_t points) {
    if (points > kExhaustiveLimit)
        throw CapExceededError("grid of q^r = " + std::to_string(points) +
                               " points exceeds the exhaustive limit of " +
                               std::to_string(kExhaustiveLimit));
}

} // namespace

ModularPoly interpolate(const TruthTable& table) {
    const RingModulus& ring = table.ring();
    const std::uint64_t q = ring.q();
    const std::uint64_t m = ring.modulus();
    const std::uint32_t r = ring.r();
    const std::uint64_t n = m; // grid size q^r coincides with the modulus
    require_desk_scale(n);

    const auto w = lagrange_basis_coeffs(q, m);
    std::vector<std::uint64_t> buf(table.values().begin(), table.values().end());
    std::vector<std::uint64_t> slice(q), transformed(q);

    // Apply the univariate inverse-Vandermonde transform along each variable
    // axis in turn. Axis 0 (the oldest variable) is the most significant
    // digit, so it starts with the largest stride.
    std::uint64_t stride = n / q;
    for (std::uint32_t axis = 0; axis < r; ++axis) {
        const std::uint64_t block = stride * q;
        for (std::uint64_t base = 0; base < n; base += block) {
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                for (std::uint64_t x = 0; x < q; ++x)
                    slice[x] = buf[base + lo + x * stride];
                for (std::uint64_t e = 0; e < q; ++e) {
                    std::uint64_t acc = 0;
                    for (std::uint64_t x = 0; x < q; ++x)
                        acc = add_mod(acc, mul_mod(w[e][x], slice[x], m), m);
                    transformed[e] = acc;
                }
                for (std::uint64_t e = 0; e < q; ++e)
                    buf[base + lo + e * stride] = transformed[e];
            }
        }
        stride /= q;
    }

    std::map<std::uint64_t, std::uint64_t> coeffs;
    for (std::uint64_t i = 0; i < n; ++i)
        if (buf[i] != 0)
            coeffs.emplace(i, buf[i]);
    return ModularPoly(ring, std::move(coeffs));
}

ModularPoly build_modular_form(const CharPoly& p) {
    const RingModulus ring(p.prime(), p.degree());
    const std::uint64_t q = ring.q();
    const std::uint64_t n = ring.modulus();
    const std::uint32_t r = ring.r();
    require_desk_scale(n);

    const BlockCoeffMatrix table = block_coeffs(p);
    std::vector<std::uint64_t> window(r, 0), values(n, 0);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        std::uint64_t rest = idx;
        for (std::uint32_t u = r; u-- > 0;) {
            window[u] = rest % q;
            rest /= q;
        }
        // Pack the r lookahead values: weight q^l on the form computing
        // s_{n+r+l}, so digit t of the result is the t-th new element.
        std::uint64_t packed = 0;
        std::uint64_t weight = 1;
        for (std::uint32_t l = 0; l < r; ++l) {
            const auto row = table.row(l);
            std::uint64_t f = 0;
            for (std::uint32_t j = 0; j < r; ++j)
                f = add_mod(f, mul_mod(row[j], window[j], q), q);
            packed += f * weight; // exact: the packed value stays below q^r
            weight *= q;
        }
        values[idx] = packed;
    }
    return interpolate(TruthTable(ring, std::move(values)));
}

std::uint64_t evaluate(const ModularPoly& poly, const LfsrState& state) {
    const RingModulus& ring = poly.ring();
    if (state.q() != ring.q() || state.size() != ring.r())
        throw DimensionMismatchError("state window does not match the polynomial ring");
    const std::uint64_t q = ring.q();
    const std::uint64_t m = ring.modulus();
    const std::uint32_t r = ring.r();
    const auto w = state.window();

    // powers[u*q + e] = S_u^e mod m for e in [0, q)
    std::vector<std::uint64_t> powers(std::size_t{r} * q);
    for (std::uint32_t u = 0; u < r; ++u) {
        powers[std::size_t{u} * q] = 1 % m;
        for (std::uint64_t e = 1; e < q; ++e)
            powers[std::size_t{u} * q + e] = mul_mod(powers[std::size_t{u} * q + e - 1], w[u], m);
    }

    std::uint64_t acc = 0;
    for (const Term& t : poly.terms()) {
        std::uint64_t mono = t.coeff;
        for (std::uint32_t u = 0; u < r; ++u) {
            const std::uint32_t e = t.exponents[u];
            if (e != 0)
                mono = mul_mod(mono, powers[std::size_t{u} * q + e], m);
        }
        acc = add_mod(acc, mono, m);
    }
    return acc;
}

std::uint64_t mask(const RingModulus& ring, std::uint64_t v, std::uint32_t t) {
    if (t >= ring.r())
        throw IndexOutOfRangeError("digit position " + std::to_string(t) + " out of range for r = " +
                                   std::to_string(ring.r()));
    if (v >= ring.modulus())
        throw InvalidParameterError("value " + std::to_string(v) + " out of range mod " +
                                    std::to_string(ring.modulus()));
    for (std::uint32_t i = 0; i < t; ++i)
        v /= ring.q();
    return v % ring.q();
}

} // namespace qprs
