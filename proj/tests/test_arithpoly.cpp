#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qprs/arithpoly.hpp"
#include "qprs/linearize.hpp"

using namespace qprs;

namespace {

CharPoly random_poly(std::mt19937_64& rng, std::uint64_t q, std::uint32_t r) {
    std::vector<std::uint64_t> coeffs(r);
    coeffs[0] = 1 + rng() % (q - 1);
    for (std::uint32_t j = 1; j < r; ++j)
        coeffs[j] = rng() % q;
    return CharPoly(PrimeModulus(q), std::move(coeffs));
}

std::vector<std::uint64_t> window_of(std::uint64_t index, std::uint64_t q, std::uint32_t r) {
    std::vector<std::uint64_t> w(r);
    for (std::uint32_t u = r; u-- > 0;) {
        w[u] = index % q;
        index /= q;
    }
    return w;
}

// Oracle evaluation: plain nested loops, no power tables.
std::uint64_t evaluate_terms(const ModularPoly& poly, const std::vector<std::uint64_t>& point) {
    const std::uint64_t m = poly.ring().modulus();
    std::uint64_t acc = 0;
    for (const Term& t : poly.terms()) {
        std::uint64_t prod = t.coeff;
        for (std::size_t u = 0; u < point.size(); ++u)
            for (std::uint32_t e = 0; e < t.exponents[u]; ++e)
                prod = mul_mod(prod, point[u], m);
        acc = add_mod(acc, prod, m);
    }
    return acc;
}

} // namespace

TEST_CASE("index packing round-trips and orders oldest-first") {
    const std::uint64_t q = 3;
    const std::uint32_t r = 3;
    // (d_0, d_1, d_2) -> 9 d_0 + 3 d_1 + d_2
    CHECK(tuple_to_index(std::vector<std::uint64_t>{0, 1, 2}, q) == 5);
    CHECK(tuple_to_index(std::vector<std::uint64_t>{2, 0, 0}, q) == 18);
    for (std::uint64_t i = 0; i < 27; ++i) {
        const auto exps = exponents_of(i, q, r);
        REQUIRE(exps.size() == r);
        std::vector<std::uint64_t> wide(exps.begin(), exps.end());
        CHECK(tuple_to_index(wide, q) == i);
    }
    CHECK_THROWS_AS(exponents_of(27, q, r), IndexOutOfRangeError);
    CHECK_THROWS_AS(tuple_to_index(std::vector<std::uint64_t>{0, 3, 0}, q),
                    InvalidParameterError);
}

TEST_CASE("state_to_index matches manual packing") {
    const LfsrState s(PrimeModulus(3), {0, 1, 2});
    CHECK(state_to_index(s) == 5);
    const LfsrState t(PrimeModulus(5), {4, 0, 3});
    CHECK(state_to_index(t) == 4 * 25 + 0 * 5 + 3);
}

TEST_CASE("TruthTable validates length and range") {
    const RingModulus ring(PrimeModulus(3), 2);
    CHECK_NOTHROW(TruthTable(ring, std::vector<std::uint64_t>(9, 0)));
    CHECK_THROWS_AS(TruthTable(ring, std::vector<std::uint64_t>(8, 0)), LengthMismatchError);
    std::vector<std::uint64_t> bad(9, 0);
    bad[4] = 9; // = q^r, out of range
    CHECK_THROWS_AS(TruthTable(ring, bad), InvalidParameterError);
}

TEST_CASE("ModularPoly canonicalizes and drops zero coefficients") {
    const RingModulus ring(PrimeModulus(3), 3);
    const ModularPoly poly(ring, {{1, 20}, {2, 27}, {5, 30}});
    CHECK(poly.term_count() == 2); // index 2 had coefficient 27 = 0 (mod 27)
    CHECK(poly.coeff(1) == 20);
    CHECK(poly.coeff(2) == 0);
    CHECK(poly.coeff(5) == 3);
    CHECK(poly.terms()[1].exponents == std::vector<std::uint32_t>{0, 1, 2});
    CHECK_THROWS_AS(ModularPoly(ring, {{27, 1}}), IndexOutOfRangeError);
}

TEST_CASE("interpolation reproduces random truth tables exactly") {
    std::mt19937_64 rng(0x5eed0301);
    for (const auto& [q, r] : {std::pair<std::uint64_t, std::uint32_t>{2, 2},
                              {2, 4},
                              {3, 2},
                              {3, 3},
                              {5, 2},
                              {7, 2}}) {
        const RingModulus ring(PrimeModulus(q), r);
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<std::uint64_t> values(ring.modulus());
            for (auto& v : values)
                v = rng() % ring.modulus();
            const ModularPoly poly = interpolate(TruthTable(ring, values));
            for (std::uint64_t i = 0; i < ring.modulus(); ++i) {
                const LfsrState point(ring.prime(), window_of(i, q, r));
                REQUIRE(evaluate(poly, point) == values[i]);
            }
        }
    }
}

TEST_CASE("interpolation of a delta function gives a genuine polynomial identity") {
    // The table that is 1 at (1, 2) and 0 elsewhere over Z_9 interpolates to
    // a polynomial; check it again at every node via the term-by-term oracle.
    const RingModulus ring(PrimeModulus(3), 2);
    std::vector<std::uint64_t> values(9, 0);
    values[1 * 3 + 2] = 1;
    const ModularPoly poly = interpolate(TruthTable(ring, values));
    for (std::uint64_t i = 0; i < 9; ++i) {
        const auto point = window_of(i, 3, 2);
        CHECK(evaluate_terms(poly, point) == values[i]);
        CHECK(evaluate(poly, LfsrState(ring.prime(), point)) == values[i]);
    }
}

TEST_CASE("fast evaluation agrees with the term-by-term oracle") {
    std::mt19937_64 rng(0x5eed0302);
    const RingModulus ring(PrimeModulus(5), 3);
    for (int rep = 0; rep < 20; ++rep) {
        std::map<std::uint64_t, std::uint64_t> coeffs;
        for (int t = 0; t < 12; ++t)
            coeffs[rng() % ring.modulus()] = rng() % ring.modulus();
        const ModularPoly poly(ring, coeffs);
        for (int pt = 0; pt < 10; ++pt) {
            const auto point = window_of(rng() % ring.modulus(), 5, 3);
            CHECK(evaluate(poly, LfsrState(ring.prime(), point)) ==
                  evaluate_terms(poly, point));
        }
    }
}

TEST_CASE("ternary cubic modular form has exactly the documented 16 terms") {
    const ModularPoly m = build_modular_form(CharPoly(PrimeModulus(3), {1, 0, 2}));
    const std::map<std::uint64_t, std::uint64_t> expect = {
        {1, 20}, {2, 12},  {3, 21},  {4, 9},  {5, 9},   {7, 9},  {9, 7},   {10, 15},
        {11, 3}, {12, 18}, {13, 9},  {15, 18}, {18, 9},  {19, 6}, {20, 18}, {21, 9}};
    REQUIRE(m.term_count() == expect.size());
    for (const auto& [index, coeff] : expect)
        CHECK(m.coeff(index) == coeff);
    // And nothing else is nonzero.
    for (std::uint64_t i = 0; i < 27; ++i)
        if (!expect.count(i))
            CHECK(m.coeff(i) == 0);
}

TEST_CASE("modular form digits equal the next r sequence elements everywhere") {
    std::mt19937_64 rng(0x5eed0303);
    for (const auto& [q, r] : {std::pair<std::uint64_t, std::uint32_t>{2, 3},
                              {3, 2},
                              {3, 3},
                              {5, 2}}) {
        for (int rep = 0; rep < 5; ++rep) {
            const CharPoly p = random_poly(rng, q, r);
            const RingModulus ring(p.prime(), r);
            const ModularPoly m = build_modular_form(p);
            for (std::uint64_t i = 0; i < ring.modulus(); ++i) {
                const LfsrState state(p.prime(), window_of(i, q, r));
                std::uint64_t value = evaluate(m, state);
                LfsrState walk = state;
                for (std::uint32_t t = 0; t < r; ++t) {
                    const Step step = lfsr_next(walk, p);
                    REQUIRE(mask(ring, evaluate(m, state), t) == step.element);
                    REQUIRE(value % q == step.element);
                    value /= q;
                    walk = step.state;
                }
            }
        }
    }
}

TEST_CASE("mask extracts q-ary digits") {
    const RingModulus ring(PrimeModulus(3), 3);
    CHECK(mask(ring, 19, 0) == 1);
    CHECK(mask(ring, 19, 1) == 0);
    CHECK(mask(ring, 19, 2) == 2);
    for (std::uint64_t v = 0; v < 27; ++v) {
        std::uint64_t rebuilt = 0, scale = 1;
        for (std::uint32_t t = 0; t < 3; ++t) {
            rebuilt += mask(ring, v, t) * scale;
            scale *= 3;
        }
        CHECK(rebuilt == v);
    }
    CHECK_THROWS_AS(mask(ring, 5, 3), IndexOutOfRangeError);
    CHECK_THROWS_AS(mask(ring, 27, 0), InvalidParameterError);
}

TEST_CASE("desk-scale cap refuses oversized grids") {
    // 5^10 grid points exceed the exhaustive-sweep limit.
    CHECK_THROWS_AS(build_modular_form(CharPoly(PrimeModulus(5), {1, 0, 0, 0, 0, 0, 0, 0, 0, 0})),
                    CapExceededError);
}
