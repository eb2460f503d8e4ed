#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qprs/lfsr.hpp"

using namespace qprs;

namespace {

// Independent oracle: the recurrence written as a plain indexed loop over a
// growing vector, no window shuffling.
std::vector<std::uint64_t> naive_sequence(std::uint64_t q, const std::vector<std::uint64_t>& p,
                                          const std::vector<std::uint64_t>& seed,
                                          std::size_t total) {
    std::vector<std::uint64_t> s(seed);
    const std::size_t r = p.size();
    while (s.size() < total) {
        std::uint64_t acc = 0;
        const std::size_t n = s.size() - r;
        for (std::size_t j = 0; j < r; ++j)
            acc = (acc + p[j] * s[n + j]) % q;
        s.push_back(acc);
    }
    return s;
}

CharPoly random_poly(std::mt19937_64& rng, std::uint64_t q, std::uint32_t r) {
    std::vector<std::uint64_t> coeffs(r);
    coeffs[0] = 1 + rng() % (q - 1); // p_0 must be a unit
    for (std::uint32_t j = 1; j < r; ++j)
        coeffs[j] = rng() % q;
    return CharPoly(PrimeModulus(q), std::move(coeffs));
}

LfsrState random_state(std::mt19937_64& rng, std::uint64_t q, std::uint32_t r) {
    std::vector<std::uint64_t> window(r);
    for (auto& v : window)
        v = rng() % q;
    return LfsrState(PrimeModulus(q), std::move(window));
}

} // namespace

TEST_CASE("CharPoly validates its coefficients") {
    const PrimeModulus q(3);
    CHECK_NOTHROW(CharPoly(q, {1, 0, 2}));
    CHECK_THROWS_AS(CharPoly(q, {}), InvalidParameterError);
    CHECK_THROWS_AS(CharPoly(q, {0, 1, 2}), InvalidParameterError); // p_0 = 0
    CHECK_THROWS_AS(CharPoly(q, {1, 3, 2}), InvalidParameterError); // 3 >= q
}

TEST_CASE("LfsrState validates its window") {
    const PrimeModulus q(3);
    CHECK_NOTHROW(LfsrState(q, {0, 1, 2}));
    CHECK_THROWS_AS(LfsrState(q, {}), InvalidParameterError);
    CHECK_THROWS_AS(LfsrState(q, {0, 3}), InvalidParameterError);
    CHECK(LfsrState(q, {0, 0, 0}).is_zero());
    CHECK_FALSE(LfsrState(q, {0, 1, 0}).is_zero());
}

TEST_CASE("ternary cubic reproduces its documented stream") {
    // s_{n+3} = 2 s_{n+2} + s_n (mod 3) from (0, 1, 2):
    // 0 1 2 1 0 2 2 1 1 1 0 1 0, then the window returns to (0, 1, 2).
    const CharPoly p(PrimeModulus(3), {1, 0, 2});
    LfsrState state(PrimeModulus(3), {0, 1, 2});
    const std::vector<std::uint64_t> expect = {1, 0, 2, 2, 1, 1, 1, 0, 1, 0, 0, 1, 2};
    for (std::size_t i = 0; i < expect.size(); ++i) {
        const Step step = lfsr_next(state, p);
        CHECK(step.element == expect[i]);
        state = step.state;
    }
    CHECK(state == LfsrState(PrimeModulus(3), {0, 1, 2})); // period 13
}

TEST_CASE("lfsr_next matches the naive recurrence") {
    std::mt19937_64 rng(0x5eed0101);
    for (const auto& [q, r] : {std::pair<std::uint64_t, std::uint32_t>{2, 5},
                              {3, 4},
                              {5, 3},
                              {7, 2},
                              {11, 3},
                              {97, 4}}) {
        for (int rep = 0; rep < 10; ++rep) {
            const CharPoly p = random_poly(rng, q, r);
            const LfsrState seed = random_state(rng, q, r);
            const std::vector<std::uint64_t> seed_vec(seed.window().begin(), seed.window().end());
            const std::vector<std::uint64_t> coeffs(p.coeffs().begin(), p.coeffs().end());
            const auto oracle = naive_sequence(q, coeffs, seed_vec, r + 60);

            LfsrState state = seed;
            for (std::size_t n = 0; n < 60; ++n) {
                const Step step = lfsr_next(state, p);
                REQUIRE(step.element == oracle[r + n]);
                state = step.state;
            }
        }
    }
}

TEST_CASE("lfsr_next rejects mismatched shapes") {
    const CharPoly p(PrimeModulus(3), {1, 0, 2});
    CHECK_THROWS_AS(lfsr_next(LfsrState(PrimeModulus(3), {1, 2}), p), DimensionMismatchError);
    CHECK_THROWS_AS(lfsr_next(LfsrState(PrimeModulus(5), {1, 2, 3}), p), DimensionMismatchError);
}

TEST_CASE("applying the companion matrix is one recurrence step") {
    std::mt19937_64 rng(0x5eed0102);
    for (int rep = 0; rep < 40; ++rep) {
        const std::uint64_t q = std::vector<std::uint64_t>{2, 3, 5, 7, 13}[rng() % 5];
        const std::uint32_t r = 2 + rng() % 4;
        const CharPoly p = random_poly(rng, q, r);
        const LfsrState state = random_state(rng, q, r);
        CHECK(apply(companion(p), state) == lfsr_next(state, p).state);
    }
}

TEST_CASE("companion matrix powers compose") {
    const CharPoly p(PrimeModulus(5), {2, 0, 3, 1});
    const ModMatrix m = companion(p);
    CHECK(m.pow(0) == ModMatrix::identity(5, 4));
    CHECK(m.pow(1) == m);
    CHECK(m.pow(7) * m.pow(12) == m.pow(19));
    CHECK(m.pow(3).pow(5) == m.pow(15));
}

TEST_CASE("jump equals n sequential steps") {
    std::mt19937_64 rng(0x5eed0103);
    for (const auto& [q, r] : {std::pair<std::uint64_t, std::uint32_t>{2, 4},
                              {3, 3},
                              {5, 2},
                              {7, 3}}) {
        const CharPoly p = random_poly(rng, q, r);
        const LfsrState seed = random_state(rng, q, r);
        LfsrState walked = seed;
        for (std::uint64_t n = 0; n <= 200; ++n) {
            REQUIRE(jump(seed, p, n) == walked);
            walked = lfsr_next(walked, p).state;
        }
    }
}

TEST_CASE("jump handles large step counts") {
    const CharPoly p(PrimeModulus(3), {1, 0, 2});
    const LfsrState seed(PrimeModulus(3), {0, 1, 2});
    // The orbit of this seed has length 13, so jumps reduce mod 13.
    const std::uint64_t huge = 13ULL * 1000000007ULL + 5;
    CHECK(jump(seed, p, huge) == jump(seed, p, 5));
    CHECK(jump(seed, p, 13ULL * 987654321ULL) == seed);
}

TEST_CASE("the zero state is a fixed point") {
    const CharPoly p(PrimeModulus(5), {3, 1});
    const LfsrState zero(PrimeModulus(5), {0, 0});
    CHECK(lfsr_next(zero, p).element == 0);
    CHECK(lfsr_next(zero, p).state == zero);
    CHECK(jump(zero, p, 1000) == zero);
}
