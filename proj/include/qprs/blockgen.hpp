#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qprs/arithpoly.hpp"
#include "qprs/lfsr.hpp"

namespace qprs {

enum class Backend {
    sequential, // one recurrence step per element
    matrix,     // r elements per block via the lookahead coefficient table
    polynomial, // r elements per block via one modular-polynomial evaluation
};

const char* to_string(Backend b) noexcept;
std::optional<Backend> backend_from_string(std::string_view name) noexcept;

// One generator block: the packed value and its q-ary digits. Digit t is the
// sequence element s_{n+r+t}, so the digit vector read left to right is the
// next stretch of the sequence and also the advanced window.
struct Block {
    std::uint64_t m_value;
    std::vector<std::uint64_t> digits;
};

struct GeneratorConfig {
    CharPoly poly;
    LfsrState seed;
    Backend backend = Backend::polynomial;
};

struct BlockStep {
    Block block;
    LfsrState state;
};

// Evaluates the polynomial once and unpacks the digits. The returned state
// equals the digit vector.
BlockStep next_block(const LfsrState& state, const ModularPoly& poly);

// Polynomial-backend stream with a prebuilt polynomial (the synthesis cost
// stays outside the loop; bench uses this to time the two separately).
std::vector<std::uint64_t> generate_blocks(const LfsrState& seed, const ModularPoly& poly,
                                           std::uint64_t count);

// First `count` sequence elements after the seed window. All backends emit
// the identical stream; block backends compute whole blocks and truncate the
// tail when r does not divide count.
std::vector<std::uint64_t> generate(const GeneratorConfig& cfg, std::uint64_t count);

// k configs for parallel deployment: stream j starts at jump(seed, j*stride).
// Concatenating stride elements from each stream in order reproduces the
// base sequence.
std::vector<GeneratorConfig> split_streams(const GeneratorConfig& cfg, std::uint64_t k,
                                           std::uint64_t stride);

struct BackendTiming {
    Backend backend;
    std::uint64_t elements;
    double seconds;
    double elements_per_second;
    std::uint64_t checksum; // FNV-1a over the emitted elements
};

struct BenchReport {
    double synthesis_seconds = 0.0; // one-time cost of building the polynomial
    bool checksums_equal = false;
    bool zero_seed = false; // degenerate all-zero seed, stream is constant
    std::vector<BackendTiming> rows;
};

// Times all three backends on the same stream and cross-checks their output
// for equality before reporting throughput.
BenchReport bench(const GeneratorConfig& cfg, std::uint64_t count);

} // namespace qprs
