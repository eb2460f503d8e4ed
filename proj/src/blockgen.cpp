#include "qprs/blockgen.hpp"

#include <chrono>
#include <string>

#include "qprs/linearize.hpp"

namespace qprs {

const char* to_string(Backend b) noexcept {
    switch (b) {
    case Backend::sequential:
        return "sequential";
    case Backend::matrix:
        return "matrix";
    case Backend::polynomial:
        return "polynomial";
    }
    return "unknown";
}

std::optional<Backend> backend_from_string(std::string_view name) noexcept {
    if (name == "sequential")
        return Backend::sequential;
    if (name == "matrix")
        return Backend::matrix;
    if (name == "polynomial")
        return Backend::polynomial;
    return std::nullopt;
}

BlockStep next_block(const LfsrState& state, const ModularPoly& poly) {
    const std::uint64_t value = evaluate(poly, state);
    const RingModulus& ring = poly.ring();
    std::vector<std::uint64_t> digits(ring.r());
    std::uint64_t rest = value;
    for (std::uint32_t t = 0; t < ring.r(); ++t) {
        digits[t] = rest % ring.q();
        rest /= ring.q();
    }
    LfsrState next(ring.prime(), digits);
    return {Block{value, std::move(digits)}, std::move(next)};
}

std::vector<std::uint64_t> generate_blocks(const LfsrState& seed, const ModularPoly& poly,
                                           std::uint64_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    LfsrState state = seed;
    while (out.size() < count) {
        BlockStep step = next_block(state, poly);
        for (const auto d : step.block.digits) {
            if (out.size() == count)
                break;
            out.push_back(d);
        }
        state = std::move(step.state);
    }
    return out;
}

std::vector<std::uint64_t> generate(const GeneratorConfig& cfg, std::uint64_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    switch (cfg.backend) {
    case Backend::sequential: {
        LfsrState state = cfg.seed;
        for (std::uint64_t i = 0; i < count; ++i) {
            Step step = lfsr_next(state, cfg.poly);
            out.push_back(step.element);
            state = std::move(step.state);
        }
        break;
    }
    case Backend::matrix: {
        const BlockCoeffMatrix table = block_coeffs(cfg.poly);
        if (cfg.seed.q() != table.q() || cfg.seed.size() != table.size())
            throw DimensionMismatchError("seed window does not match the lookahead table");
        LfsrState state = cfg.seed;
        while (out.size() < count) {
            state = block_step(state, table);
            for (const auto e : state.window()) {
                if (out.size() == count)
                    break;
                out.push_back(e);
            }
        }
        break;
    }
    case Backend::polynomial:
        return generate_blocks(cfg.seed, build_modular_form(cfg.poly), count);
    }
    return out;
}

std::vector<GeneratorConfig> split_streams(const GeneratorConfig& cfg, std::uint64_t k,
                                           std::uint64_t stride) {
    if (k < 1)
        throw InvalidParameterError("stream count must be at least 1");
    if (stride < 1)
        throw InvalidParameterError("stream stride must be at least 1");
    if (k > 1 && (k - 1) > UINT64_MAX / stride)
        throw OverflowError("stream offsets overflow a 64-bit counter");
    std::vector<GeneratorConfig> streams;
    streams.reserve(k);
    for (std::uint64_t j = 0; j < k; ++j)
        streams.push_back({cfg.poly, jump(cfg.seed, cfg.poly, j * stride), cfg.backend});
    return streams;
}

namespace {

std::uint64_t fnv1a(std::span<const std::uint64_t> data) {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto v : data)
        for (std::uint32_t byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xff;
            h *= 1099511628211ull;
        }
    return h;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

BenchReport bench(const GeneratorConfig& cfg, std::uint64_t count) {
    BenchReport report;
    report.zero_seed = cfg.seed.is_zero();

    auto start = std::chrono::steady_clock::now();
    const ModularPoly poly = build_modular_form(cfg.poly);
    report.synthesis_seconds = seconds_since(start);

    std::vector<std::vector<std::uint64_t>> streams;
    for (const Backend b : {Backend::sequential, Backend::matrix, Backend::polynomial}) {
        start = std::chrono::steady_clock::now();
        std::vector<std::uint64_t> out =
            b == Backend::polynomial ? generate_blocks(cfg.seed, poly, count)
                                     : generate({cfg.poly, cfg.seed, b}, count);
        const double elapsed = seconds_since(start);
        report.rows.push_back({b, count, elapsed, elapsed > 0 ? count / elapsed : 0.0, fnv1a(out)});
        streams.push_back(std::move(out));
    }

    report.checksums_equal = streams[0] == streams[1] && streams[0] == streams[2];
    return report;
}

} // namespace qprs
