#include "cvqkd/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace cvqkd {

namespace {

std::size_t chunk_count(std::size_t n) {
    return (n + rng_chunk - 1) / rng_chunk;
}

void fill_chunk(std::span<double> out, std::size_t lo, std::size_t hi, double stddev,
                std::uint64_t chunk_seed) {
    std::mt19937_64 engine(chunk_seed);
    std::normal_distribution<double> normal(0.0, stddev);
    for (std::size_t i = lo; i < hi; ++i) {
        out[i] = normal(engine);
    }
}

} // namespace

void fill_gaussian(std::span<double> out, double stddev, std::uint64_t seed) {
    if (out.empty()) {
        return;
    }
    if (stddev == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    const auto chunks = static_cast<std::int64_t>(chunk_count(out.size()));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * rng_chunk;
        const std::size_t hi = std::min(out.size(), lo + rng_chunk);
        fill_chunk(out, lo, hi, stddev, derive_seed(seed, static_cast<std::uint64_t>(c)));
    }
}

std::vector<double> gaussian_vector(std::size_t n, double stddev, std::uint64_t seed) {
    std::vector<double> out(n);
    fill_gaussian(out, stddev, seed);
    return out;
}

namespace reference {

void fill_gaussian(std::span<double> out, double stddev, std::uint64_t seed) {
    if (stddev == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    for (std::size_t lo = 0; lo < out.size(); lo += rng_chunk) {
        const std::size_t hi = std::min(out.size(), lo + rng_chunk);
        fill_chunk(out, lo, hi, stddev, derive_seed(seed, lo / rng_chunk));
    }
}

} // namespace reference

} // namespace cvqkd
