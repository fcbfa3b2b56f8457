#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cvqkd {

// Samples are generated in fixed-size chunks, each chunk from its own
// counter-derived engine. Results are therefore bit-identical no matter how
// many threads process the chunks.
inline constexpr std::size_t rng_chunk = 8192;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent sub-seed for a named stream of a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0xd1b54a32d192ed03ULL));
}

// Stream tags of a simulation batch: Alice's modulation draws and the
// channel noise draws come from independent sub-streams of one master seed.
inline constexpr std::uint64_t stream_alice = 0;
inline constexpr std::uint64_t stream_noise = 1;

// Mean-zero Gaussian fill, OpenMP over chunks.
void fill_gaussian(std::span<double> out, double stddev, std::uint64_t seed);

std::vector<double> gaussian_vector(std::size_t n, double stddev, std::uint64_t seed);

namespace reference {
// Plain sequential implementation with the same chunk contract.
void fill_gaussian(std::span<double> out, double stddev, std::uint64_t seed);
} // namespace reference

} // namespace cvqkd
