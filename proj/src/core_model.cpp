#include "cvqkd/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cvqkd/rng.hpp"

namespace cvqkd {

void ProtocolParams::validate() const {
    if (!(modulation_variance > 0.0)) {
        throw domain_error("modulation variance must be positive");
    }
    if (!(reconciliation_efficiency > 0.0) || reconciliation_efficiency > 1.0) {
        throw domain_error("reconciliation efficiency must be in (0, 1]");
    }
}

void ChannelParams::validate() const {
    if (!(transmittance > 0.0) || transmittance > 1.0) {
        throw domain_error("transmittance must be in (0, 1]");
    }
    if (excess_noise < 0.0) {
        throw domain_error("excess noise must be nonnegative");
    }
}

void DistanceModel::validate() const {
    if (!(loss_db_per_km > 0.0)) {
        throw domain_error("loss coefficient must be positive");
    }
}

void QuadratureBatch::validate() const {
    if (x_a.size() != x_b.size()) {
        throw domain_error("quadrature batch sides differ in length");
    }
    if (!(calibrated_snu > 0.0)) {
        throw domain_error("calibrated SNU must be positive");
    }
}

double distance_to_transmittance(double distance_km, const DistanceModel& model) {
    model.validate();
    if (distance_km < 0.0) {
        throw domain_error("distance must be nonnegative");
    }
    return std::pow(10.0, -model.loss_db_per_km * distance_km / 10.0);
}

std::vector<double> generate_alice_samples(std::size_t n, const ProtocolParams& params,
                                           std::uint64_t seed) {
    params.validate();
    if (n == 0) {
        throw empty_batch_error("cannot generate an empty modulation batch");
    }
    return gaussian_vector(n, std::sqrt(params.modulation_variance), derive_seed(seed, stream_alice));
}

std::vector<double> scaled_channel_samples(std::span<const double> x_a, const ChannelParams& ch,
                                           double amplitude, std::uint64_t seed) {
    ch.validate();
    const double sqrt_t = std::sqrt(ch.transmittance);
    const double noise_sigma = std::sqrt(1.0 + ch.transmittance * ch.excess_noise);
    const std::uint64_t noise_seed = derive_seed(seed, stream_noise);

    std::vector<double> x_b(x_a.size());
    const auto chunks = static_cast<std::int64_t>((x_a.size() + rng_chunk - 1) / rng_chunk);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * rng_chunk;
        const std::size_t hi = std::min(x_a.size(), lo + rng_chunk);
        std::mt19937_64 engine(derive_seed(noise_seed, static_cast<std::uint64_t>(c)));
        std::normal_distribution<double> normal(0.0, noise_sigma);
        for (std::size_t i = lo; i < hi; ++i) {
            x_b[i] = amplitude * (sqrt_t * x_a[i] + normal(engine));
        }
    }
    return x_b;
}

std::vector<double> simulate_round(std::span<const double> x_a, const ChannelParams& ch,
                                   std::uint64_t seed) {
    return scaled_channel_samples(x_a, ch, 1.0, seed);
}

QuadratureBatch make_quadrature_batch(const ProtocolParams& proto, const ChannelParams& ch,
                                      std::size_t n, std::uint64_t seed) {
    QuadratureBatch batch;
    batch.x_a = generate_alice_samples(n, proto, seed);
    batch.x_b = simulate_round(batch.x_a, ch, seed);
    batch.calibrated_snu = 1.0;
    batch.master_seed = seed;
    return batch;
}

namespace reference {

std::vector<double> scaled_channel_samples(std::span<const double> x_a, const ChannelParams& ch,
                                           double amplitude, std::uint64_t seed) {
    ch.validate();
    const double sqrt_t = std::sqrt(ch.transmittance);
    const double noise_sigma = std::sqrt(1.0 + ch.transmittance * ch.excess_noise);
    const std::uint64_t noise_seed = derive_seed(seed, stream_noise);

    std::vector<double> x_b(x_a.size());
    for (std::size_t lo = 0; lo < x_a.size(); lo += rng_chunk) {
        const std::size_t hi = std::min(x_a.size(), lo + rng_chunk);
        std::mt19937_64 engine(derive_seed(noise_seed, lo / rng_chunk));
        std::normal_distribution<double> normal(0.0, noise_sigma);
        for (std::size_t i = lo; i < hi; ++i) {
            x_b[i] = amplitude * (sqrt_t * x_a[i] + normal(engine));
        }
    }
    return x_b;
}

} // namespace reference

} // namespace cvqkd
