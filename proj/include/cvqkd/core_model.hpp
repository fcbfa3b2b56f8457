#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvqkd/errors.hpp"

namespace cvqkd {

struct ProtocolParams {
    double modulation_variance = 19.0;    // V_A, shot-noise units
    double reconciliation_efficiency = 0.95;

    void validate() const;
};

struct ChannelParams {
    double transmittance = 1.0;
    double excess_noise = 0.0;            // shot-noise units, referred to input

    void validate() const;
};

struct DistanceModel {
    double loss_db_per_km = 0.2;

    void validate() const;
};

// Paired quadrature samples in shot-noise units plus the calibration that
// normalized them.
struct QuadratureBatch {
    std::vector<double> x_a;
    std::vector<double> x_b;
    double calibrated_snu = 1.0;
    std::uint64_t master_seed = 0;

    void validate() const;
};

double distance_to_transmittance(double distance_km, const DistanceModel& model);

// n i.i.d. draws from N(0, V_A); bit-deterministic for a fixed seed.
std::vector<double> generate_alice_samples(std::size_t n, const ProtocolParams& params,
                                           std::uint64_t seed);

// x_b = amplitude * (sqrt(T) * x_a + z), z ~ N(0, 1 + T*eps). The homodyne
// output is scaled by `amplitude` relative to the calibration used to
// normalize it; 1 means calibration and output agree.
std::vector<double> scaled_channel_samples(std::span<const double> x_a, const ChannelParams& ch,
                                           double amplitude, std::uint64_t seed);

// Normalized homodyne results without any attack.
std::vector<double> simulate_round(std::span<const double> x_a, const ChannelParams& ch,
                                   std::uint64_t seed);

QuadratureBatch make_quadrature_batch(const ProtocolParams& proto, const ChannelParams& ch,
                                      std::size_t n, std::uint64_t seed);

namespace reference {
std::vector<double> scaled_channel_samples(std::span<const double> x_a, const ChannelParams& ch,
                                           double amplitude, std::uint64_t seed);
} // namespace reference

} // namespace cvqkd
