#pragma once

#include <cstdint>
#include <span>

#include "cvqkd/attack.hpp"
#include "cvqkd/core_model.hpp"

namespace cvqkd {

struct ChannelEstimate {
    double t_hat = 0.0;
    double eps_hat = 0.0;
    std::size_t n_samples = 0;
};

// Raw second moments <x_a^2>, <x_a x_b>, <x_b^2> (sample means).
struct SampleMoments {
    double saa = 0.0;
    double sab = 0.0;
    double sbb = 0.0;
    std::size_t n = 0;
};

// Chunk-parallel accumulation with a fixed-order combine, so the sums are
// bit-identical for any thread count.
SampleMoments accumulate_moments(std::span<const double> x_a, std::span<const double> x_b);

ChannelEstimate estimate_from_moments(const SampleMoments& m, double modulation_variance);

// T_hat = (<x_a x_b>/<x_a^2>)^2, eps_hat = (<x_b^2> - 1 - T_hat V_A)/T_hat.
ChannelEstimate estimate_channel(std::span<const double> x_a, std::span<const double> x_b,
                                 double modulation_variance);

// Closed form of the estimates when the per-sample measurement results are
// combined as (1-k) * attacked + k * unattacked, with A = (1-k)sqrt(c) + k.
AttackedEstimates attacked_estimates_paper(double transmittance, double excess_noise, double theta,
                                           double pmr,
                                           MalusConvention convention = MalusConvention::cosine);

// Closed form for pooling disjoint attacked/unattacked sample sets, the
// situation a physical run produces. First moments agree with the combined
// form; the second moment picks up B = (1-k)c + k instead of A^2.
AttackedEstimates attacked_estimates_pooled(double transmittance, double excess_noise, double theta,
                                            double pmr, double modulation_variance,
                                            MalusConvention convention = MalusConvention::cosine);

// eps gap between the pooled and combined closed forms,
// (B - A^2)(T V_A + 1 + T eps)/(A^2 T) with B - A^2 = k(1-k)(1-sqrt(c))^2.
double pooled_excess_noise_gap(double transmittance, double excess_noise, double theta, double pmr,
                               double modulation_variance,
                               MalusConvention convention = MalusConvention::cosine);

// Streaming moments of a simulated attacked run: ceil(pmr*n) unattacked
// samples (reference pulses) and n - ceil(pmr*n) attacked ones, pooled.
// Nothing is materialized, so n may be large.
SampleMoments attacked_run_moments(const ProtocolParams& proto, const ChannelParams& ch,
                                   const AttackParams& attack, std::size_t n, std::uint64_t seed,
                                   MalusConvention convention = MalusConvention::cosine);

// Monte Carlo run pooled through estimate_channel; expectation matches
// attacked_estimates_pooled.
ChannelEstimate monte_carlo_attacked_run(const ProtocolParams& proto, const ChannelParams& ch,
                                         const AttackParams& attack, std::size_t n,
                                         std::uint64_t seed,
                                         MalusConvention convention = MalusConvention::cosine);

namespace reference {
SampleMoments accumulate_moments(std::span<const double> x_a, std::span<const double> x_b);
SampleMoments attacked_run_moments(const ProtocolParams& proto, const ChannelParams& ch,
                                   const AttackParams& attack, std::size_t n, std::uint64_t seed,
                                   MalusConvention convention = MalusConvention::cosine);
} // namespace reference

} // namespace cvqkd
