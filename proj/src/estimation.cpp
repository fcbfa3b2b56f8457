#include "cvqkd/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cvqkd/rng.hpp"

namespace cvqkd {

namespace {

SampleMoments combine_in_order(const std::vector<SampleMoments>& partials) {
    SampleMoments total;
    for (const auto& p : partials) {
        total.saa += p.saa;
        total.sab += p.sab;
        total.sbb += p.sbb;
        total.n += p.n;
    }
    return total;
}

SampleMoments finalize(SampleMoments sums) {
    const auto n = static_cast<double>(sums.n);
    sums.saa /= n;
    sums.sab /= n;
    sums.sbb /= n;
    return sums;
}

// One chunk of the fused attacked-run kernel: regenerates Alice's draws and
// the noise draws for [lo, hi) and accumulates raw second-moment sums. The
// first `unattacked` samples of the run keep amplitude 1; the rest are
// scaled by the attack amplitude.
SampleMoments attacked_chunk(std::size_t lo, std::size_t hi, std::size_t unattacked,
                             double mod_sigma, double noise_sigma, double sqrt_t,
                             double attack_amplitude, std::uint64_t alice_seed,
                             std::uint64_t noise_seed, std::uint64_t chunk_index) {
    std::mt19937_64 alice_engine(derive_seed(alice_seed, chunk_index));
    std::mt19937_64 noise_engine(derive_seed(noise_seed, chunk_index));
    std::normal_distribution<double> modulation(0.0, mod_sigma);
    std::normal_distribution<double> noise(0.0, noise_sigma);

    SampleMoments part;
    for (std::size_t i = lo; i < hi; ++i) {
        const double xa = modulation(alice_engine);
        const double z = noise(noise_engine);
        const double amplitude = i < unattacked ? 1.0 : attack_amplitude;
        const double xb = amplitude * (sqrt_t * xa + z);
        part.saa += xa * xa;
        part.sab += xa * xb;
        part.sbb += xb * xb;
    }
    part.n = hi - lo;
    return part;
}

} // namespace

SampleMoments accumulate_moments(std::span<const double> x_a, std::span<const double> x_b) {
    if (x_a.size() != x_b.size()) {
        throw domain_error("quadrature sample lists differ in length");
    }
    if (x_a.empty()) {
        throw degenerate_data_error("cannot accumulate moments of an empty batch");
    }
    const auto chunks = static_cast<std::int64_t>((x_a.size() + rng_chunk - 1) / rng_chunk);
    std::vector<SampleMoments> partials(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * rng_chunk;
        const std::size_t hi = std::min(x_a.size(), lo + rng_chunk);
        SampleMoments part;
        for (std::size_t i = lo; i < hi; ++i) {
            part.saa += x_a[i] * x_a[i];
            part.sab += x_a[i] * x_b[i];
            part.sbb += x_b[i] * x_b[i];
        }
        part.n = hi - lo;
        partials[static_cast<std::size_t>(c)] = part;
    }
    return finalize(combine_in_order(partials));
}

ChannelEstimate estimate_from_moments(const SampleMoments& m, double modulation_variance) {
    if (m.n < 2) {
        throw degenerate_data_error("channel estimation needs at least two samples");
    }
    if (m.saa == 0.0) {
        throw degenerate_data_error("Alice's samples have zero second moment");
    }
    const double slope = m.sab / m.saa;
    const double t_hat = slope * slope;
    if (t_hat == 0.0) {
        throw degenerate_data_error("estimated transmittance is zero");
    }
    const double eps_hat = (m.sbb - 1.0 - t_hat * modulation_variance) / t_hat;
    return {t_hat, eps_hat, m.n};
}

ChannelEstimate estimate_channel(std::span<const double> x_a, std::span<const double> x_b,
                                 double modulation_variance) {
    return estimate_from_moments(accumulate_moments(x_a, x_b), modulation_variance);
}

AttackedEstimates attacked_estimates_paper(double transmittance, double excess_noise, double theta,
                                           double pmr, MalusConvention convention) {
    if (!(transmittance > 0.0)) {
        throw domain_error("transmittance must be positive");
    }
    if (!(pmr >= 0.0) || pmr > 1.0) {
        throw domain_error("polarization measurement ratio must be in [0, 1]");
    }
    const double atten = intensity_attenuation(theta, convention);
    const double amplitude = (1.0 - pmr) * std::sqrt(atten) + pmr;
    if (amplitude == 0.0) {
        throw degenerate_attack_error("combined amplitude vanished: estimates undefined");
    }
    const double a2 = amplitude * amplitude;
    return {a2 * transmittance,
            excess_noise - (1.0 / transmittance) * (1.0 / a2 - 1.0)};
}

AttackedEstimates attacked_estimates_pooled(double transmittance, double excess_noise, double theta,
                                            double pmr, double modulation_variance,
                                            MalusConvention convention) {
    if (!(transmittance > 0.0)) {
        throw domain_error("transmittance must be positive");
    }
    if (!(pmr >= 0.0) || pmr > 1.0) {
        throw domain_error("polarization measurement ratio must be in [0, 1]");
    }
    const double atten = intensity_attenuation(theta, convention);
    const double amplitude = (1.0 - pmr) * std::sqrt(atten) + pmr;
    if (amplitude == 0.0) {
        throw degenerate_attack_error("combined amplitude vanished: estimates undefined");
    }
    const double a2 = amplitude * amplitude;
    const double b = (1.0 - pmr) * atten + pmr;
    const double vb = transmittance * modulation_variance + 1.0 + transmittance * excess_noise;
    const double t_hat = a2 * transmittance;
    const double eps_hat = (b * vb - 1.0 - t_hat * modulation_variance) / t_hat;
    return {t_hat, eps_hat};
}

double pooled_excess_noise_gap(double transmittance, double excess_noise, double theta, double pmr,
                               double modulation_variance, MalusConvention convention) {
    const double atten = intensity_attenuation(theta, convention);
    const double amplitude = (1.0 - pmr) * std::sqrt(atten) + pmr;
    const double a2 = amplitude * amplitude;
    const double b = (1.0 - pmr) * atten + pmr;
    const double vb = transmittance * modulation_variance + 1.0 + transmittance * excess_noise;
    return (b - a2) * vb / (a2 * transmittance);
}

SampleMoments attacked_run_moments(const ProtocolParams& proto, const ChannelParams& ch,
                                   const AttackParams& attack, std::size_t n, std::uint64_t seed,
                                   MalusConvention convention) {
    proto.validate();
    ch.validate();
    attack.validate();
    if (n < 10'000) {
        throw domain_error("Monte Carlo runs need at least 10^4 samples");
    }

    const auto unattacked =
        static_cast<std::size_t>(std::ceil(attack.pmr * static_cast<double>(n)));
    const double mod_sigma = std::sqrt(proto.modulation_variance);
    const double noise_sigma = std::sqrt(1.0 + ch.transmittance * ch.excess_noise);
    const double sqrt_t = std::sqrt(ch.transmittance);
    const double amplitude =
        std::sqrt(intensity_attenuation(attack.orientation_angle, convention));
    const std::uint64_t alice_seed = derive_seed(seed, stream_alice);
    const std::uint64_t noise_seed = derive_seed(seed, stream_noise);

    const auto chunks = static_cast<std::int64_t>((n + rng_chunk - 1) / rng_chunk);
    std::vector<SampleMoments> partials(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * rng_chunk;
        const std::size_t hi = std::min(n, lo + rng_chunk);
        partials[static_cast<std::size_t>(c)] =
            attacked_chunk(lo, hi, unattacked, mod_sigma, noise_sigma, sqrt_t, amplitude,
                           alice_seed, noise_seed, static_cast<std::uint64_t>(c));
    }
    return finalize(combine_in_order(partials));
}

ChannelEstimate monte_carlo_attacked_run(const ProtocolParams& proto, const ChannelParams& ch,
                                         const AttackParams& attack, std::size_t n,
                                         std::uint64_t seed, MalusConvention convention) {
    return estimate_from_moments(attacked_run_moments(proto, ch, attack, n, seed, convention),
                                 proto.modulation_variance);
}

namespace reference {

SampleMoments accumulate_moments(std::span<const double> x_a, std::span<const double> x_b) {
    if (x_a.size() != x_b.size()) {
        throw domain_error("quadrature sample lists differ in length");
    }
    if (x_a.empty()) {
        throw degenerate_data_error("cannot accumulate moments of an empty batch");
    }
    std::vector<SampleMoments> partials;
    for (std::size_t lo = 0; lo < x_a.size(); lo += rng_chunk) {
        const std::size_t hi = std::min(x_a.size(), lo + rng_chunk);
        SampleMoments part;
        for (std::size_t i = lo; i < hi; ++i) {
            part.saa += x_a[i] * x_a[i];
            part.sab += x_a[i] * x_b[i];
            part.sbb += x_b[i] * x_b[i];
        }
        part.n = hi - lo;
        partials.push_back(part);
    }
    return finalize(combine_in_order(partials));
}

SampleMoments attacked_run_moments(const ProtocolParams& proto, const ChannelParams& ch,
                                   const AttackParams& attack, std::size_t n, std::uint64_t seed,
                                   MalusConvention convention) {
    proto.validate();
    ch.validate();
    attack.validate();
    if (n < 10'000) {
        throw domain_error("Monte Carlo runs need at least 10^4 samples");
    }

    const auto unattacked =
        static_cast<std::size_t>(std::ceil(attack.pmr * static_cast<double>(n)));
    const double mod_sigma = std::sqrt(proto.modulation_variance);
    const double noise_sigma = std::sqrt(1.0 + ch.transmittance * ch.excess_noise);
    const double sqrt_t = std::sqrt(ch.transmittance);
    const double amplitude =
        std::sqrt(intensity_attenuation(attack.orientation_angle, convention));
    const std::uint64_t alice_seed = derive_seed(seed, stream_alice);
    const std::uint64_t noise_seed = derive_seed(seed, stream_noise);

    std::vector<SampleMoments> partials;
    for (std::size_t lo = 0; lo < n; lo += rng_chunk) {
        const std::size_t hi = std::min(n, lo + rng_chunk);
        partials.push_back(attacked_chunk(lo, hi, unattacked, mod_sigma, noise_sigma, sqrt_t,
                                          amplitude, alice_seed, noise_seed, lo / rng_chunk));
    }
    return finalize(combine_in_order(partials));
}

} // namespace reference

} // namespace cvqkd
