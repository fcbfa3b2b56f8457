#include "cvqkd/attack.hpp"

#include <cmath>
#include <numbers>

namespace cvqkd {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

void check_angle(double theta) {
    if (!(theta >= 0.0) || theta > half_pi) {
        throw domain_error("orientation angle must lie in [0, pi/2]");
    }
}

} // namespace

void ShotNoiseModel::validate() const {
    if (!(pbs_loss > 0.0) || !(detector_gain > 0.0) || !(lo_intensity > 0.0) ||
        !(vacuum_variance > 0.0)) {
        throw domain_error("shot-noise model fields must be positive");
    }
}

void AttackParams::validate() const {
    check_angle(orientation_angle);
    if (!(pmr >= 0.0) || pmr > 1.0) {
        throw domain_error("polarization measurement ratio must be in [0, 1]");
    }
}

double degrees_to_radians(double degrees) {
    if (degrees == 90.0) {
        return half_pi;
    }
    return degrees * std::numbers::pi / 180.0;
}

double intensity_attenuation(double theta, MalusConvention convention) {
    check_angle(theta);
    if (theta == half_pi) {
        return 0.0;   // cos(pi/2) is not exact in floating point
    }
    const double c = std::cos(theta);
    return convention == MalusConvention::cosine ? c : c * c;
}

IntensitySplit malus_split(double lo_intensity, double pbs_loss, double theta,
                           MalusConvention convention) {
    check_angle(theta);
    const double through = intensity_attenuation(theta, convention);
    const double s = theta == half_pi ? 1.0 : std::sin(theta);
    const double cross = convention == MalusConvention::cosine ? s : s * s;
    return {pbs_loss * lo_intensity * through, pbs_loss * lo_intensity * cross};
}

double calibrated_snu(const ShotNoiseModel& model) {
    model.validate();
    return model.pbs_loss * model.detector_gain * model.lo_intensity * model.vacuum_variance;
}

double practical_snu(double calibrated, double theta, MalusConvention convention) {
    return calibrated * intensity_attenuation(theta, convention);
}

std::vector<double> attacked_samples(std::span<const double> x_a, const ChannelParams& ch,
                                     double theta, std::uint64_t seed, MalusConvention convention) {
    const double amplitude = std::sqrt(intensity_attenuation(theta, convention));
    return scaled_channel_samples(x_a, ch, amplitude, seed);
}

AttackedEstimates max_attack_estimates(double transmittance, double excess_noise, double pmr) {
    if (pmr == 0.0) {
        throw degenerate_attack_error("every pulse attacked at full strength: estimates undefined");
    }
    if (!(pmr > 0.0) || pmr > 1.0) {
        throw domain_error("polarization measurement ratio must be in (0, 1]");
    }
    if (!(transmittance > 0.0)) {
        throw domain_error("transmittance must be positive");
    }
    const double k2 = pmr * pmr;
    return {k2 * transmittance, excess_noise - (1.0 / transmittance) * (1.0 / k2 - 1.0)};
}

double plan_attack(double transmittance, double eps_intro, double eps_target, double pmr,
                   MalusConvention convention) {
    if (!(transmittance > 0.0)) {
        throw domain_error("transmittance must be positive");
    }
    if (!(pmr >= 0.0) || pmr >= 1.0) {
        throw domain_error("planning needs a measurement ratio in [0, 1)");
    }
    if (eps_intro < eps_target) {
        throw domain_error("cannot plan an attack that raises the reported noise");
    }

    // The combined amplitude must satisfy 1/A^2 = 1 + T (eps_intro - eps_target).
    const double bias = 1.0 + transmittance * (eps_intro - eps_target);
    const double amplitude = 1.0 / std::sqrt(bias);
    if (amplitude < pmr) {
        throw infeasible_error("measurement ratio too high to hide that much noise");
    }

    const double sqrt_atten = (amplitude - pmr) / (1.0 - pmr);
    const double atten = sqrt_atten * sqrt_atten;
    const double theta = convention == MalusConvention::cosine ? std::acos(atten)
                                                               : std::acos(sqrt_atten);
    return std::min(theta, half_pi);
}

} // namespace cvqkd
