#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvqkd/core_model.hpp"

namespace cvqkd {

// Intensity split convention at the polarizing beam splitter. `cosine`
// scales intensity with cos(theta) / sin(theta); `cosine_squared` uses the
// classical cos^2 / sin^2 law. All closed forms downstream are expressed in
// the intensity attenuation factor, so both conventions stay consistent.
enum class MalusConvention {
    cosine,
    cosine_squared,
};

struct ShotNoiseModel {
    double pbs_loss = 1.0;          // transmissivity factor of the PBS
    double detector_gain = 1.0;     // output variance per intensity unit
    double lo_intensity = 1.0;
    double vacuum_variance = 1.0;

    void validate() const;
};

struct AttackParams {
    double orientation_angle = 0.0; // rad, [0, pi/2]
    double pmr = 1.0;               // measured fraction M/N, [0, 1]

    void validate() const;
};

struct IntensitySplit {
    double parallel;
    double orthogonal;
};

struct AttackedEstimates {
    double transmittance;
    double excess_noise;
};

// Fraction of LO intensity that survives into the LO path at misalignment
// angle theta. Exactly 0 at theta = pi/2 and 1 at theta = 0.
double intensity_attenuation(double theta, MalusConvention convention = MalusConvention::cosine);

// Exact at the quadrant endpoints (90 deg maps to pi/2 bit-exactly).
double degrees_to_radians(double degrees);

IntensitySplit malus_split(double lo_intensity, double pbs_loss, double theta,
                           MalusConvention convention = MalusConvention::cosine);

// N0 = alpha * g * I_LO * <dX_vac^2>.
double calibrated_snu(const ShotNoiseModel& model);

// SNU of an attacked pulse: calibrated value times the intensity attenuation.
double practical_snu(double calibrated, double theta,
                     MalusConvention convention = MalusConvention::cosine);

// Normalized homodyne results for attacked pulses: the raw output scales
// with the practical SNU while normalization still divides by the
// calibrated one.
std::vector<double> attacked_samples(std::span<const double> x_a, const ChannelParams& ch,
                                     double theta, std::uint64_t seed,
                                     MalusConvention convention = MalusConvention::cosine);

// Estimates seen by the legitimate parties in the theta -> pi/2 limit, the
// strongest attack a given measurement ratio admits.
AttackedEstimates max_attack_estimates(double transmittance, double excess_noise, double pmr);

// Orientation angle that biases the estimated excess noise from eps_intro
// down to eps_target at measurement ratio pmr.
double plan_attack(double transmittance, double eps_intro, double eps_target, double pmr,
                   MalusConvention convention = MalusConvention::cosine);

} // namespace cvqkd
