#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cvqkd/errors.hpp"

namespace cvqkd {

// All pulses are treated as linearly polarized, so the elliptic angle is 0
// and a pulse's polarization is its orientation angle alone.
struct PulsePolarization {
    double orientation_angle = 0.0;
    double elliptic_angle = 0.0;
};

enum class DriftMode {
    worst_case_linear,
    random_walk,
};

enum class ReferencePlacement {
    leading,   // first M pulses of each cycle
    uniform,   // spread evenly over the cycle
};

struct CompensationConfig {
    std::size_t cycle_length = 16;       // N
    std::size_t reference_count = 4;     // M, 1 <= M <= N
    double drift_threshold = 1e-4;       // rad per pulse
    double drift_rate = 34.0;            // rad/s
    double repetition_rate = 5e6;        // Hz
    DriftMode drift_mode = DriftMode::worst_case_linear;
    ReferencePlacement placement = ReferencePlacement::leading;

    void validate() const;

    // Within-cycle indices Bob measures, sorted.
    std::vector<std::size_t> reference_offsets() const;
};

struct PulseTrain {
    std::vector<double> orientation;              // rad, one per pulse
    std::vector<std::size_t> reference_offsets;   // within-cycle, sorted
    std::size_t cycle_length = 0;

    bool is_reference(std::size_t pulse_index) const;
    std::size_t cycles() const;
};

struct CompensationResult {
    std::vector<double> residual;     // post-correction angle per pulse
    std::vector<double> correction;   // per cycle, applied to that cycle
};

// Correction rate needed so accumulated drift stays under the threshold.
double required_compensation_rate(double drift_rate, double threshold);

// Orientation angles of n consecutive pulses starting at theta0. Linear mode
// advances by drift_rate/repetition_rate per pulse; random-walk mode adds
// mean-zero Gaussian increments with that standard deviation.
std::vector<double> simulate_drift(std::size_t n_pulses, const CompensationConfig& config,
                                   double theta0, std::uint64_t seed);

PulseTrain make_pulse_train(std::size_t n_pulses, const CompensationConfig& config, double theta0,
                            std::uint64_t seed);

// Eve re-modulates every unmeasured pulse, adding `angle` to its
// orientation. Reference pulses are untouched, so the feedback never sees it.
void apply_polarization_attack(PulseTrain& train, double angle);

// Measure-and-feedback loop: the correction for cycle j+1 is the mean
// measured orientation of cycle j's reference pulses (the first cycle is
// uncorrected).
CompensationResult compensate(const PulseTrain& train, const CompensationConfig& config);

// Answers whether perturbing the given pulse indices (within one cycle)
// changes the compensation behavior.
using ProbeOracle = std::function<bool(const std::vector<std::size_t>&)>;

// Adaptive group testing over [0, n): bisect subsets that test positive.
// `declared_m` is the reference count known to the prober; probe count is
// bounded by 2 M ceil(log2 N) + M.
std::vector<std::size_t> identify_reference_pulses(const ProbeOracle& oracle, std::size_t n_pulses,
                                                   std::size_t declared_m);

// Oracle backed by the simulated loop: perturbs the subset in the first
// cycle of a two-cycle train and compares the resulting corrections against
// the unperturbed run.
ProbeOracle make_compensation_probe_oracle(const CompensationConfig& config, double theta0,
                                           std::uint64_t seed, double probe_angle = 0.05);

} // namespace cvqkd
