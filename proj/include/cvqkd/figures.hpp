#pragma once

#include <cstdint>
#include <vector>

#include "cvqkd/config.hpp"
#include "cvqkd/csv.hpp"

namespace cvqkd {

// Analytic cos-law curve next to a Monte Carlo vacuum-variance estimate at
// each angle. Columns: theta_deg, snu_normalized, mc_variance.
Table snu_curve(const std::vector<double>& angles_deg, std::size_t n, std::uint64_t seed,
                MalusConvention convention = MalusConvention::cosine);

// Tolerable excess noise vs the value reported under attack.
// Columns: distance_km, eps_tolerable, eps_reported.
Table figure_tolerable_noise(const ExperimentConfig& cfg);

// Ideal rate, the rate available to the eavesdropper, and their ratio.
// Columns: distance_km, k_ideal_rate, k_eve_rate, ratio, infeasible.
Table figure_key_rate_ratio(const ExperimentConfig& cfg);

// Planned orientation angle per measurement ratio, long format.
// Columns: distance_km, k, theta_rad, infeasible.
Table figure_attack_angle(const ExperimentConfig& cfg);

// Estimated-to-practical transmittance ratio per measurement ratio.
// Columns: distance_km, k, t_ratio, infeasible.
Table figure_transmittance_ratio(const ExperimentConfig& cfg);

// Dispatch by the published figure number (3-6).
Table figure(int id, const ExperimentConfig& cfg);

} // namespace cvqkd
