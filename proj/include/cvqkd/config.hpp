#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvqkd/attack.hpp"
#include "cvqkd/lo_pulse_train.hpp"

namespace cvqkd {

// Flat `key = value` configuration shared by all commands. Lists are
// comma-separated; `#` starts a comment.
struct ExperimentConfig {
    double va = 19.0;
    double beta = 0.95;
    double pmr = 0.5;                              // single-k commands
    std::vector<double> pmr_list = {0.8, 0.6, 0.4}; // multi-k sweeps
    double eps_target = 0.005;
    double loss_db_per_km = 0.2;
    double distance_km_min = 0.0;
    double distance_km_max = 60.0;
    double distance_km_step = 1.0;
    std::vector<double> distances;                 // explicit grid, overrides min/max/step
    std::vector<double> angles_deg = {0, 15, 30, 45, 60, 75, 90};
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 1;
    MalusConvention malus_convention = MalusConvention::cosine;

    // pulse-train scenario
    CompensationConfig compensation;
    double theta0 = 0.0;
    double attack_angle = 0.0;

    // Materialized distance grid; validated strictly increasing.
    std::vector<double> distance_grid() const;

    void validate() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

MalusConvention parse_malus_convention(const std::string& value);

} // namespace cvqkd
