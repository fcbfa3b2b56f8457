#include "cvqkd/figures.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <vector>

#include "cvqkd/estimation.hpp"
#include "cvqkd/keyrate.hpp"
#include "cvqkd/rng.hpp"

namespace cvqkd {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

struct GridPoint {
    double distance_km;
    double transmittance;
    double eps_tolerable;
};

// Transmittance and tolerable excess noise per grid distance, computed in
// parallel with per-slot storage so the sweep order never matters.
std::vector<GridPoint> sweep_tolerable(const ExperimentConfig& cfg) {
    const std::vector<double> grid = cfg.distance_grid();
    const DistanceModel model{cfg.loss_db_per_km};
    std::vector<GridPoint> points(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(grid.size()); ++i) {
        try {
            const double t = distance_to_transmittance(grid[static_cast<std::size_t>(i)], model);
            points[static_cast<std::size_t>(i)] = {
                grid[static_cast<std::size_t>(i)], t, tolerable_excess_noise(cfg.va, cfg.beta, t)};
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    rethrow_first(errors);
    return points;
}

// Planned angle for one grid point, or NaN when the measurement ratio makes
// the target unreachable.
double planned_angle_or_nan(const GridPoint& p, double eps_target, double pmr,
                            MalusConvention convention) {
    if (p.eps_tolerable < eps_target) {
        return nan_value;
    }
    try {
        return plan_attack(p.transmittance, p.eps_tolerable, eps_target, pmr, convention);
    } catch (const infeasible_error&) {
        return nan_value;
    }
}

} // namespace

Table snu_curve(const std::vector<double>& angles_deg, std::size_t n, std::uint64_t seed,
                MalusConvention convention) {
    if (n < 10'000) {
        throw config_error("Monte Carlo commands need at least 10^4 samples");
    }
    Table table;
    table.header = {"theta_deg", "snu_normalized", "mc_variance"};
    const std::vector<double> vacuum(n, 0.0);
    const ChannelParams vacuum_channel{1.0, 0.0};
    for (std::size_t i = 0; i < angles_deg.size(); ++i) {
        const double deg = angles_deg[i];
        if (deg < 0.0 || deg > 90.0) {
            throw domain_error("angles must lie within [0, 90] degrees");
        }
        const double theta = degrees_to_radians(deg);
        const double analytic = intensity_attenuation(theta, convention);
        const std::vector<double> samples =
            attacked_samples(vacuum, vacuum_channel, theta, derive_seed(seed, i), convention);
        const double mc_variance = accumulate_moments(samples, samples).saa;
        table.rows.push_back({deg, analytic, mc_variance});
    }
    return table;
}

Table figure_tolerable_noise(const ExperimentConfig& cfg) {
    cfg.validate();
    Table table;
    table.header = {"distance_km", "eps_tolerable", "eps_reported"};
    for (const GridPoint& p : sweep_tolerable(cfg)) {
        table.rows.push_back({p.distance_km, p.eps_tolerable, cfg.eps_target});
    }
    return table;
}

Table figure_key_rate_ratio(const ExperimentConfig& cfg) {
    cfg.validate();
    Table table;
    table.header = {"distance_km", "k_ideal_rate", "k_eve_rate", "ratio", "infeasible"};
    for (const GridPoint& p : sweep_tolerable(cfg)) {
        const double ideal = secret_key_rate(cfg.va, cfg.beta, p.transmittance, cfg.eps_target);
        const double theta = planned_angle_or_nan(p, cfg.eps_target, cfg.pmr, cfg.malus_convention);
        if (std::isnan(theta)) {
            table.rows.push_back({p.distance_km, ideal, nan_value, nan_value, 1.0});
            continue;
        }
        const AttackedEstimates est = attacked_estimates_paper(
            p.transmittance, p.eps_tolerable, theta, cfg.pmr, cfg.malus_convention);
        const double eve = secret_key_rate(cfg.va, cfg.beta, est.transmittance, est.excess_noise);
        table.rows.push_back({p.distance_km, ideal, eve, eve / ideal, 0.0});
    }
    return table;
}

Table figure_attack_angle(const ExperimentConfig& cfg) {
    cfg.validate();
    Table table;
    table.header = {"distance_km", "k", "theta_rad", "infeasible"};
    for (const GridPoint& p : sweep_tolerable(cfg)) {
        for (const double k : cfg.pmr_list) {
            const double theta = planned_angle_or_nan(p, cfg.eps_target, k, cfg.malus_convention);
            table.rows.push_back(
                {p.distance_km, k, theta, std::isnan(theta) ? 1.0 : 0.0});
        }
    }
    return table;
}

Table figure_transmittance_ratio(const ExperimentConfig& cfg) {
    cfg.validate();
    Table table;
    table.header = {"distance_km", "k", "t_ratio", "infeasible"};
    for (const GridPoint& p : sweep_tolerable(cfg)) {
        for (const double k : cfg.pmr_list) {
            const double theta = planned_angle_or_nan(p, cfg.eps_target, k, cfg.malus_convention);
            if (std::isnan(theta)) {
                table.rows.push_back({p.distance_km, k, nan_value, 1.0});
                continue;
            }
            const AttackedEstimates est = attacked_estimates_paper(
                p.transmittance, p.eps_tolerable, theta, k, cfg.malus_convention);
            table.rows.push_back(
                {p.distance_km, k, est.transmittance / p.transmittance, 0.0});
        }
    }
    return table;
}

Table figure(int id, const ExperimentConfig& cfg) {
    switch (id) {
        case 3: return figure_tolerable_noise(cfg);
        case 4: return figure_key_rate_ratio(cfg);
        case 5: return figure_attack_angle(cfg);
        case 6: return figure_transmittance_ratio(cfg);
        default: throw domain_error("figure id must be between 3 and 6");
    }
}

} // namespace cvqkd
