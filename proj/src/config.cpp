#include "cvqkd/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace cvqkd {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) {
            throw config_error("trailing characters in value of '" + key + "'");
        }
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error("cannot parse number for key '" + key + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw config_error("cannot parse unsigned integer for key '" + key + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            throw config_error("empty list element for key '" + key + "'");
        }
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) {
        throw config_error("empty list for key '" + key + "'");
    }
    return out;
}

DriftMode parse_drift_mode(const std::string& value) {
    if (value == "worst-case-linear" || value == "linear") {
        return DriftMode::worst_case_linear;
    }
    if (value == "random-walk") {
        return DriftMode::random_walk;
    }
    throw config_error("drift_mode must be 'worst-case-linear' or 'random-walk'");
}

ReferencePlacement parse_placement(const std::string& value) {
    if (value == "leading") {
        return ReferencePlacement::leading;
    }
    if (value == "uniform") {
        return ReferencePlacement::uniform;
    }
    throw config_error("reference_placement must be 'leading' or 'uniform'");
}

} // namespace

MalusConvention parse_malus_convention(const std::string& value) {
    if (value == "paper" || value == "cosine") {
        return MalusConvention::cosine;
    }
    if (value == "squared" || value == "cosine-squared") {
        return MalusConvention::cosine_squared;
    }
    throw config_error("malus_convention must be 'paper' or 'squared'");
}

std::vector<double> ExperimentConfig::distance_grid() const {
    std::vector<double> grid = distances;
    if (grid.empty()) {
        for (double d = distance_km_min; d <= distance_km_max + 1e-9; d += distance_km_step) {
            grid.push_back(d);
        }
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw config_error("distance grid must be strictly increasing");
        }
    }
    if (grid.empty()) {
        throw config_error("distance grid is empty");
    }
    return grid;
}

void ExperimentConfig::validate() const {
    if (!(va > 0.0)) {
        throw config_error("va must be positive");
    }
    if (!(beta > 0.0) || beta > 1.0) {
        throw config_error("beta must be in (0, 1]");
    }
    if (!(pmr >= 0.0) || pmr > 1.0) {
        throw config_error("pmr must be in [0, 1]");
    }
    for (const double k : pmr_list) {
        if (!(k >= 0.0) || k > 1.0) {
            throw config_error("pmr_list entries must be in [0, 1]");
        }
    }
    if (eps_target < 0.0) {
        throw config_error("eps_target must be nonnegative");
    }
    if (!(loss_db_per_km > 0.0)) {
        throw config_error("loss_db_per_km must be positive");
    }
    if (!(distance_km_step > 0.0)) {
        throw config_error("distance_km_step must be positive");
    }
    for (const double a : angles_deg) {
        if (a < 0.0 || a > 90.0) {
            throw config_error("angles_deg entries must be within [0, 90]");
        }
    }
    (void)distance_grid();
    compensation.validate();
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw config_error("line " + std::to_string(line_no) + ": empty key or value");
        }

        if (key == "va") {
            cfg.va = parse_double(key, value);
        } else if (key == "beta") {
            cfg.beta = parse_double(key, value);
        } else if (key == "pmr") {
            cfg.pmr = parse_double(key, value);
        } else if (key == "pmr_list") {
            cfg.pmr_list = parse_list(key, value);
        } else if (key == "eps_target") {
            cfg.eps_target = parse_double(key, value);
        } else if (key == "loss_db_per_km") {
            cfg.loss_db_per_km = parse_double(key, value);
        } else if (key == "distance_km_min") {
            cfg.distance_km_min = parse_double(key, value);
        } else if (key == "distance_km_max") {
            cfg.distance_km_max = parse_double(key, value);
        } else if (key == "distance_km_step") {
            cfg.distance_km_step = parse_double(key, value);
        } else if (key == "distances") {
            cfg.distances = parse_list(key, value);
        } else if (key == "angles_deg") {
            cfg.angles_deg = parse_list(key, value);
        } else if (key == "samples") {
            cfg.samples = static_cast<std::size_t>(parse_u64(key, value));
        } else if (key == "seed") {
            cfg.seed = parse_u64(key, value);
        } else if (key == "malus_convention") {
            cfg.malus_convention = parse_malus_convention(value);
        } else if (key == "cycle_length") {
            cfg.compensation.cycle_length = static_cast<std::size_t>(parse_u64(key, value));
        } else if (key == "reference_count") {
            cfg.compensation.reference_count = static_cast<std::size_t>(parse_u64(key, value));
        } else if (key == "drift_threshold") {
            cfg.compensation.drift_threshold = parse_double(key, value);
        } else if (key == "drift_rate") {
            cfg.compensation.drift_rate = parse_double(key, value);
        } else if (key == "repetition_rate") {
            cfg.compensation.repetition_rate = parse_double(key, value);
        } else if (key == "drift_mode") {
            cfg.compensation.drift_mode = parse_drift_mode(value);
        } else if (key == "reference_placement") {
            cfg.compensation.placement = parse_placement(value);
        } else if (key == "theta0") {
            cfg.theta0 = parse_double(key, value);
        } else if (key == "attack_angle") {
            cfg.attack_angle = parse_double(key, value);
        } else {
            throw config_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path);
    }
    return parse_config(in);
}

} // namespace cvqkd
