#include "cvqkd/lo_pulse_train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cvqkd/rng.hpp"

namespace cvqkd {

void CompensationConfig::validate() const {
    if (cycle_length < 1) {
        throw config_error("compensation cycle needs at least one pulse");
    }
    if (reference_count < 1 || reference_count > cycle_length) {
        throw config_error("reference count must satisfy 1 <= M <= N");
    }
    if (!(drift_threshold > 0.0)) {
        throw config_error("drift threshold must be positive");
    }
    if (!(repetition_rate > 0.0)) {
        throw config_error("repetition rate must be positive");
    }
    if (drift_rate < 0.0) {
        throw config_error("drift rate must be nonnegative");
    }
}

std::vector<std::size_t> CompensationConfig::reference_offsets() const {
    validate();
    std::vector<std::size_t> offsets(reference_count);
    if (placement == ReferencePlacement::leading) {
        std::iota(offsets.begin(), offsets.end(), std::size_t{0});
    } else {
        for (std::size_t j = 0; j < reference_count; ++j) {
            offsets[j] = j * cycle_length / reference_count;
        }
    }
    return offsets;
}

bool PulseTrain::is_reference(std::size_t pulse_index) const {
    const std::size_t offset = pulse_index % cycle_length;
    return std::binary_search(reference_offsets.begin(), reference_offsets.end(), offset);
}

std::size_t PulseTrain::cycles() const {
    return orientation.size() / cycle_length;
}

double required_compensation_rate(double drift_rate, double threshold) {
    if (!(drift_rate > 0.0) || !(threshold > 0.0)) {
        throw domain_error("drift rate and threshold must be positive");
    }
    return drift_rate / threshold;
}

std::vector<double> simulate_drift(std::size_t n_pulses, const CompensationConfig& config,
                                   double theta0, std::uint64_t seed) {
    config.validate();
    const double per_pulse = config.drift_rate / config.repetition_rate;
    std::vector<double> angles(n_pulses);
    if (config.drift_mode == DriftMode::worst_case_linear) {
        for (std::size_t i = 0; i < n_pulses; ++i) {
            angles[i] = theta0 + static_cast<double>(i) * per_pulse;
        }
    } else {
        const std::vector<double> increments = gaussian_vector(n_pulses, per_pulse, seed);
        double angle = theta0;
        for (std::size_t i = 0; i < n_pulses; ++i) {
            angles[i] = angle;
            angle += increments[i];
        }
    }
    return angles;
}

PulseTrain make_pulse_train(std::size_t n_pulses, const CompensationConfig& config, double theta0,
                            std::uint64_t seed) {
    PulseTrain train;
    train.orientation = simulate_drift(n_pulses, config, theta0, seed);
    train.reference_offsets = config.reference_offsets();
    train.cycle_length = config.cycle_length;
    return train;
}

void apply_polarization_attack(PulseTrain& train, double angle) {
    for (std::size_t i = 0; i < train.orientation.size(); ++i) {
        if (!train.is_reference(i)) {
            train.orientation[i] += angle;
        }
    }
}

CompensationResult compensate(const PulseTrain& train, const CompensationConfig& config) {
    config.validate();
    if (train.cycle_length != config.cycle_length) {
        throw config_error("pulse train and config disagree on the cycle length");
    }
    const std::size_t n = train.orientation.size();
    const std::size_t cycle = config.cycle_length;
    if (n < cycle) {
        throw config_error("pulse train must cover at least one full cycle");
    }
    const auto& offsets = train.reference_offsets;
    if (offsets.empty()) {
        throw config_error("cycle has no reference pulses");
    }
    if (offsets.back() >= cycle) {
        throw config_error("reference offset outside the cycle");
    }

    const std::size_t n_cycles = (n + cycle - 1) / cycle;
    CompensationResult result;
    result.residual.resize(n);
    result.correction.assign(n_cycles, 0.0);

    double correction = 0.0;   // nothing measured before the first cycle
    for (std::size_t j = 0; j < n_cycles; ++j) {
        result.correction[j] = correction;
        const std::size_t base = j * cycle;
        const std::size_t end = std::min(n, base + cycle);
        for (std::size_t i = base; i < end; ++i) {
            result.residual[i] = train.orientation[i] - correction;
        }
        // Feedback: next cycle's correction is the mean measured orientation
        // of this cycle's reference pulses.
        double sum = 0.0;
        std::size_t measured = 0;
        for (const std::size_t offset : offsets) {
            const std::size_t i = base + offset;
            if (i < end) {
                sum += train.orientation[i];
                ++measured;
            }
        }
        if (measured > 0) {
            correction = sum / static_cast<double>(measured);
        }
    }
    return result;
}

namespace {

struct IdentifySearch {
    const ProbeOracle& oracle;
    std::size_t declared_m;
    std::vector<std::size_t> found;
    std::size_t probes = 0;

    bool probe(std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> subset(hi - lo);
        std::iota(subset.begin(), subset.end(), lo);
        ++probes;
        return oracle(subset);
    }

    // Bisect [lo, hi); only positive ranges are split further.
    void search(std::size_t lo, std::size_t hi) {
        if (found.size() == declared_m) {
            return;   // everything located; remaining candidates are plain pulses
        }
        if (!probe(lo, hi)) {
            return;
        }
        if (hi - lo == 1) {
            found.push_back(lo);
            return;
        }
        const std::size_t before = found.size();
        const std::size_t mid = lo + (hi - lo) / 2;
        search(lo, mid);
        if (found.size() < declared_m) {
            search(mid, hi);
        }
        if (found.size() == before) {
            throw identification_error("probe oracle is inconsistent: positive set with no member");
        }
    }
};

} // namespace

std::vector<std::size_t> identify_reference_pulses(const ProbeOracle& oracle, std::size_t n_pulses,
                                                   std::size_t declared_m) {
    if (n_pulses < 1) {
        throw domain_error("cycle must contain at least one pulse");
    }
    if (declared_m < 1 || declared_m > n_pulses) {
        throw identification_error("declared reference count contradicts 1 <= M <= N");
    }

    IdentifySearch state{oracle, declared_m, {}, 0};
    if (declared_m == n_pulses) {
        // Every pulse must be a reference; one probe confirms it.
        if (!state.probe(0, n_pulses)) {
            throw identification_error("oracle negative although every pulse is declared a reference");
        }
        std::vector<std::size_t> all(n_pulses);
        std::iota(all.begin(), all.end(), std::size_t{0});
        return all;
    }

    state.search(0, n_pulses);
    if (state.found.size() != declared_m) {
        throw identification_error("identified reference set does not match the declared count");
    }
    std::sort(state.found.begin(), state.found.end());
    return state.found;
}

ProbeOracle make_compensation_probe_oracle(const CompensationConfig& config, double theta0,
                                           std::uint64_t seed, double probe_angle) {
    config.validate();
    if (probe_angle == 0.0) {
        throw config_error("probe angle must be nonzero");
    }
    // Two cycles: a perturbation in the first changes the correction applied
    // to the second exactly when it touches a reference pulse.
    const std::size_t n_pulses = 2 * config.cycle_length;
    const PulseTrain baseline = make_pulse_train(n_pulses, config, theta0, seed);
    const std::vector<double> base_corrections = compensate(baseline, config).correction;

    return [config, baseline, base_corrections, probe_angle](
               const std::vector<std::size_t>& subset) -> bool {
        PulseTrain perturbed = baseline;
        for (const std::size_t index : subset) {
            if (index >= config.cycle_length) {
                throw domain_error("probe index outside the first cycle");
            }
            perturbed.orientation[index] += probe_angle;
        }
        const std::vector<double> corrections = compensate(perturbed, config).correction;
        return corrections != base_corrections;
    };
}

} // namespace cvqkd
