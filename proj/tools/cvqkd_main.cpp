// Command-line front end: every subcommand prints CSV on stdout (or --out)
// and is byte-stable for a fixed seed and config.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cvqkd/config.hpp"
#include "cvqkd/csv.hpp"
#include "cvqkd/estimation.hpp"
#include "cvqkd/figures.hpp"
#include "cvqkd/keyrate.hpp"
#include "cvqkd/lo_pulse_train.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--config", common.config_path, "Path to a key = value config file");
    cmd->add_option("--out", common.out_path, "Write CSV here instead of stdout");
    cmd->add_option("--seed", common.seed, "Master seed (overrides config and CVQKD_SEED)")
        ->envname("CVQKD_SEED");
}

cvqkd::ExperimentConfig resolve_config(const CommonOptions& common) {
    cvqkd::ExperimentConfig cfg;
    if (!common.config_path.empty()) {
        cfg = cvqkd::load_config(common.config_path);
    }
    if (common.seed) {
        cfg.seed = *common.seed;
    }
    return cfg;
}

void emit(const CommonOptions& common, const cvqkd::Table& table) {
    const std::string csv = cvqkd::to_csv(table);
    if (common.out_path.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream out(common.out_path, std::ios::binary);
    if (!out) {
        throw cvqkd::config_error("cannot open output file: " + common.out_path);
    }
    out << csv;
}

double transmittance_from(const cvqkd::ExperimentConfig& cfg, double distance_km) {
    return cvqkd::distance_to_transmittance(distance_km, {cfg.loss_db_per_km});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation toolkit for the LO polarization attack on CV-QKD"};
    app.require_subcommand(1);

    // snu-curve: analytic cos-law SNU next to a Monte Carlo estimate.
    CommonOptions snu_common;
    std::optional<std::size_t> snu_samples;
    auto* snu = app.add_subcommand("snu-curve", "Normalized shot-noise unit vs orientation angle");
    add_common(snu, snu_common);
    snu->add_option("--samples", snu_samples, "Monte Carlo samples per angle");

    // figure: CSV data behind the published plots.
    CommonOptions fig_common;
    int fig_id = 0;
    std::optional<double> fig_k;
    auto* fig = app.add_subcommand("figure", "Distance sweeps for figures 3-6");
    add_common(fig, fig_common);
    fig->add_option("--fig", fig_id, "Figure id (3-6)")->required();
    fig->add_option("--k", fig_k, "Measurement ratio for single-k figures");

    // simulate: Monte Carlo channel estimation under attack.
    CommonOptions sim_common;
    std::optional<double> sim_va, sim_k, sim_theta_deg, sim_distance, sim_eps;
    std::optional<std::size_t> sim_samples;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo parameter estimation under attack");
    add_common(sim, sim_common);
    sim->add_option("--va", sim_va, "Modulation variance");
    sim->add_option("--k", sim_k, "Measurement ratio");
    sim->add_option("--theta-deg", sim_theta_deg, "Attack orientation angle in degrees");
    sim->add_option("--distance-km", sim_distance, "Channel length");
    sim->add_option("--eps", sim_eps, "Channel excess noise");
    sim->add_option("--samples", sim_samples, "Monte Carlo samples");

    // plan: orientation angle hiding a given excess noise.
    CommonOptions plan_common;
    std::optional<double> plan_k, plan_distance, plan_eps, plan_eps_target;
    auto* plan = app.add_subcommand("plan", "Solve for the attack angle that hides excess noise");
    add_common(plan, plan_common);
    plan->add_option("--k", plan_k, "Measurement ratio");
    plan->add_option("--distance-km", plan_distance, "Channel length");
    plan->add_option("--eps", plan_eps, "Introduced excess noise (default: tolerable noise)");
    plan->add_option("--eps-target", plan_eps_target, "Reported excess noise after the attack");

    // keyrate: reverse-reconciliation secret key rate.
    CommonOptions rate_common;
    std::optional<double> rate_va, rate_beta, rate_distance, rate_eps;
    auto* rate = app.add_subcommand("keyrate", "Secret key rate for given channel parameters");
    add_common(rate, rate_common);
    rate->add_option("--va", rate_va, "Modulation variance");
    rate->add_option("--beta", rate_beta, "Reconciliation efficiency");
    rate->add_option("--distance-km", rate_distance, "Channel length");
    rate->add_option("--eps", rate_eps, "Channel excess noise");

    // identify: recover the reference-pulse set from probe tests.
    CommonOptions id_common;
    std::optional<std::size_t> id_cycle, id_refs;
    auto* ident = app.add_subcommand("identify", "Identify reference pulses via probe tests");
    add_common(ident, id_common);
    ident->add_option("--cycle-length", id_cycle, "Pulses per compensation cycle");
    ident->add_option("--reference-count", id_refs, "Measured pulses per cycle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*snu) {
            cvqkd::ExperimentConfig cfg = resolve_config(snu_common);
            if (snu_samples) {
                cfg.samples = *snu_samples;
            }
            emit(snu_common,
                 cvqkd::snu_curve(cfg.angles_deg, cfg.samples, cfg.seed, cfg.malus_convention));
        } else if (*fig) {
            cvqkd::ExperimentConfig cfg = resolve_config(fig_common);
            if (fig_k) {
                cfg.pmr = *fig_k;
            }
            emit(fig_common, cvqkd::figure(fig_id, cfg));
        } else if (*sim) {
            cvqkd::ExperimentConfig cfg = resolve_config(sim_common);
            if (sim_va) cfg.va = *sim_va;
            if (sim_k) cfg.pmr = *sim_k;
            if (sim_samples) cfg.samples = *sim_samples;
            const double distance = sim_distance.value_or(0.0);
            const double theta = cvqkd::degrees_to_radians(sim_theta_deg.value_or(0.0));
            const cvqkd::ProtocolParams proto{cfg.va, cfg.beta};
            const cvqkd::ChannelParams channel{transmittance_from(cfg, distance),
                                               sim_eps.value_or(0.0)};
            const cvqkd::AttackParams attack{theta, cfg.pmr};
            const cvqkd::ChannelEstimate est = cvqkd::monte_carlo_attacked_run(
                proto, channel, attack, cfg.samples, cfg.seed, cfg.malus_convention);
            emit(sim_common,
                 {{"n", "t_hat", "eps_hat", "theta", "k", "seed"},
                  {{static_cast<double>(est.n_samples), est.t_hat, est.eps_hat, theta, cfg.pmr,
                    static_cast<double>(cfg.seed)}}});
        } else if (*plan) {
            cvqkd::ExperimentConfig cfg = resolve_config(plan_common);
            if (plan_k) cfg.pmr = *plan_k;
            if (plan_eps_target) cfg.eps_target = *plan_eps_target;
            const double distance = plan_distance.value_or(0.0);
            const double t = transmittance_from(cfg, distance);
            const double eps_intro =
                plan_eps ? *plan_eps : cvqkd::tolerable_excess_noise(cfg.va, cfg.beta, t);
            const double theta =
                cvqkd::plan_attack(t, eps_intro, cfg.eps_target, cfg.pmr, cfg.malus_convention);
            emit(plan_common,
                 {{"t", "eps_intro", "eps_target", "k", "theta_rad"},
                  {{t, eps_intro, cfg.eps_target, cfg.pmr, theta}}});
        } else if (*rate) {
            cvqkd::ExperimentConfig cfg = resolve_config(rate_common);
            if (rate_va) cfg.va = *rate_va;
            if (rate_beta) cfg.beta = *rate_beta;
            const double distance = rate_distance.value_or(0.0);
            const double t = transmittance_from(cfg, distance);
            const double eps = rate_eps.value_or(0.0);
            const double k = cvqkd::secret_key_rate(cfg.va, cfg.beta, t, eps);
            emit(rate_common, {{"va", "beta", "t", "eps", "key_rate"},
                               {{cfg.va, cfg.beta, t, eps, k}}});
        } else if (*ident) {
            cvqkd::ExperimentConfig cfg = resolve_config(id_common);
            if (id_cycle) cfg.compensation.cycle_length = *id_cycle;
            if (id_refs) cfg.compensation.reference_count = *id_refs;
            cfg.compensation.validate();
            std::size_t probes = 0;
            const cvqkd::ProbeOracle oracle =
                cvqkd::make_compensation_probe_oracle(cfg.compensation, cfg.theta0, cfg.seed);
            const cvqkd::ProbeOracle counted = [&](const std::vector<std::size_t>& subset) {
                ++probes;
                return oracle(subset);
            };
            const std::vector<std::size_t> found = cvqkd::identify_reference_pulses(
                counted, cfg.compensation.cycle_length, cfg.compensation.reference_count);
            cvqkd::Table table;
            table.header = {"n", "m", "probe_count", "index"};
            for (const std::size_t index : found) {
                table.rows.push_back({static_cast<double>(cfg.compensation.cycle_length),
                                      static_cast<double>(cfg.compensation.reference_count),
                                      static_cast<double>(probes), static_cast<double>(index)});
            }
            emit(id_common, table);
        }
    } catch (const cvqkd::error& e) {
        std::cerr << "error," << cvqkd::errc_name(e.code()) << "," << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error,generic," << e.what() << "\n";
        return 1;
    }
    return 0;
}
