// Command-line front end: single protocol runs, analytic sweeps, Monte Carlo
// batches, channel construction, and the built-in verification suite.
//
// Exit codes: 0 success, 1 usage/config error, 2 protocol or verification
// failure.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rio/cli_support.hpp"
#include "rio/verify.hpp"

namespace {

// All options arrive as strings and are resolved in precedence order:
// built-in defaults, then RIOSIM_SEED, then the config file, then flags.
struct RawOptions {
    std::string config_path;
    std::string protocol, channel, alpha, beta, u_phase, v_phase, m, z, theta;
    std::string dissipation, gamma, time, seed, trials, force;
    bool parallel = false;

    rio::RunConfig resolve() const {
        rio::RunConfig config;
        if (const char* env = std::getenv("RIOSIM_SEED")) {
            config.seed = std::strtoull(env, nullptr, 10);
        }
        if (!config_path.empty()) rio::apply_config_file(config, config_path);
        if (!protocol.empty()) config.protocol = protocol;
        if (!channel.empty()) config.channel = channel;
        if (!alpha.empty()) config.alpha = rio::parse_complex(alpha);
        if (!beta.empty()) config.beta = rio::parse_complex(beta);
        if (!u_phase.empty()) config.u_phase = rio::parse_angle(u_phase);
        if (!v_phase.empty()) config.v_phase = rio::parse_angle(v_phase);
        if (!m.empty()) config.ripuo_m = static_cast<int>(rio::parse_number(m));
        if (!z.empty()) config.z = rio::parse_number(z);
        if (!theta.empty()) config.theta = rio::parse_angle(theta);
        if (!dissipation.empty()) config.dissipation = rio::parse_number(dissipation);
        if (!gamma.empty()) config.gamma = rio::parse_number(gamma);
        if (!time.empty()) config.time = rio::parse_number(time);
        if (!seed.empty()) config.seed = std::strtoull(seed.c_str(), nullptr, 10);
        if (!trials.empty()) config.trials = static_cast<long>(rio::parse_number(trials));
        if (!force.empty()) config.forced = rio::parse_forced(force);
        if (parallel) config.parallel = true;
        rio::validate(config);
        return config;
    }
};

void add_common_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--config", raw.config_path, "JSON config file; flags override it");
    cmd->add_option("--protocol", raw.protocol, "riho | ripuo");
    cmd->add_option("--channel", raw.channel, "omega+ | omega- | pi+ | pi-");
    cmd->add_option("--alpha", raw.alpha, "input amplitude, 're' or 're,im'");
    cmd->add_option("--beta", raw.beta, "input amplitude, 're' or 're,im'");
    cmd->add_option("--u-phase", raw.u_phase, "phase of u (radians or pi literal)");
    cmd->add_option("--v-phase", raw.v_phase, "phase of v (radians or pi literal)");
    cmd->add_option("--m", raw.m, "ripuo sub-operator choice (0 or 1)");
    cmd->add_option("--z", raw.z, "probe amplitude");
    cmd->add_option("--theta", raw.theta, "Kerr phase (radians or pi literal)");
    cmd->add_option("--D", raw.dissipation, "dissipation factor in [0, 1]");
    cmd->add_option("--gamma", raw.gamma, "dissipation constant (with --t)");
    cmd->add_option("--t", raw.time, "interaction time (with --gamma)");
    cmd->add_option("--seed", raw.seed, "RNG master seed");
    cmd->add_option("--trials", raw.trials, "Monte Carlo trials");
    cmd->add_option("--force", raw.force, "forced outcomes, e.g. k=0,m=1,pq=10");
    cmd->add_flag("--parallel", raw.parallel, "fan trials out across OpenMP threads");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"remote implementation of hidden / partially unknown operators"};
    app.require_subcommand(1);

    RawOptions run_raw, sweep_raw, mc_raw;

    CLI::App* run_cmd = app.add_subcommand("run", "execute one protocol run, print JSON");
    add_common_options(run_cmd, run_raw);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "analytic success-probability sweep, CSV");
    add_common_options(sweep_cmd, sweep_raw);
    std::string sweep_axis = "D";
    double sweep_lo = 0.0, sweep_hi = 1.0;
    int sweep_steps = 101;
    sweep_cmd->add_option("--axis", sweep_axis, "D | z | theta");
    sweep_cmd->add_option("--from", sweep_lo, "axis start");
    sweep_cmd->add_option("--to", sweep_hi, "axis end");
    sweep_cmd->add_option("--steps", sweep_steps, "number of rows (>= 2)");

    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo batch, CSV summary");
    add_common_options(mc_cmd, mc_raw);

    CLI::App* channels_cmd = app.add_subcommand("channels", "construct channels, print JSON");
    std::string chan_variant;
    int chan_m = 0, chan_controllers = 0, chan_r = 0, chan_cyclic = 0;
    std::string chan_form = "qubits";
    std::string chan_chain;
    channels_cmd->add_option("--variant", chan_variant, "Bell channel: omega+|omega-|pi+|pi-");
    channels_cmd->add_option("--joint", chan_m, "joint channel over M parties");
    channels_cmd->add_option("--controllers", chan_controllers, "controller count N");
    channels_cmd->add_option("--form", chan_form, "qubits | classical");
    channels_cmd->add_option("--r", chan_r, "secret preparation bit");
    channels_cmd->add_option("--chain", chan_chain,
                             "controller chain bits r1,r2,... on the shared qubit");
    channels_cmd->add_option("--cyclic", chan_cyclic, "ring of Bell pairs over m parties");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the self-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) {
            const rio::ojson report = rio::execute_run(run_raw.resolve());
            std::cout << report.dump(2) << '\n';
            const double fidelity = report["result"]["achieved_fidelity"].get<double>();
            return fidelity >= 1.0 - 1e-9 ? 0 : 2;
        }
        if (sweep_cmd->parsed()) {
            rio::RunConfig config = sweep_raw.resolve();
            std::cout << rio::render_sweep_csv(config, sweep_axis, sweep_lo, sweep_hi,
                                               sweep_steps);
            return 0;
        }
        if (mc_cmd->parsed()) {
            std::cout << rio::render_mc_csv(mc_raw.resolve());
            return 0;
        }
        if (channels_cmd->parsed()) {
            rio::ojson out;
            if (!chan_chain.empty()) {
                std::vector<int> bits;
                for (const char c : chan_chain) {
                    if (c == ',') continue;
                    if (c != '0' && c != '1') {
                        throw std::invalid_argument("chain bits must be 0 or 1");
                    }
                    bits.push_back(c - '0');
                }
                if (bits.empty()) throw std::invalid_argument("chain needs at least one bit");
                const int r1 = bits.front();
                bits.erase(bits.begin());
                rio::GeneralChannel channel = rio::controller_chain_apply(
                    rio::build_chain_channel(std::max(chan_m, 1), r1), bits);
                out["kind"] = "chain";
                out["channel"] = rio::to_json(channel);
            } else if (chan_cyclic > 0) {
                out["kind"] = "cyclic";
                out["m_parties"] = chan_cyclic;
                out["state"] = rio::to_json(rio::build_cyclic_channel(chan_cyclic));
            } else if (!chan_variant.empty()) {
                out["kind"] = "bell";
                out["variant"] = chan_variant;
                out["state"] = rio::to_json(rio::make_channel(rio::parse_channel(chan_variant)));
            } else if (chan_controllers > 0) {
                const rio::ControllerForm form = chan_form == "classical"
                                                     ? rio::ControllerForm::ClassicalBit
                                                     : rio::ControllerForm::Qubits;
                out["kind"] = "controlled_joint";
                out["form"] = chan_form;
                out["channel"] = rio::to_json(rio::build_controlled_joint_channel(
                    std::max(chan_m, 1), chan_controllers, chan_r, form));
            } else {
                out["kind"] = "joint";
                out["channel"] = rio::to_json(rio::build_joint_channel(std::max(chan_m, 1)));
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }
        if (verify_cmd->parsed()) {
            return rio::run_verify_suite(std::cout) == 0 ? 0 : 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
