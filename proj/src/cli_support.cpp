#include "rio/cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rio {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double parse_double_strict(const std::string& text) {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("bad numeric literal: " + text);
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::string format_number(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace

double parse_number(const std::string& text) { return parse_double_strict(text); }

double RunConfig::effective_dissipation() const {
    if (dissipation) return *dissipation;
    if (gamma && time) return std::exp(-*gamma * *time);
    return 1.0;
}

double parse_angle(const std::string& text) {
    const std::size_t pos = text.find("pi");
    if (pos == std::string::npos) return parse_double_strict(text);

    double coefficient = 1.0;
    if (pos > 0) coefficient = parse_double_strict(text.substr(0, pos));
    double denominator = 1.0;
    const std::string rest = text.substr(pos + 2);
    if (!rest.empty()) {
        if (rest[0] != '/') throw std::invalid_argument("bad angle literal: " + text);
        denominator = parse_double_strict(rest.substr(1));
    }
    return coefficient * kPi / denominator;
}

cplx parse_complex(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) return cplx{parse_double_strict(parts[0]), 0.0};
    if (parts.size() == 2) {
        return cplx{parse_double_strict(parts[0]), parse_double_strict(parts[1])};
    }
    throw std::invalid_argument("bad complex literal: " + text);
}

ForcedOutcomes parse_forced(const std::string& text) {
    ForcedOutcomes forced;
    if (text.empty()) return forced;
    for (const std::string& item : split(text, ',')) {
        const auto kv = split(item, '=');
        if (kv.size() != 2) throw std::invalid_argument("bad forced outcome: " + item);
        const std::string& key = kv[0];
        const std::string& value = kv[1];
        if (key == "k" || key == "m") {
            if (value != "0" && value != "1") {
                throw std::invalid_argument("forced " + key + " must be 0 or 1");
            }
            (key == "k" ? forced.k : forced.m) = value == "1" ? 1 : 0;
        } else if (key == "pq") {
            if (value.size() != 2 || (value[0] != '0' && value[0] != '1') ||
                (value[1] != '0' && value[1] != '1')) {
                throw std::invalid_argument("forced pq must be two bits, e.g. pq=10");
            }
            forced.p = value[0] - '0';
            forced.q = value[1] - '0';
        } else {
            throw std::invalid_argument("unknown forced outcome key: " + key);
        }
    }
    return forced;
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    ojson j;
    in >> j;

    auto as_string = [](const ojson& value) {
        return value.is_string() ? value.get<std::string>() : value.dump();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "protocol") config.protocol = value.get<std::string>();
        else if (key == "channel") config.channel = value.get<std::string>();
        else if (key == "alpha") config.alpha = parse_complex(as_string(value));
        else if (key == "beta") config.beta = parse_complex(as_string(value));
        else if (key == "u-phase") config.u_phase = parse_angle(as_string(value));
        else if (key == "v-phase") config.v_phase = parse_angle(as_string(value));
        else if (key == "m") config.ripuo_m = value.get<int>();
        else if (key == "z") config.z = value.get<double>();
        else if (key == "theta") config.theta = parse_angle(as_string(value));
        else if (key == "D") config.dissipation = value.get<double>();
        else if (key == "gamma") config.gamma = value.get<double>();
        else if (key == "t") config.time = value.get<double>();
        else if (key == "seed") config.seed = value.get<std::uint64_t>();
        else if (key == "trials") config.trials = value.get<long>();
        else if (key == "force") config.forced = parse_forced(as_string(value));
        else if (key == "parallel") config.parallel = value.get<bool>();
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

void validate(const RunConfig& config) {
    parse_protocol(config.protocol);
    rio::parse_channel(config.channel);
    if (!(config.z > 0.0)) throw std::invalid_argument("z must be > 0");
    if (!(config.theta >= 0.0)) throw std::invalid_argument("theta must be >= 0");
    const double d = config.effective_dissipation();
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("dissipation must be in [0, 1]");
    if (config.ripuo_m != 0 && config.ripuo_m != 1) {
        throw std::invalid_argument("m must be 0 or 1");
    }
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (config.alpha.has_value() != config.beta.has_value()) {
        throw std::invalid_argument("alpha and beta must be given together");
    }
    if (config.alpha && std::abs(std::norm(*config.alpha) + std::norm(*config.beta) - 1.0) > 1e-9) {
        throw std::invalid_argument("alpha and beta must satisfy |a|^2 + |b|^2 = 1");
    }
}

ojson execute_run(const RunConfig& config) {
    validate(config);
    const HomodyneModel model(config.z, config.theta, config.effective_dissipation());
    RandomStream rng(config.seed);

    cplx alpha, beta;
    if (config.alpha) {
        alpha = *config.alpha;
        beta = *config.beta;
    } else {
        rng.haar_qubit(alpha, beta);
    }
    const cplx u = config.u_phase ? std::polar(1.0, *config.u_phase) : rng.unit_phase();
    const cplx v = config.v_phase ? std::polar(1.0, *config.v_phase) : rng.unit_phase();
    const LumpOperator op = make_lump_operator(u, v);
    BranchState psi = make_input_state(alpha, beta);

    ProtocolResult result;
    if (parse_protocol(config.protocol) == Protocol::Riho) {
        result = run_riho(psi, op, rio::parse_channel(config.channel), model, rng,
                          config.forced);
    } else {
        result = run_ripuo(psi, sub_operator(op, config.ripuo_m), config.ripuo_m,
                           rio::parse_channel(config.channel), model, rng, config.forced);
    }

    ojson j;
    j["config"] = {{"protocol", config.protocol},
                   {"channel", config.channel},
                   {"alpha", {{"re", alpha.real()}, {"im", alpha.imag()}}},
                   {"beta", {{"re", beta.real()}, {"im", beta.imag()}}},
                   {"u", {{"re", u.real()}, {"im", u.imag()}}},
                   {"v", {{"re", v.real()}, {"im", v.imag()}}},
                   {"z", config.z},
                   {"theta", config.theta},
                   {"dissipation", config.effective_dissipation()},
                   {"seed", config.seed}};
    j["result"] = to_json(result);
    return j;
}

std::string render_sweep_csv(const RunConfig& config, const std::string& axis, double lo,
                             double hi, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    if (axis != "D" && axis != "z" && axis != "theta") {
        throw std::invalid_argument("sweep axis must be one of D, z, theta");
    }

    std::ostringstream out;
    out << "axis_value,p1suc,p2suc,P1,P2,P31,P32,P33,warning\n";
    for (int i = 0; i < steps; ++i) {
        const double value = lo + (hi - lo) * i / (steps - 1);
        double z = config.z, theta = config.theta, d = config.effective_dissipation();
        if (axis == "D") d = value;
        else if (axis == "z") z = value;
        else theta = value;
        const HomodyneModel model(z, theta, d);
        const SuccessProbabilities probs = success_probabilities(model);
        out << format_number(value) << ',' << format_number(probs.p1suc) << ','
            << format_number(probs.p2suc) << ',' << format_number(probs.p1) << ','
            << format_number(probs.p2) << ',' << format_number(probs.p31) << ','
            << format_number(probs.p32) << ',' << format_number(probs.p33) << ','
            << (distinguishability_warning(model) ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string render_mc_csv(const RunConfig& config) {
    validate(config);
    if (config.trials < 100) throw std::invalid_argument("mc needs at least 100 trials");

    McParams params;
    params.protocol = parse_protocol(config.protocol);
    params.channel = rio::parse_channel(config.channel);
    params.model = HomodyneModel(config.z, config.theta, config.effective_dissipation());
    if (config.u_phase && config.v_phase) {
        params.op = make_lump_operator(std::polar(1.0, *config.u_phase),
                                       std::polar(1.0, *config.v_phase));
    }
    if (config.alpha) params.input = std::make_pair(*config.alpha, *config.beta);
    if (params.protocol == Protocol::Ripuo) params.ripuo_choice = config.ripuo_m;
    params.trials = config.trials;
    params.seed = config.seed;
    params.parallel = config.parallel;

    const McSummary summary = run_monte_carlo(params);
    const SuccessProbabilities probs = success_probabilities(params.model);
    const double step4_expected = expected_misidentification(
        params.model, {{0, 0.25}, {1, 0.25}, {2, 0.25}, {3, 0.25}});

    auto sigma_ok = [](const StageStats& stats, double expected) {
        const double n = static_cast<double>(stats.samples);
        const double band = 3.0 * std::sqrt(std::max(expected * (1.0 - expected), 1e-12) / n);
        return std::abs(stats.rate() - expected) <= band;
    };

    std::ostringstream out;
    out << "metric,value\n";
    out << "trials," << summary.trials << '\n';
    out << "success_rate," << format_number(summary.success_rate()) << '\n';
    out << "p1suc_analytic," << format_number(probs.p1suc) << '\n';
    out << "p2suc_analytic," << format_number(probs.p2suc) << '\n';
    out << "step1_misid_count," << summary.step1.misidentified << '\n';
    out << "step1_misid_rate," << format_number(summary.step1.rate()) << '\n';
    out << "step1_expected," << format_number(probs.p1) << '\n';
    out << "step1_within_3sigma," << (sigma_ok(summary.step1, probs.p1) ? "true" : "false")
        << '\n';
    if (summary.step3.samples > 0) {
        out << "step3_misid_count," << summary.step3.misidentified << '\n';
        out << "step3_misid_rate," << format_number(summary.step3.rate()) << '\n';
        out << "step3_expected," << format_number(probs.p2) << '\n';
        out << "step3_within_3sigma,"
            << (sigma_ok(summary.step3, probs.p2) ? "true" : "false") << '\n';
    }
    out << "step4_misid_count," << summary.step4.misidentified << '\n';
    out << "step4_misid_rate," << format_number(summary.step4.rate()) << '\n';
    out << "step4_expected," << format_number(step4_expected) << '\n';
    out << "step4_within_3sigma," << (sigma_ok(summary.step4, step4_expected) ? "true" : "false")
        << '\n';
    out << "m_zero_fraction,"
        << format_number(summary.trials ? double(summary.m_zero) / double(summary.trials) : 0.0)
        << '\n';
    out << "warning," << (distinguishability_warning(params.model) ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace rio
