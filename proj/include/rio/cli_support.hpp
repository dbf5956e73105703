#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rio/json_io.hpp"
#include "rio/monte_carlo.hpp"

namespace rio {

/// Everything a single run, sweep, or Monte Carlo batch needs. Unset optional
/// inputs mean "draw at random".
struct RunConfig {
    std::string protocol = "riho";
    std::string channel = "omega+";
    std::optional<cplx> alpha;
    std::optional<cplx> beta;
    std::optional<double> u_phase;
    std::optional<double> v_phase;
    int ripuo_m = 0;
    double z = 1.0;
    double theta = 3.141592653589793;
    std::optional<double> dissipation;  // direct D
    std::optional<double> gamma;        // or D = e^{-gamma t}
    std::optional<double> time;
    std::uint64_t seed = 1;
    long trials = 10000;
    ForcedOutcomes forced;
    bool parallel = false;

    /// Direct D wins; (gamma, t) is folded into D = e^{-gamma t}; default 1.
    double effective_dissipation() const;
};

/// Angle literals: plain floats plus "pi", "pi/4", "2pi", "3pi/4".
double parse_angle(const std::string& text);

/// Plain float with trailing-garbage rejection.
double parse_number(const std::string& text);

/// "0.6" or "0.6,0.8" (re,im).
cplx parse_complex(const std::string& text);

/// "k=0,m=1,pq=10" in any order and subset.
ForcedOutcomes parse_forced(const std::string& text);

/// Loads fields named like the flags from a JSON file; unknown keys rejected.
void apply_config_file(RunConfig& config, const std::string& path);

/// Throws std::invalid_argument with a usable message on any bad field.
void validate(const RunConfig& config);

/// One protocol run; the JSON carries outcomes, corrections, the classical
/// log, the trace, and the achieved fidelity.
ojson execute_run(const RunConfig& config);

/// Analytic sweep rows over D, z, or theta:
/// axis,p1suc,p2suc,p1,p2,p31,p32,p33,warning with 12 significant digits.
std::string render_sweep_csv(const RunConfig& config, const std::string& axis,
                             double lo, double hi, int steps);

/// Monte Carlo batch summary plus 3-sigma agreement flags against the
/// analytic per-stage misidentification rates.
std::string render_mc_csv(const RunConfig& config);

}  // namespace rio
