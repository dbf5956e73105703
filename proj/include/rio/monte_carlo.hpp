#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "rio/protocols.hpp"

namespace rio {

/// One Monte Carlo experiment. Unset optional inputs are drawn fresh per
/// trial: psi Haar-uniform, u/v as independent uniform phases, the
/// partially-unknown choice as a fair bit.
struct McParams {
    Protocol protocol = Protocol::Riho;
    ChannelVariant channel = ChannelVariant::OmegaPlus;
    HomodyneModel model{1.0, 3.141592653589793, 1.0};
    std::optional<LumpOperator> op;                 // fixed (u, v)
    std::optional<std::pair<cplx, cplx>> input;     // fixed (alpha, beta)
    std::optional<int> ripuo_choice;                // fixed m for Ripuo
    long trials = 10000;
    std::uint64_t seed = 1;
    bool parallel = false;
};

struct StageStats {
    long samples = 0;
    long misidentified = 0;

    double rate() const { return samples > 0 ? double(misidentified) / double(samples) : 0.0; }

    bool operator==(const StageStats&) const = default;
};

/// Aggregated counts. All fields are integer sums merged by trial index, so a
/// summary is a deterministic function of (seed, trials) in both the serial
/// and the OpenMP path.
struct McSummary {
    long trials = 0;
    long successes = 0;
    StageStats step1;
    StageStats step3;
    StageStats step4;
    long m_zero = 0;  // how often the diagonal sub-operator was realized

    double success_rate() const { return trials > 0 ? double(successes) / double(trials) : 0.0; }

    bool operator==(const McSummary&) const = default;
};

/// Serial reference loop. Kept alongside the parallel kernel as its oracle.
McSummary run_monte_carlo_serial(const McParams& params);

/// OpenMP kernel over trials; falls back to the serial loop when built
/// without OpenMP. Identical output to run_monte_carlo_serial.
McSummary run_monte_carlo_parallel(const McParams& params);

/// Dispatches on params.parallel.
McSummary run_monte_carlo(const McParams& params);

/// Fraction of trials ending within 1e-9 of unit fidelity.
double monte_carlo_success(const McParams& params);

}  // namespace rio
