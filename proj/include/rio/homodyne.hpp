#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rio/branch_state.hpp"
#include "rio/rng.hpp"

namespace rio {

/// Parameters of the probe and its X-quadrature readout. A branch carrying
/// probe index n reads out as a unit-variance Gaussian centred on
/// 2 * dissipation * z * cos(n * theta).
struct HomodyneModel {
    double z;            // probe amplitude, > 0
    double theta;        // cross-Kerr phase per interaction, >= 0
    double dissipation;  // D = e^{-gamma t}, in [0, 1]

    HomodyneModel(double z_in, double theta_in, double dissipation_in = 1.0);

    static HomodyneModel from_gamma_t(double z, double theta, double gamma, double t);
};

/// Gaussian centre for probe index n: 2 D z cos(n theta).
double gaussian_mean(const HomodyneModel& model, int n);

/// Midpoint threshold between the centres of labels n1 and n2.
double classification_threshold(const HomodyneModel& model, int n1, int n2);

/// Misidentification probability between two labels with a midpoint
/// threshold: erfc(D z (cos(n1 theta) - cos(n2 theta)) / sqrt(2)) / 2.
/// Antisymmetric under swapping: p(n2, n1) = 1 - p(n1, n2).
double pairwise_error(const HomodyneModel& model, int n1, int n2);

/// Adjacent-pair errors for the four-label readout: pairs (0,1), (1,2), (2,3).
std::array<double, 3> step4_error_triple(const HomodyneModel& model);

/// True when the operating point leaves the ordered-threshold error formulas
/// without physical meaning: peak separation D z theta^2 <= 1, or the
/// four-label centres 2 D z cos(n theta), n = 0..3, are not strictly
/// decreasing (theta > pi/3).
bool distinguishability_warning(const HomodyneModel& model);

struct MeasurementRecord {
    double sampled_x = 0.0;
    int classified_label = 0;  // nearest-centre label; ties -> lower |n|, then lower n
    int true_label = 0;        // representative of the component actually sampled
    bool misidentified = false;
    /// phi(x) = (x - 2 D z cos(|n| theta)) * D z sin(|n| theta) for the
    /// classified label n; the residual phase the feed-forward step removes.
    double feed_forward_phase = 0.0;
};

struct HomodyneOutcome {
    MeasurementRecord record;
    BranchState state;
};

/// X-quadrature readout of the probe.
///
/// Labels sharing a Gaussian centre are one component: they cannot be told
/// apart and all survive the collapse together. The true component is drawn
/// from branch weights, x from its unit-variance Gaussian, and the classified
/// label is the nearest centre. The collapsed state keeps the true
/// component's branches with their residual phases e^{i phi_n(x)}, probe
/// indices reset to 0, renormalized.
///
/// forced_label pins both the true component and the classification
/// (misidentified = false); x defaults to the component centre plus a fixed
/// offset so feed-forward still has a nonzero phase to cancel.
///
/// Throws NoProbe when no branch carries a nonzero probe index.
HomodyneOutcome sample_homodyne(const BranchState& state, const HomodyneModel& model,
                                RandomStream& rng, std::optional<int> forced_label = {},
                                std::optional<double> forced_x = {});

/// Classical feed-forward after a readout that classified the +/- component:
/// which photon's second path marks the +theta branch, and which path flips
/// follow the phase removal.
struct FeedForward {
    std::string phase_photon;
    std::vector<std::pair<std::string, Mat2>> path_flips;
};

/// Removes the residual phases e^{+/- i phi(x)} (conditioned on
/// ff.phase_photon's path) and applies ff.path_flips. A record classified as
/// label 0 means nothing is pending: the state is returned unchanged.
BranchState apply_feed_forward(const BranchState& state, const MeasurementRecord& record,
                               const FeedForward& ff);

/// Probability that nearest-centre classification of a sample drawn from the
/// given label mixture lands outside the true label's component. Labels are
/// (probe index, weight) pairs; weights must sum to 1.
double expected_misidentification(const HomodyneModel& model,
                                  const std::vector<std::pair<int, double>>& label_weights);

}  // namespace rio
