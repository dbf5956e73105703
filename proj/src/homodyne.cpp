#include "rio/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rio/erfc.hpp"

namespace rio {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488016887242097;

// Signed residual phase a branch with probe index n carries after the probe
// was projected onto quadrature value x.
double residual_phase(const HomodyneModel& model, int n, double x) {
    if (n == 0) return 0.0;
    const double dz = model.dissipation * model.z;
    const double mean = 2.0 * dz * std::cos(std::abs(n) * model.theta);
    const double magnitude = (x - mean) * dz * std::sin(std::abs(n) * model.theta);
    return n < 0 ? -magnitude : magnitude;
}

// Tie-break order for labels: lower |n| first, then lower n.
bool label_preferred(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a < b;
}

struct Component {
    double mean = 0.0;
    double weight = 0.0;
    std::vector<int> labels;  // sorted by preference; front() is the representative
};

// Groups the labels present in `label_weights` by Gaussian centre. Labels
// whose centres coincide (e.g. +n/-n, or n and n+2 when theta folds the
// circle) form one component: the readout cannot separate them.
std::vector<Component> build_components(
    const HomodyneModel& model, const std::vector<std::pair<int, double>>& label_weights) {
    std::vector<std::pair<double, std::pair<int, double>>> by_mean;
    by_mean.reserve(label_weights.size());
    for (const auto& [label, weight] : label_weights) {
        by_mean.push_back({gaussian_mean(model, label), {label, weight}});
    }
    std::sort(by_mean.begin(), by_mean.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const double tol = 1e-9 * std::max(1.0, 2.0 * model.dissipation * model.z);
    std::vector<Component> components;
    for (const auto& [mean, lw] : by_mean) {
        if (components.empty() || mean - components.back().mean > tol) {
            components.push_back(Component{mean, 0.0, {}});
        }
        components.back().weight += lw.second;
        components.back().labels.push_back(lw.first);
    }
    for (Component& comp : components) {
        std::sort(comp.labels.begin(), comp.labels.end(), label_preferred);
    }
    return components;
}

int component_of(const std::vector<Component>& components, int label) {
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& labels = components[i].labels;
        if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

// Nearest-centre classification with deterministic tie-breaking.
int classify(const std::vector<Component>& components, double x) {
    int best = 0;
    double best_dist = std::abs(x - components[0].mean);
    for (std::size_t i = 1; i < components.size(); ++i) {
        const double dist = std::abs(x - components[i].mean);
        if (dist < best_dist - 1e-15 ||
            (std::abs(dist - best_dist) <= 1e-15 &&
             label_preferred(components[i].labels.front(), components[best].labels.front()))) {
            best = static_cast<int>(i);
            best_dist = dist;
        }
    }
    return components[best].labels.front();
}

// P(X < threshold) for X ~ Normal(mean, 1).
double gaussian_cdf(double threshold, double mean) {
    return 0.5 * rio::erfc((mean - threshold) / kSqrt2);
}

}  // namespace

HomodyneModel::HomodyneModel(double z_in, double theta_in, double dissipation_in)
    : z(z_in), theta(theta_in), dissipation(dissipation_in) {
    if (!(z > 0.0)) throw std::invalid_argument("homodyne model: z must be > 0");
    if (!(theta >= 0.0)) throw std::invalid_argument("homodyne model: theta must be >= 0");
    if (!(dissipation >= 0.0 && dissipation <= 1.0)) {
        throw std::invalid_argument("homodyne model: dissipation must be in [0, 1]");
    }
}

HomodyneModel HomodyneModel::from_gamma_t(double z, double theta, double gamma, double t) {
    return HomodyneModel(z, theta, std::exp(-gamma * t));
}

double gaussian_mean(const HomodyneModel& model, int n) {
    return 2.0 * model.dissipation * model.z * std::cos(std::abs(n) * model.theta);
}

double classification_threshold(const HomodyneModel& model, int n1, int n2) {
    return 0.5 * (gaussian_mean(model, n1) + gaussian_mean(model, n2));
}

double pairwise_error(const HomodyneModel& model, int n1, int n2) {
    const double dz = model.dissipation * model.z;
    const double gap =
        dz * (std::cos(std::abs(n1) * model.theta) - std::cos(std::abs(n2) * model.theta));
    return 0.5 * rio::erfc(gap / kSqrt2);
}

std::array<double, 3> step4_error_triple(const HomodyneModel& model) {
    return {pairwise_error(model, 0, 1), pairwise_error(model, 1, 2),
            pairwise_error(model, 2, 3)};
}

bool distinguishability_warning(const HomodyneModel& model) {
    if (model.dissipation * model.z * model.theta * model.theta <= 1.0) return true;
    for (int n = 0; n < 3; ++n) {
        if (!(gaussian_mean(model, n) > gaussian_mean(model, n + 1))) return true;
    }
    return false;
}

HomodyneOutcome sample_homodyne(const BranchState& state, const HomodyneModel& model,
                                RandomStream& rng, std::optional<int> forced_label,
                                std::optional<double> forced_x) {
    std::map<int, double> weights;
    bool any_probe = false;
    for (const Branch& b : state.branches()) {
        weights[b.probe] += std::norm(b.amplitude);
        if (b.probe != 0) any_probe = true;
    }
    if (!any_probe) {
        throw NoProbe("sample_homodyne: no branch carries a probe phase");
    }

    std::vector<std::pair<int, double>> label_weights(weights.begin(), weights.end());
    const double total = state.norm_squared();
    for (auto& [label, weight] : label_weights) weight /= total;
    const std::vector<Component> components = build_components(model, label_weights);

    int true_component;
    if (forced_label) {
        true_component = component_of(components, *forced_label);
        if (true_component < 0) {
            throw std::invalid_argument("sample_homodyne: forced label not present");
        }
    } else {
        double draw = rng.uniform01();
        true_component = static_cast<int>(components.size()) - 1;
        for (std::size_t i = 0; i < components.size(); ++i) {
            draw -= components[i].weight;
            if (draw < 0.0) {
                true_component = static_cast<int>(i);
                break;
            }
        }
    }

    double x;
    if (forced_x) {
        x = *forced_x;
    } else if (forced_label) {
        // Deterministic but off-centre, so feed-forward has a real phase to undo.
        x = components[true_component].mean + 0.25;
    } else {
        x = components[true_component].mean + rng.standard_normal();
    }

    const int classified = forced_label ? *forced_label : classify(components, x);

    MeasurementRecord record;
    record.sampled_x = x;
    record.classified_label = classified;
    record.true_label = components[true_component].labels.front();
    record.misidentified =
        forced_label ? false : component_of(components, classified) != true_component;
    record.feed_forward_phase = residual_phase(model, std::abs(classified), x);

    // Collapse: the true component's branches survive with their residual
    // phases, the probe returns to |z>.
    const auto& keep = components[true_component].labels;
    std::vector<Branch> survivors;
    for (const Branch& b : state.branches()) {
        if (std::find(keep.begin(), keep.end(), b.probe) == keep.end()) continue;
        const double phase = residual_phase(model, b.probe, x);
        survivors.push_back(Branch{b.amplitude * std::polar(1.0, phase), b.paths, 0});
    }
    BranchState collapsed = BranchState(state.photons(), std::move(survivors)).normalized();
    return HomodyneOutcome{record, std::move(collapsed)};
}

BranchState apply_feed_forward(const BranchState& state, const MeasurementRecord& record,
                               const FeedForward& ff) {
    if (record.classified_label == 0) return state;
    const double phi = record.feed_forward_phase;
    // The +theta branch sits on the phase photon's second path: undo e^{+i phi}
    // there and e^{-i phi} on the first path.
    BranchState out = apply_path_operator(state, ff.phase_photon, gates::path_phase(phi, -phi));
    for (const auto& [photon, op] : ff.path_flips) {
        out = apply_path_operator(out, photon, op);
    }
    return out;
}

double expected_misidentification(const HomodyneModel& model,
                                  const std::vector<std::pair<int, double>>& label_weights) {
    const std::vector<Component> components = build_components(model, label_weights);
    if (components.size() < 2) return 0.0;

    // Decision boundaries are midpoints between adjacent centres; each region
    // classifies to its own component.
    double misid = 0.0;
    for (std::size_t truth = 0; truth < components.size(); ++truth) {
        const double mean = components[truth].mean;
        double lo = truth == 0 ? -1e308
                               : 0.5 * (components[truth - 1].mean + components[truth].mean);
        double hi = truth + 1 == components.size()
                        ? 1e308
                        : 0.5 * (components[truth].mean + components[truth + 1].mean);
        const double correct = gaussian_cdf(hi, mean) - gaussian_cdf(lo, mean);
        misid += components[truth].weight * (1.0 - correct);
    }
    return misid;
}

}  // namespace rio
