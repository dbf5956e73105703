#include "rio/branch_state.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace rio {

namespace {

constexpr double kDeadBranch = 1e-14;

bool key_less(const Branch& a, const Branch& b) {
    if (a.paths != b.paths) return a.paths < b.paths;
    return a.probe < b.probe;
}

bool key_equal(const Branch& a, const Branch& b) {
    return a.paths == b.paths && a.probe == b.probe;
}

}  // namespace

bool channel_is_pi(ChannelVariant v) {
    return v == ChannelVariant::PiPlus || v == ChannelVariant::PiMinus;
}

bool channel_is_minus(ChannelVariant v) {
    return v == ChannelVariant::OmegaMinus || v == ChannelVariant::PiMinus;
}

const char* channel_name(ChannelVariant v) {
    switch (v) {
        case ChannelVariant::OmegaPlus: return "omega+";
        case ChannelVariant::OmegaMinus: return "omega-";
        case ChannelVariant::PiPlus: return "pi+";
        case ChannelVariant::PiMinus: return "pi-";
    }
    return "?";
}

ChannelVariant parse_channel(std::string_view name) {
    if (name == "omega+" || name == "Omega+") return ChannelVariant::OmegaPlus;
    if (name == "omega-" || name == "Omega-") return ChannelVariant::OmegaMinus;
    if (name == "pi+" || name == "Pi+") return ChannelVariant::PiPlus;
    if (name == "pi-" || name == "Pi-") return ChannelVariant::PiMinus;
    throw std::invalid_argument("unknown channel: " + std::string(name));
}

BranchState::BranchState() : branches_{Branch{cplx{1.0}, 0, 0}} {}

BranchState::BranchState(std::vector<std::string> photons, std::vector<Branch> branches)
    : photons_(std::move(photons)), branches_(std::move(branches)) {
    canonicalize();
}

void BranchState::canonicalize() {
    std::sort(branches_.begin(), branches_.end(), key_less);
    std::vector<Branch> merged;
    merged.reserve(branches_.size());
    for (const Branch& b : branches_) {
        if (!merged.empty() && key_equal(merged.back(), b)) {
            merged.back().amplitude += b.amplitude;
        } else {
            merged.push_back(b);
        }
    }
    std::erase_if(merged, [](const Branch& b) { return std::abs(b.amplitude) <= kDeadBranch; });
    branches_ = std::move(merged);
}

int BranchState::photon_index(std::string_view label) const {
    for (std::size_t i = 0; i < photons_.size(); ++i) {
        if (photons_[i] == label) return static_cast<int>(i);
    }
    throw UnknownPhoton("no photon labelled " + std::string(label));
}

bool BranchState::has_photon(std::string_view label) const {
    return std::any_of(photons_.begin(), photons_.end(),
                       [&](const std::string& p) { return p == label; });
}

double BranchState::norm_squared() const {
    double total = 0.0;
    for (const Branch& b : branches_) total += std::norm(b.amplitude);
    return total;
}

BranchState BranchState::normalized() const {
    const double scale = 1.0 / std::sqrt(norm_squared());
    std::vector<Branch> scaled = branches_;
    for (Branch& b : scaled) b.amplitude *= scale;
    return BranchState(photons_, std::move(scaled));
}

BranchState make_input_state(cplx alpha, cplx beta, std::string label) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-9) {
        throw NotNormalized("make_input_state: |alpha|^2 + |beta|^2 must be 1");
    }
    return BranchState({std::move(label)},
                       {Branch{alpha, 0, 0}, Branch{beta, 1, 0}});
}

BranchState make_channel(ChannelVariant variant, std::string label_a, std::string label_b) {
    const cplx amp{kInvSqrt2};
    const cplx second = channel_is_minus(variant) ? -amp : amp;
    // paths: bit 0 = first photon, bit 1 = second photon
    std::uint32_t first_paths = channel_is_pi(variant) ? 0b10u : 0b00u;
    std::uint32_t second_paths = channel_is_pi(variant) ? 0b01u : 0b11u;
    return BranchState({std::move(label_a), std::move(label_b)},
                       {Branch{amp, first_paths, 0}, Branch{second, second_paths, 0}});
}

BranchState tensor(const BranchState& lhs, const BranchState& rhs) {
    std::unordered_set<std::string> seen(lhs.photons().begin(), lhs.photons().end());
    for (const std::string& label : rhs.photons()) {
        if (seen.count(label)) throw LabelCollision("tensor: duplicate photon label " + label);
    }
    std::vector<std::string> photons = lhs.photons();
    photons.insert(photons.end(), rhs.photons().begin(), rhs.photons().end());

    const int shift = lhs.photon_count();
    std::vector<Branch> branches;
    branches.reserve(lhs.branches().size() * rhs.branches().size());
    for (const Branch& a : lhs.branches()) {
        for (const Branch& b : rhs.branches()) {
            branches.push_back(Branch{a.amplitude * b.amplitude,
                                      a.paths | (b.paths << shift), a.probe + b.probe});
        }
    }
    return BranchState(std::move(photons), std::move(branches));
}

BranchState apply_path_operator(const BranchState& state, std::string_view photon,
                                const Mat2& op) {
    const int index = state.photon_index(photon);
    const std::uint32_t mask = 1u << index;
    std::vector<Branch> branches;
    branches.reserve(state.branches().size() * 2);
    for (const Branch& b : state.branches()) {
        const int in_path = (b.paths & mask) ? 1 : 0;
        for (int out_path = 0; out_path < 2; ++out_path) {
            const cplx entry = op.at(out_path, in_path);
            if (entry == cplx{0.0}) continue;
            std::uint32_t paths = (b.paths & ~mask) | (out_path ? mask : 0u);
            branches.push_back(Branch{entry * b.amplitude, paths, b.probe});
        }
    }
    return BranchState(state.photons(), std::move(branches));
}

BranchState apply_bbs(const BranchState& state, std::string_view photon) {
    return apply_path_operator(state, photon, gates::bbs());
}

BranchState cross_kerr(const BranchState& state, std::string_view photon, int path_index,
                       int shift) {
    const int index = state.photon_index(photon);
    const std::uint32_t mask = 1u << index;
    std::vector<Branch> branches = state.branches();
    for (Branch& b : branches) {
        const int occupied = (b.paths & mask) ? 1 : 0;
        if (occupied == path_index) b.probe += shift;
    }
    return BranchState(state.photons(), std::move(branches));
}

cplx overlap(const BranchState& lhs, const BranchState& rhs) {
    if (lhs.photons() != rhs.photons()) {
        throw LabelMismatch("overlap: photon labels differ");
    }
    cplx total{0.0};
    auto li = lhs.branches().begin();
    auto ri = rhs.branches().begin();
    while (li != lhs.branches().end() && ri != rhs.branches().end()) {
        if (key_equal(*li, *ri)) {
            total += std::conj(li->amplitude) * ri->amplitude;
            ++li;
            ++ri;
        } else if (key_less(*li, *ri)) {
            ++li;
        } else {
            ++ri;
        }
    }
    return total;
}

double fidelity(const BranchState& state, const BranchState& target) {
    // Rounding can push |<t|s>|^2 a few ulp past 1 for normalized inputs.
    return std::min(1.0, std::norm(overlap(target, state)));
}

double branch_distance(const BranchState& lhs, const BranchState& rhs) {
    if (lhs.photons() != rhs.photons()) {
        throw LabelMismatch("branch_distance: photon labels differ");
    }
    double worst = 0.0;
    auto li = lhs.branches().begin();
    auto ri = rhs.branches().begin();
    while (li != lhs.branches().end() || ri != rhs.branches().end()) {
        if (ri == rhs.branches().end() ||
            (li != lhs.branches().end() && key_less(*li, *ri))) {
            worst = std::max(worst, std::abs(li->amplitude));
            ++li;
        } else if (li == lhs.branches().end() || key_less(*ri, *li)) {
            worst = std::max(worst, std::abs(ri->amplitude));
            ++ri;
        } else {
            worst = std::max(worst, std::abs(li->amplitude - ri->amplitude));
            ++li;
            ++ri;
        }
    }
    return worst;
}

}  // namespace rio
