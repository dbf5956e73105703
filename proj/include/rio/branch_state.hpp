#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rio/mat2.hpp"

namespace rio {

/// One term of a path-basis superposition: a complex amplitude, one path bit
/// per photon (bit i of `paths` is photon i, 0 = first path), and the integer
/// phase index of the shared coherent probe (probe mode in |z e^{i n theta}>).
struct Branch {
    cplx amplitude;
    std::uint32_t paths = 0;
    std::int32_t probe = 0;
};

/// Which of the four path-entangled Bell channels is shared.
enum class ChannelVariant { OmegaPlus, OmegaMinus, PiPlus, PiMinus };

bool channel_is_pi(ChannelVariant v);
bool channel_is_minus(ChannelVariant v);
const char* channel_name(ChannelVariant v);
ChannelVariant parse_channel(std::string_view name);

/// Joint state of a set of labelled dual-rail photons plus the symbolic probe
/// mode, stored as a canonical branch list: branches sorted by (paths, probe),
/// duplicate keys merged by amplitude addition, and amplitudes below 1e-14
/// dropped. Values are immutable; every operation returns a new state.
class BranchState {
  public:
    /// The scalar unit: no photons, one branch of amplitude 1.
    BranchState();

    BranchState(std::vector<std::string> photons, std::vector<Branch> branches);

    const std::vector<std::string>& photons() const { return photons_; }
    const std::vector<Branch>& branches() const { return branches_; }

    int photon_count() const { return static_cast<int>(photons_.size()); }

    /// Index of a photon label; throws UnknownPhoton.
    int photon_index(std::string_view label) const;

    bool has_photon(std::string_view label) const;

    /// Sum of |amplitude|^2.
    double norm_squared() const;

    BranchState normalized() const;

  private:
    std::vector<std::string> photons_;
    std::vector<Branch> branches_;

    void canonicalize();
};

/// alpha |first path> + beta |second path> on a single photon; requires
/// |alpha|^2 + |beta|^2 = 1 within 1e-9 (NotNormalized otherwise).
BranchState make_input_state(cplx alpha, cplx beta, std::string label = "X");

/// Normalized two-photon Bell channel in the path basis.
BranchState make_channel(ChannelVariant variant, std::string label_a = "A",
                         std::string label_b = "B");

/// Product state; photon label sets must be disjoint (LabelCollision).
BranchState tensor(const BranchState& lhs, const BranchState& rhs);

/// Applies a 2x2 operator in one photon's path basis.
BranchState apply_path_operator(const BranchState& state, std::string_view photon,
                                const Mat2& op);

/// Balanced-beam-splitter mixing of one photon's two paths (self-inverse).
BranchState apply_bbs(const BranchState& state, std::string_view photon);

/// Adds `shift` to the probe index of every branch whose photon occupies
/// `path_index`; amplitudes are untouched.
BranchState cross_kerr(const BranchState& state, std::string_view photon,
                       int path_index, int shift);

/// <lhs|rhs>; photon label lists must match exactly (LabelMismatch). Branches
/// with distinct probe indices are treated as orthogonal, which is exact once
/// probes have been measured out or reset.
cplx overlap(const BranchState& lhs, const BranchState& rhs);

/// |<target|state>|^2 (global-phase invariant).
double fidelity(const BranchState& state, const BranchState& target);

/// Largest branch-wise amplitude difference between two states over the union
/// of their (paths, probe) keys.
double branch_distance(const BranchState& lhs, const BranchState& rhs);

}  // namespace rio
