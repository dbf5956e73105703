#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rio/protocols.hpp"

namespace rio {

/// Two-branch channel over A, B^1..B^M and (optionally) controller photons:
/// all photons on their first paths plus, with sign (-1)^phase_bit, all
/// photons on their second paths.
struct GeneralChannel {
    BranchState state;
    int m_parties = 1;
    int n_controllers = 0;
    int phase_bit = 0;
};

enum class ControllerForm {
    Qubits,       // every controller holds an entangled photon
    ClassicalBit  // one controller replaced by a secret preparation bit
};

/// Channel for M parties acting jointly: photons A, B1..BM. BadArity if M < 1.
GeneralChannel build_joint_channel(int m_parties);

/// Joint channel with N controllers. Qubits form adds photons C1..CN;
/// ClassicalBit form drops one controller photon and encodes their secret r
/// in the branch sign. BadArity if M < 1 or N < 0.
GeneralChannel build_controlled_joint_channel(int m_parties, int n_controllers, int r,
                                              ControllerForm form = ControllerForm::Qubits);

/// Cooperating-controllers channel: M parties plus a single shared photon C
/// prepared with sign (-1)^r1 by the first controller.
GeneralChannel build_chain_channel(int m_parties, int r1);

/// Ring of m independent Bell pairs for the cyclic tasks: pair i connects
/// party i to party i+1 (endpoints Pi and P(i+1 mod m)'), so every party
/// holds one unprimed and one primed photon. Construction only; each pair
/// runs its own two-party protocol. BadArity if m < 3.
BranchState build_cyclic_channel(int m_parties,
                                 ChannelVariant variant = ChannelVariant::OmegaPlus);

/// Remaining controllers act on photon C in turn, each applying the phase
/// flip to the power of their secret bit. The resulting sign is
/// (-1)^(r1 + sum of bits).
GeneralChannel controller_chain_apply(const GeneralChannel& channel,
                                      const std::vector<int>& bits);

/// First controller's readout of photon C in the +/- superposition basis:
/// removes C and returns (outcome bit r0, reduced channel). The reduced
/// channel's sign is the prior sign xor r0.
std::pair<int, GeneralChannel> measure_control_qubit(const GeneralChannel& channel,
                                                     RandomStream& rng);

/// Secret bits held by the controllers. The effective channel is the plus
/// variant when the bit sum is even, the minus variant when odd. Completion
/// requires each bit disclosed.
struct ControllerChain {
    std::vector<int> bits;
    std::vector<bool> disclosed;
    std::optional<int> measured_bit;  // r0 from measure_control_qubit, when used

    int effective_bit() const;
    bool fully_disclosed() const;
};

/// Controlled two-party run: the controllers secretly fix the plus/minus
/// channel. With every bit disclosed, Alice and Bob apply the matching
/// correction table (disclosure is logged before the conditional correction);
/// with bits withheld they fall back on assume_bit, and a wrong guess shows
/// up as lost fidelity.
ProtocolResult run_controlled(Protocol protocol, const BranchState& psi,
                              const LumpOperator& op, const ControllerChain& chain,
                              const HomodyneModel& model, RandomStream& rng,
                              std::optional<int> assume_bit = {},
                              const ForcedOutcomes& forced = {});

ProtocolResult run_controlled(Protocol protocol, const BranchState& psi, const Mat2& sub,
                              int m_choice, const ControllerChain& chain,
                              const HomodyneModel& model, RandomStream& rng,
                              std::optional<int> assume_bit = {},
                              const ForcedOutcomes& forced = {});

enum class RioTask {
    Riho,
    Criho,
    Ripuo,
    Cripuo,
    Briho,
    Bripuo,
    Cbriho,
    Cbripuo,
    CyclicRiho,
    CyclicRipuo,
    BidirectionalCyclic,
    Ccripuo,
    Bccripuo,
};

/// Bell pairs consumed by each task. Cyclic tasks take the party count m
/// (>= 3); BadArity otherwise.
int resource_count(RioTask task, int m_parties = 0);

}  // namespace rio
