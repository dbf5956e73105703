#pragma once

#include <vector>

#include "rio/protocols.hpp"

namespace rio::detail {

// Runs with a correction table chosen independently of the channel actually
// shared; the controlled variants use this to model withheld or disclosed
// controller bits. An optional disclosure block is logged after the final
// readout, before the conditional correction it authorizes.

ProtocolResult run_riho_assumed(const BranchState& psi, const LumpOperator& op,
                                ChannelVariant true_channel, ChannelVariant assumed_channel,
                                const HomodyneModel& model, RandomStream& rng,
                                const ForcedOutcomes& forced,
                                const std::vector<ClassicalMessage>* disclosure);

ProtocolResult run_ripuo_assumed(const BranchState& psi, const Mat2& sub, int m_choice,
                                 ChannelVariant true_channel, ChannelVariant assumed_channel,
                                 const HomodyneModel& model, RandomStream& rng,
                                 const ForcedOutcomes& forced,
                                 const std::vector<ClassicalMessage>* disclosure);

}  // namespace rio::detail
