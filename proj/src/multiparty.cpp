#include "rio/multiparty.hpp"

#include <algorithm>
#include <cmath>

#include "protocols_detail.hpp"

namespace rio {

namespace {

std::vector<std::string> party_labels(int m_parties, int n_controllers, bool single_c) {
    std::vector<std::string> labels{"A"};
    for (int i = 1; i <= m_parties; ++i) labels.push_back("B" + std::to_string(i));
    if (single_c) {
        labels.push_back("C");
    } else {
        for (int j = 1; j <= n_controllers; ++j) labels.push_back("C" + std::to_string(j));
    }
    return labels;
}

GeneralChannel two_branch_channel(std::vector<std::string> labels, int phase_bit,
                                  int m_parties, int n_controllers) {
    const int count = static_cast<int>(labels.size());
    const cplx amp{kInvSqrt2};
    const cplx second = phase_bit ? -amp : amp;
    const std::uint32_t all_ones = (count == 32) ? ~0u : ((1u << count) - 1u);
    BranchState state(std::move(labels),
                      {Branch{amp, 0u, 0}, Branch{second, all_ones, 0}});
    return GeneralChannel{std::move(state), m_parties, n_controllers, phase_bit};
}

int read_phase_bit(const BranchState& state) {
    // Expect exactly the all-zeros and all-ones branches with real +-1/sqrt(2)
    // amplitudes; the relative sign is the phase bit.
    if (state.branches().size() != 2) {
        throw std::invalid_argument("channel state must have exactly two branches");
    }
    const cplx ratio = state.branches().back().amplitude / state.branches().front().amplitude;
    if (std::abs(ratio - cplx{1.0}) < 1e-9) return 0;
    if (std::abs(ratio + cplx{1.0}) < 1e-9) return 1;
    throw std::invalid_argument("channel branches are not related by a +-1 sign");
}

}  // namespace

GeneralChannel build_joint_channel(int m_parties) {
    if (m_parties < 1) throw BadArity("build_joint_channel: need at least one party");
    return two_branch_channel(party_labels(m_parties, 0, false), 0, m_parties, 0);
}

GeneralChannel build_controlled_joint_channel(int m_parties, int n_controllers, int r,
                                              ControllerForm form) {
    if (m_parties < 1) throw BadArity("build_controlled_joint_channel: need a party");
    if (n_controllers < 0) throw BadArity("build_controlled_joint_channel: bad controller count");
    if (form == ControllerForm::Qubits) {
        return two_branch_channel(party_labels(m_parties, n_controllers, false), 0, m_parties,
                                  n_controllers);
    }
    // One controller keeps only a classical secret: one fewer photon, the
    // secret encoded in the branch sign.
    const int remaining = n_controllers > 0 ? n_controllers - 1 : 0;
    return two_branch_channel(party_labels(m_parties, remaining, false), r & 1, m_parties,
                              n_controllers);
}

GeneralChannel build_chain_channel(int m_parties, int r1) {
    if (m_parties < 1) throw BadArity("build_chain_channel: need at least one party");
    return two_branch_channel(party_labels(m_parties, 0, true), r1 & 1, m_parties, 1);
}

BranchState build_cyclic_channel(int m_parties, ChannelVariant variant) {
    if (m_parties < 3) throw BadArity("build_cyclic_channel: a ring needs three parties");
    BranchState product;
    for (int i = 0; i < m_parties; ++i) {
        const std::string from = "P" + std::to_string(i + 1);
        const std::string to = "P" + std::to_string((i + 1) % m_parties + 1) + "'";
        product = tensor(product, make_channel(variant, from, to));
    }
    return product;
}

GeneralChannel controller_chain_apply(const GeneralChannel& channel,
                                      const std::vector<int>& bits) {
    BranchState state = channel.state;
    for (int bit : bits) {
        if (bit & 1) state = apply_path_operator(state, "C", gates::phase_flip());
    }
    GeneralChannel out = channel;
    out.state = state;
    out.n_controllers = channel.n_controllers + static_cast<int>(bits.size());
    out.phase_bit = read_phase_bit(state);
    return out;
}

std::pair<int, GeneralChannel> measure_control_qubit(const GeneralChannel& channel,
                                                     RandomStream& rng) {
    // Readout in the +/- path superposition basis keeps the remaining photons
    // entangled; the outcome bit folds into the channel sign.
    const int prior = read_phase_bit(channel.state);
    const int outcome = rng.bit();

    std::vector<std::string> labels = channel.state.photons();
    const int c_index = channel.state.photon_index("C");
    labels.erase(labels.begin() + c_index);

    const std::uint32_t low_mask = (1u << c_index) - 1u;
    std::vector<Branch> branches;
    for (const Branch& b : channel.state.branches()) {
        const int c_path = (b.paths >> c_index) & 1;
        const cplx weight = (c_path == 1 && outcome == 1) ? cplx{-kInvSqrt2}
                                                          : cplx{kInvSqrt2};
        const std::uint32_t rest =
            (b.paths & low_mask) | ((b.paths >> (c_index + 1)) << c_index);
        branches.push_back(Branch{b.amplitude * weight, rest, b.probe});
    }
    BranchState reduced = BranchState(std::move(labels), std::move(branches)).normalized();
    GeneralChannel out = channel;
    out.state = std::move(reduced);
    out.n_controllers = channel.n_controllers;
    out.phase_bit = prior ^ outcome;
    return {outcome, std::move(out)};
}

int ControllerChain::effective_bit() const {
    int sum = measured_bit.value_or(0);
    for (int bit : bits) sum += bit & 1;
    return sum & 1;
}

bool ControllerChain::fully_disclosed() const {
    if (disclosed.size() != bits.size()) return false;
    return std::all_of(disclosed.begin(), disclosed.end(), [](bool d) { return d; });
}

namespace {

struct ControlledSetup {
    ChannelVariant true_channel;
    ChannelVariant assumed_channel;
    std::vector<ClassicalMessage> disclosure;
};

ControlledSetup controlled_setup(const ControllerChain& chain, std::optional<int> assume_bit) {
    ControlledSetup setup{};
    const int r = chain.effective_bit();
    setup.true_channel = r ? ChannelVariant::OmegaMinus : ChannelVariant::OmegaPlus;
    if (chain.fully_disclosed()) {
        setup.assumed_channel = setup.true_channel;
        std::vector<int> bits = chain.bits;
        if (chain.measured_bit) bits.insert(bits.begin(), *chain.measured_bit);
        setup.disclosure.push_back(
            ClassicalMessage{"Charlie", "Alice,Bob", "r", std::move(bits), 0});
    } else {
        setup.assumed_channel = assume_bit.value_or(0) ? ChannelVariant::OmegaMinus
                                                       : ChannelVariant::OmegaPlus;
    }
    return setup;
}

}  // namespace

ProtocolResult run_controlled(Protocol protocol, const BranchState& psi,
                              const LumpOperator& op, const ControllerChain& chain,
                              const HomodyneModel& model, RandomStream& rng,
                              std::optional<int> assume_bit, const ForcedOutcomes& forced) {
    if (protocol != Protocol::Riho) {
        throw std::invalid_argument("run_controlled: lump operator form is the riho task");
    }
    ControlledSetup setup = controlled_setup(chain, assume_bit);
    return detail::run_riho_assumed(psi, op, setup.true_channel, setup.assumed_channel, model,
                                    rng, forced,
                                    setup.disclosure.empty() ? nullptr : &setup.disclosure);
}

ProtocolResult run_controlled(Protocol protocol, const BranchState& psi, const Mat2& sub,
                              int m_choice, const ControllerChain& chain,
                              const HomodyneModel& model, RandomStream& rng,
                              std::optional<int> assume_bit, const ForcedOutcomes& forced) {
    if (protocol != Protocol::Ripuo) {
        throw std::invalid_argument("run_controlled: sub-operator form is the ripuo task");
    }
    ControlledSetup setup = controlled_setup(chain, assume_bit);
    return detail::run_ripuo_assumed(psi, sub, m_choice, setup.true_channel,
                                     setup.assumed_channel, model, rng, forced,
                                     setup.disclosure.empty() ? nullptr : &setup.disclosure);
}

int resource_count(RioTask task, int m_parties) {
    switch (task) {
        case RioTask::Riho:
        case RioTask::Criho:
        case RioTask::Ripuo:
        case RioTask::Cripuo:
            return 1;
        case RioTask::Briho:
        case RioTask::Bripuo:
        case RioTask::Cbriho:
        case RioTask::Cbripuo:
            return 2;
        case RioTask::CyclicRiho:
        case RioTask::CyclicRipuo:
            if (m_parties < 3) throw BadArity("cyclic tasks need at least three parties");
            return m_parties;
        case RioTask::BidirectionalCyclic:
            if (m_parties < 3) throw BadArity("cyclic tasks need at least three parties");
            return 2 * m_parties;
        case RioTask::Ccripuo:
            return 3;
        case RioTask::Bccripuo:
            return 6;
    }
    throw std::invalid_argument("resource_count: unknown task");
}

}  // namespace rio
