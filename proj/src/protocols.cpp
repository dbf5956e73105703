#include "rio/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "rio/json_io.hpp"

namespace rio {

const char* protocol_name(Protocol p) { return p == Protocol::Riho ? "riho" : "ripuo"; }

Protocol parse_protocol(std::string_view name) {
    if (name == "riho") return Protocol::Riho;
    if (name == "ripuo") return Protocol::Ripuo;
    throw std::invalid_argument("unknown protocol: " + std::string(name));
}

namespace {

constexpr const char* kAlice = "Alice";
constexpr const char* kBob = "Bob";

/// Book-keeping shared by the runs: sequence-numbered messages and
/// corrections so tests can check that every conditional correction was
/// authorized by an earlier broadcast.
struct Runner {
    ProtocolResult result;
    int seq = 0;

    void message(std::string sender, std::string receiver, std::string tag,
                 std::vector<int> bits) {
        result.classical_log.push_back(ClassicalMessage{std::move(sender), std::move(receiver),
                                                        std::move(tag), std::move(bits), seq++});
    }

    void correction(std::string party, std::string photon, std::string op_name,
                    std::string conditioned_on) {
        result.corrections.push_back(Correction{std::move(party), std::move(photon),
                                                std::move(op_name), std::move(conditioned_on),
                                                seq++});
    }

    void trace(std::string step, std::string actor, std::string action,
               std::vector<int> bits, const BranchState& state) {
        result.trace.push_back(TraceEvent{std::move(step), std::move(actor), std::move(action),
                                          std::move(bits), state_digest(state)});
    }
};

void check_input_photon(const BranchState& psi) {
    if (psi.photon_count() != 1) {
        throw std::invalid_argument("protocol input must be a single-photon state");
    }
    if (std::abs(psi.norm_squared() - 1.0) > 1e-9) {
        throw NotNormalized("protocol input state must be normalized");
    }
}

std::optional<int> forced_label_for_bit(std::optional<int> forced_bit) {
    if (!forced_bit) return {};
    return *forced_bit == 0 ? 0 : 1;
}

/// Entangles the input photon with the channel and aligns the paths.
/// After this step the three photons carry alpha |000> + beta |111> with a
/// relative minus sign for the minus channels.
BranchState do_step1(Runner& run, const BranchState& psi, ChannelVariant channel,
                     const HomodyneModel& model, RandomStream& rng,
                     std::optional<int> forced_k, MeasurementRecord& record_out) {
    check_input_photon(psi);
    const std::string& x_label = psi.photons().front();

    BranchState state = tensor(psi, make_channel(channel));
    state = cross_kerr(state, x_label, 0, +1);
    state = cross_kerr(state, "A", 0, -1);
    run.trace("step1", kAlice, "kerr_tag_input_and_A", {}, state);

    HomodyneOutcome outcome =
        sample_homodyne(state, model, rng, forced_label_for_bit(forced_k));
    record_out = outcome.record;
    state = std::move(outcome.state);
    const int k = outcome.record.classified_label != 0 ? 1 : 0;
    run.result.outcomes.k = k;
    run.trace("step1", kAlice, "homodyne_readout", {k}, state);
    run.message(kAlice, kBob, "k", {k});

    if (k == 1) {
        FeedForward ff;
        ff.phase_photon = "A";
        ff.path_flips.push_back({"A", gates::path_flip()});
        run.correction(kAlice, "A", "phase_feed_forward", "k");
        run.correction(kAlice, "A", "X_S", "k");
        if (!channel_is_pi(channel)) {
            ff.path_flips.push_back({"B", gates::path_flip()});
            run.correction(kBob, "B", "X_S", "k");
        }
        state = apply_feed_forward(state, outcome.record, ff);
    } else if (channel_is_pi(channel)) {
        // The pi channels anti-align A and B, so the clean readout is the one
        // that needs Bob's flip.
        state = apply_path_operator(state, "B", gates::path_flip());
        run.correction(kBob, "B", "X_S", "k");
    }
    run.trace("step1", "both", "feed_forward", {}, state);
    return state;
}

BranchState basis_ab(int p, int q) {
    const std::uint32_t paths = static_cast<std::uint32_t>(p) |
                                (static_cast<std::uint32_t>(q) << 1);
    return BranchState({"A", "B"}, {Branch{cplx{1.0}, paths, 0}});
}

struct ClosingOutcome {
    int p = 0;
    int q = 0;
};

/// Beam splitters on A and B, the four-label probe readout, and the outcome
/// broadcast. The correction itself is left to the caller since the two
/// protocols condition it differently.
ClosingOutcome do_closing_readout(Runner& run, BranchState& state, const HomodyneModel& model,
                                  RandomStream& rng, const ForcedOutcomes& forced,
                                  MeasurementRecord& record_out) {
    state = apply_bbs(state, "A");
    state = apply_bbs(state, "B");
    state = cross_kerr(state, "A", 1, +1);
    state = cross_kerr(state, "B", 1, +2);
    run.trace("closing", "both", "bbs_and_kerr_tag", {}, state);

    std::optional<int> forced_n;
    if (forced.p || forced.q) {
        if (!forced.p || !forced.q) {
            throw std::invalid_argument("forced outcomes: p and q must be forced together");
        }
        forced_n = (*forced.p & 1) + 2 * (*forced.q & 1);
    }
    HomodyneOutcome outcome = sample_homodyne(state, model, rng, forced_n);
    record_out = outcome.record;
    state = std::move(outcome.state);

    ClosingOutcome bits;
    bits.p = outcome.record.classified_label & 1;
    bits.q = (outcome.record.classified_label >> 1) & 1;
    run.result.outcomes.p = bits.p;
    run.result.outcomes.q = bits.q;
    run.trace("closing", kBob, "homodyne_readout", {bits.p, bits.q}, state);
    run.message(kBob, kAlice, "pq", {bits.p, bits.q});
    return bits;
}

void finish_result(Runner& run, BranchState state, const BranchState& psi, const Mat2& sub,
                   int sub_bit, int p, int q) {
    BranchState target = tensor(apply_path_operator(psi, psi.photons().front(), sub),
                                basis_ab(p, q));
    run.result.final_state = std::move(state);
    run.result.target_suboperator = sub_bit;
    run.result.achieved_fidelity = fidelity(run.result.final_state, target);
    run.trace("done", "both", "compare_with_target", {}, run.result.final_state);
}

ProtocolResult run_riho_impl(const BranchState& psi, const LumpOperator& op,
                             ChannelVariant true_channel, ChannelVariant assumed_channel,
                             const HomodyneModel& model, RandomStream& rng,
                             const ForcedOutcomes& forced,
                             const std::vector<ClassicalMessage>* disclosure) {
    Runner run;
    const std::string x_label = psi.photons().front();

    BranchState state =
        do_step1(run, psi, true_channel, model, rng, forced.k, run.result.step1_record);

    state = apply_path_operator(state, "B", lump_matrix(op));
    run.trace("step2", kBob, "apply_lump_operator", {}, state);

    // The probe picks out the diagonal (m = 0) or antidiagonal (m = 1) part.
    state = cross_kerr(state, "A", 0, +1);
    state = cross_kerr(state, "B", 0, -1);
    MeasurementRecord step3{};
    HomodyneOutcome outcome =
        sample_homodyne(state, model, rng, forced_label_for_bit(forced.m));
    step3 = outcome.record;
    state = std::move(outcome.state);
    const int m = outcome.record.classified_label != 0 ? 1 : 0;
    run.result.outcomes.m = m;
    run.result.step3_record = step3;
    run.trace("step3", kBob, "homodyne_readout", {m}, state);
    run.message(kBob, kAlice, "m", {m});
    if (m == 1) {
        FeedForward ff;
        ff.phase_photon = "B";
        ff.path_flips.push_back({x_label, gates::path_flip()});
        run.correction(kBob, "B", "phase_feed_forward", "m");
        run.correction(kAlice, x_label, "X_S", "m");
        state = apply_feed_forward(state, step3, ff);
    }
    run.trace("step3", "both", "feed_forward", {}, state);

    ClosingOutcome bits = do_closing_readout(run, state, model, rng, forced,
                                             run.result.step4_record);
    if (disclosure) {
        for (const ClassicalMessage& msg : *disclosure) {
            run.message(msg.sender, msg.receiver, msg.tag, msg.bits);
        }
    }
    const int z_exponent = bits.p ^ bits.q ^ (channel_is_minus(assumed_channel) ? 1 : 0);
    if (z_exponent) {
        state = apply_path_operator(state, x_label, gates::phase_flip());
        run.correction(kAlice, x_label, "Z_S", "pq");
    }

    finish_result(run, std::move(state), psi, sub_operator(op, m), m, bits.p, bits.q);
    return std::move(run.result);
}

ProtocolResult run_ripuo_impl(const BranchState& psi, const Mat2& sub, int m_choice,
                              ChannelVariant true_channel, ChannelVariant assumed_channel,
                              const HomodyneModel& model, RandomStream& rng,
                              const ForcedOutcomes& forced,
                              const std::vector<ClassicalMessage>* disclosure) {
    if (m_choice != 0 && m_choice != 1) {
        throw std::invalid_argument("run_ripuo: m_choice must be 0 or 1");
    }
    const MatrixShape shape = classify_rotation(sub);
    const MatrixShape wanted = m_choice == 0 ? MatrixShape::Diagonal : MatrixShape::Antidiagonal;
    if (shape != wanted) {
        throw ShapeMismatch("run_ripuo: operator shape disagrees with m_choice");
    }

    Runner run;
    const std::string x_label = psi.photons().front();

    BranchState state =
        do_step1(run, psi, true_channel, model, rng, forced.k, run.result.step1_record);

    state = apply_path_operator(state, "B", sub);
    run.result.outcomes.m = m_choice;
    run.trace("step2", kBob, "apply_sub_operator", {m_choice}, state);

    ClosingOutcome bits = do_closing_readout(run, state, model, rng, forced,
                                             run.result.step4_record);
    if (disclosure) {
        for (const ClassicalMessage& msg : *disclosure) {
            run.message(msg.sender, msg.receiver, msg.tag, msg.bits);
        }
    }
    run.message(kBob, kAlice, "m", {m_choice});
    const int z_exponent = bits.p ^ bits.q ^ (channel_is_minus(assumed_channel) ? 1 : 0);
    if (z_exponent) {
        state = apply_path_operator(state, x_label, gates::phase_flip());
        run.correction(kAlice, x_label, "Z_S", "pq");
    }
    if (m_choice == 1) {
        state = apply_path_operator(state, x_label, gates::path_flip());
        run.correction(kAlice, x_label, "X_S", "m");
    }

    finish_result(run, std::move(state), psi, sub, m_choice, bits.p, bits.q);
    return std::move(run.result);
}

}  // namespace

Step1Result riho_step1(const BranchState& psi, ChannelVariant channel,
                       const HomodyneModel& model, RandomStream& rng,
                       std::optional<int> forced_k) {
    Runner run;
    MeasurementRecord record;
    BranchState state = do_step1(run, psi, channel, model, rng, forced_k, record);
    return Step1Result{std::move(state), record};
}

ProtocolResult run_riho(const BranchState& psi, const LumpOperator& op,
                        ChannelVariant channel, const HomodyneModel& model,
                        RandomStream& rng, const ForcedOutcomes& forced) {
    return run_riho_impl(psi, op, channel, channel, model, rng, forced, nullptr);
}

ProtocolResult run_ripuo(const BranchState& psi, const Mat2& sub, int m_choice,
                         ChannelVariant channel, const HomodyneModel& model,
                         RandomStream& rng, const ForcedOutcomes& forced) {
    return run_ripuo_impl(psi, sub, m_choice, channel, channel, model, rng, forced, nullptr);
}

SuccessProbabilities success_probabilities(const HomodyneModel& model) {
    SuccessProbabilities out;
    out.p1 = pairwise_error(model, 0, 1);
    out.p2 = pairwise_error(model, 0, 1);
    const auto triple = step4_error_triple(model);
    out.p31 = triple[0];
    out.p32 = triple[1];
    out.p33 = triple[2];
    const double closing = out.p31 + out.p32 + out.p33;
    out.p1suc = 1.0 - out.p1 * out.p2 * closing;
    out.p2suc = 1.0 - out.p1 * closing;
    return out;
}

namespace detail {

ProtocolResult run_riho_assumed(const BranchState& psi, const LumpOperator& op,
                                ChannelVariant true_channel, ChannelVariant assumed_channel,
                                const HomodyneModel& model, RandomStream& rng,
                                const ForcedOutcomes& forced,
                                const std::vector<ClassicalMessage>* disclosure) {
    return run_riho_impl(psi, op, true_channel, assumed_channel, model, rng, forced,
                         disclosure);
}

ProtocolResult run_ripuo_assumed(const BranchState& psi, const Mat2& sub, int m_choice,
                                 ChannelVariant true_channel, ChannelVariant assumed_channel,
                                 const HomodyneModel& model, RandomStream& rng,
                                 const ForcedOutcomes& forced,
                                 const std::vector<ClassicalMessage>* disclosure) {
    return run_ripuo_impl(psi, sub, m_choice, true_channel, assumed_channel, model, rng,
                          forced, disclosure);
}

}  // namespace detail

}  // namespace rio
