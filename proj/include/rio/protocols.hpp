#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rio/branch_state.hpp"
#include "rio/homodyne.hpp"
#include "rio/lump.hpp"
#include "rio/rng.hpp"

namespace rio {

enum class Protocol { Riho, Ripuo };

const char* protocol_name(Protocol p);
Protocol parse_protocol(std::string_view name);

/// Deterministic overrides for the three readouts, used to reach every
/// outcome combination in tests. k: first entanglement readout; m: the
/// sub-operator readout (or Bob's choice); p, q: the final path readout.
struct ForcedOutcomes {
    std::optional<int> k;
    std::optional<int> m;
    std::optional<int> p;
    std::optional<int> q;

    bool any() const { return k || m || p || q; }
};

struct ClassicalMessage {
    std::string sender;
    std::string receiver;
    std::string tag;  // which outcome the bits carry: "k", "m", "pq", "r"
    std::vector<int> bits;
    int seq = 0;
};

struct Correction {
    std::string party;
    std::string photon;
    std::string op_name;
    std::string conditioned_on;  // tag of the message that authorizes it ("" = unconditional)
    int seq = 0;
};

struct TraceEvent {
    std::string step;
    std::string actor;
    std::string action;
    std::vector<int> outcome_bits;
    std::string state_digest;
};

struct ProtocolOutcomes {
    int k = -1;
    int m = -1;
    int p = -1;
    int q = -1;
};

struct ProtocolResult {
    BranchState final_state;
    ProtocolOutcomes outcomes;
    std::vector<Correction> corrections;
    std::vector<ClassicalMessage> classical_log;
    std::vector<TraceEvent> trace;
    double achieved_fidelity = 0.0;
    int target_suboperator = -1;

    MeasurementRecord step1_record;
    std::optional<MeasurementRecord> step3_record;
    MeasurementRecord step4_record;
};

struct Step1Result {
    BranchState state;
    MeasurementRecord record;
};

/// Shared opening step: entangle the input photon with the channel through
/// the probe (+theta on the input's first path, -theta on A's first path),
/// read out, and feed forward so the three photons end up path-aligned
/// (anti-aligned sign for the minus channels). `psi` must be a single-photon
/// state.
Step1Result riho_step1(const BranchState& psi, ChannelVariant channel,
                       const HomodyneModel& model, RandomStream& rng,
                       std::optional<int> forced_k = {});

/// Full hidden-operator run: Step1, Bob applies the whole lump operator, the
/// probe readout picks the diagonal (m=0) or antidiagonal (m=1) part, beam
/// splitters and a four-label readout disentangle the channel photons, and
/// the conditional phase flip lands the sub-operator on the input photon.
/// Fidelity is measured against |a_p b_q> (x) U_m|psi> built from the
/// classified outcome bits.
ProtocolResult run_riho(const BranchState& psi, const LumpOperator& op,
                        ChannelVariant channel, const HomodyneModel& model,
                        RandomStream& rng, const ForcedOutcomes& forced = {});

/// Partially-unknown-operator run: Bob applies a diagonal (m_choice = 0) or
/// antidiagonal (m_choice = 1) unitary directly; the closing step is the same
/// four-label readout with correction X_S^m Z_S^{p xor q} (xor 1 on the minus
/// channels). Throws ShapeMismatch when the operator's shape disagrees with
/// m_choice.
ProtocolResult run_ripuo(const BranchState& psi, const Mat2& sub, int m_choice,
                         ChannelVariant channel, const HomodyneModel& model,
                         RandomStream& rng, const ForcedOutcomes& forced = {});

/// Analytic success probabilities with the dissipation-shrunk peak spacing.
struct SuccessProbabilities {
    double p1suc = 0.0;  // 1 - p1 p2 (p31 + p32 + p33)
    double p2suc = 0.0;  // 1 - p1 (p31 + p32 + p33)
    double p1 = 0.0;
    double p2 = 0.0;
    double p31 = 0.0;
    double p32 = 0.0;
    double p33 = 0.0;
};

SuccessProbabilities success_probabilities(const HomodyneModel& model);

}  // namespace rio
