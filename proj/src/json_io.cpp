#include "rio/json_io.hpp"

#include <cstdint>
#include <cstdio>

namespace rio {

namespace {

std::vector<int> path_bits(const BranchState& state, const Branch& b) {
    std::vector<int> bits(static_cast<std::size_t>(state.photon_count()));
    for (int i = 0; i < state.photon_count(); ++i) {
        bits[static_cast<std::size_t>(i)] = (b.paths >> i) & 1;
    }
    return bits;
}

void fnv_mix(std::uint64_t& hash, const char* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        hash ^= static_cast<unsigned char>(data[i]);
        hash *= 0x100000001b3ULL;
    }
}

}  // namespace

ojson to_json(const BranchState& state) {
    ojson j;
    j["photons"] = state.photons();
    ojson branches = ojson::array();
    for (const Branch& b : state.branches()) {
        ojson entry;
        entry["re"] = b.amplitude.real();
        entry["im"] = b.amplitude.imag();
        entry["paths"] = path_bits(state, b);
        entry["probe"] = b.probe;
        branches.push_back(std::move(entry));
    }
    j["branches"] = std::move(branches);
    return j;
}

BranchState branch_state_from_json(const ojson& j) {
    std::vector<std::string> photons = j.at("photons").get<std::vector<std::string>>();
    std::vector<Branch> branches;
    for (const ojson& entry : j.at("branches")) {
        Branch b;
        b.amplitude = cplx{entry.at("re").get<double>(), entry.at("im").get<double>()};
        const auto bits = entry.at("paths").get<std::vector<int>>();
        if (bits.size() != photons.size()) {
            throw std::invalid_argument("branch path list does not match photon count");
        }
        b.paths = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i]) b.paths |= (1u << i);
        }
        b.probe = entry.at("probe").get<std::int32_t>();
        branches.push_back(b);
    }
    return BranchState(std::move(photons), std::move(branches));
}

ojson to_json(const MeasurementRecord& record) {
    ojson j;
    j["sampled_x"] = record.sampled_x;
    j["classified_label"] = record.classified_label;
    j["true_label"] = record.true_label;
    j["misidentified"] = record.misidentified;
    j["feed_forward_phase"] = record.feed_forward_phase;
    return j;
}

ojson to_json(const ProtocolResult& result) {
    ojson j;
    j["outcomes"] = {{"k", result.outcomes.k},
                     {"m", result.outcomes.m},
                     {"p", result.outcomes.p},
                     {"q", result.outcomes.q}};
    j["target_suboperator"] = result.target_suboperator;
    j["achieved_fidelity"] = result.achieved_fidelity;

    ojson corrections = ojson::array();
    for (const Correction& c : result.corrections) {
        corrections.push_back({{"party", c.party},
                               {"photon", c.photon},
                               {"op", c.op_name},
                               {"conditioned_on", c.conditioned_on},
                               {"seq", c.seq}});
    }
    j["corrections_applied"] = std::move(corrections);

    ojson log = ojson::array();
    for (const ClassicalMessage& msg : result.classical_log) {
        log.push_back({{"sender", msg.sender},
                       {"receiver", msg.receiver},
                       {"tag", msg.tag},
                       {"bits", msg.bits},
                       {"seq", msg.seq}});
    }
    j["classical_log"] = std::move(log);

    ojson trace = ojson::array();
    for (const TraceEvent& event : result.trace) {
        trace.push_back({{"step", event.step},
                         {"actor", event.actor},
                         {"action", event.action},
                         {"outcome_bits", event.outcome_bits},
                         {"state_digest", event.state_digest}});
    }
    j["trace"] = std::move(trace);

    j["measurements"] = ojson::object();
    j["measurements"]["step1"] = to_json(result.step1_record);
    if (result.step3_record) j["measurements"]["step3"] = to_json(*result.step3_record);
    j["measurements"]["closing"] = to_json(result.step4_record);

    j["final_state"] = to_json(result.final_state);
    return j;
}

ojson to_json(const GeneralChannel& channel) {
    ojson j;
    j["m_parties"] = channel.m_parties;
    j["n_controllers"] = channel.n_controllers;
    j["phase_bit"] = channel.phase_bit;
    j["state"] = to_json(channel.state);
    return j;
}

std::string state_digest(const BranchState& state) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buf[64];
    for (const std::string& label : state.photons()) {
        fnv_mix(hash, label.data(), label.size());
        fnv_mix(hash, ";", 1);
    }
    for (const Branch& b : state.branches()) {
        const int len = std::snprintf(buf, sizeof(buf), "%.12e|%.12e|%u|%d;",
                                      b.amplitude.real(), b.amplitude.imag(), b.paths, b.probe);
        fnv_mix(hash, buf, static_cast<std::size_t>(len));
    }
    const int len = std::snprintf(buf, sizeof(buf), "%016llx",
                                  static_cast<unsigned long long>(hash));
    return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace rio
