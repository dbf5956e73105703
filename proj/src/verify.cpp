#include "rio/verify.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "rio/erfc.hpp"
#include "rio/monte_carlo.hpp"
#include "rio/multiparty.hpp"

namespace rio {

namespace {

constexpr ChannelVariant kChannels[] = {ChannelVariant::OmegaPlus, ChannelVariant::OmegaMinus,
                                        ChannelVariant::PiPlus, ChannelVariant::PiMinus};

struct Section {
    const char* name;
    long cases = 0;
    long failures = 0;

    void report(std::ostream& out) const {
        out << "verify: " << name << ": " << cases << " cases, "
            << (failures == 0 ? "ok" : "FAILED") << " (" << failures << " failures)\n";
    }
};

BranchState random_state(RandomStream& rng, int max_photons = 4) {
    const int photon_count = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_photons)));
    std::vector<std::string> photons;
    for (int i = 0; i < photon_count; ++i) photons.push_back("P" + std::to_string(i));
    const int branch_count = 1 + static_cast<int>(rng.below(6));
    std::vector<Branch> branches;
    for (int i = 0; i < branch_count; ++i) {
        const auto paths = rng.below(1u << photon_count);
        const int probe = static_cast<int>(rng.below(7)) - 3;
        branches.push_back(Branch{rng.unit_phase() * cplx{rng.uniform(0.1, 1.0)}, paths, probe});
    }
    return BranchState(std::move(photons), std::move(branches)).normalized();
}

Section verify_forced_tables(RandomStream& rng) {
    Section section{"forced-outcome tables"};
    const HomodyneModel model(8.0, 0.5, 1.0);
    for (ChannelVariant channel : kChannels) {
        for (int k = 0; k < 2; ++k) {
            for (int m = 0; m < 2; ++m) {
                for (int pq = 0; pq < 4; ++pq) {
                    for (int rep = 0; rep < 3; ++rep) {
                        cplx alpha, beta;
                        rng.haar_qubit(alpha, beta);
                        const LumpOperator op{rng.unit_phase(), rng.unit_phase()};
                        ForcedOutcomes forced;
                        forced.k = k;
                        forced.m = m;
                        forced.p = pq & 1;
                        forced.q = (pq >> 1) & 1;

                        BranchState psi = make_input_state(alpha, beta);
                        ProtocolResult riho = run_riho(psi, op, channel, model, rng, forced);
                        ProtocolResult ripuo = run_ripuo(psi, sub_operator(op, m), m, channel,
                                                         model, rng, forced);
                        section.cases += 2;
                        if (riho.achieved_fidelity < 1.0 - 1e-10) section.failures++;
                        if (ripuo.achieved_fidelity < 1.0 - 1e-10) section.failures++;
                    }
                }
            }
        }
    }
    return section;
}

Section verify_operator_algebra(RandomStream& rng) {
    Section section{"operator algebra"};
    for (int i = 0; i < 300; ++i) {
        const LumpOperator op = make_lump_operator(rng.unit_phase(), rng.unit_phase());
        const Mat2 lump = lump_matrix(op);
        auto [diag, antidiag] = decompose(op);

        section.cases++;
        bool ok = unitarity_defect(lump) <= 1e-12;
        ok = ok && max_abs(cplx{1.0 / kInvSqrt2} * lump - diag - antidiag) <= 1e-12;

        const Mat2 z = gates::sigma_z();
        ok = ok && max_abs(diag * z - z * diag) == 0.0;
        ok = ok && max_abs(antidiag * z + z * antidiag) == 0.0;

        const double angle = rng.uniform(-6.0, 6.0);
        ok = ok && classify_rotation(gates::rot_z(angle)) == MatrixShape::Diagonal;
        if (!ok) section.failures++;
    }
    return section;
}

Section verify_bbs_kerr(RandomStream& rng) {
    Section section{"beam splitter and kerr algebra"};
    for (int i = 0; i < 300; ++i) {
        BranchState state = random_state(rng);
        const std::string photon = state.photons()[rng.below(
            static_cast<std::uint32_t>(state.photon_count()))];
        section.cases++;
        bool ok = branch_distance(apply_bbs(apply_bbs(state, photon), photon), state) <= 1e-12;
        const int shift = 1 + static_cast<int>(rng.below(3));
        const int path = rng.bit();
        BranchState round =
            cross_kerr(cross_kerr(state, photon, path, shift), photon, path, -shift);
        ok = ok && branch_distance(round, state) == 0.0;
        if (!ok) section.failures++;
    }
    return section;
}

Section verify_erfc() {
    Section section{"erfc cross-check"};
    for (int i = -600; i <= 600; ++i) {
        const double x = i * 0.05;
        section.cases++;
        if (std::abs(rio::erfc(x) - std::erfc(x)) > 1e-12) section.failures++;
    }
    return section;
}

Section verify_multiparty(RandomStream& rng) {
    Section section{"multiparty reductions"};

    section.cases++;
    if (branch_distance(build_joint_channel(1).state,
                        make_channel(ChannelVariant::OmegaPlus, "A", "B1")) > 1e-12) {
        section.failures++;
    }

    for (int m = 1; m <= 4; ++m) {
        section.cases++;
        GeneralChannel with = build_controlled_joint_channel(m, 0, 0);
        GeneralChannel without = build_joint_channel(m);
        if (branch_distance(with.state, without.state) > 1e-12) section.failures++;
    }

    for (int i = 0; i < 50; ++i) {
        const int r1 = rng.bit();
        std::vector<int> bits;
        int sum = r1;
        const int len = static_cast<int>(rng.below(5));
        for (int j = 0; j < len; ++j) {
            bits.push_back(rng.bit());
            sum += bits.back();
        }
        section.cases++;
        GeneralChannel chained = controller_chain_apply(build_chain_channel(2, r1), bits);
        if (chained.phase_bit != (sum & 1)) section.failures++;
    }

    const std::pair<RioTask, int> table[] = {{RioTask::Riho, 1},
                                             {RioTask::Criho, 1},
                                             {RioTask::Cripuo, 1},
                                             {RioTask::Ccripuo, 3},
                                             {RioTask::Bccripuo, 6}};
    for (const auto& [task, expected] : table) {
        section.cases++;
        if (resource_count(task) != expected) section.failures++;
    }
    return section;
}

}  // namespace

int run_verify_suite(std::ostream& out) {
    RandomStream rng(0x5eedf00dULL);
    Section sections[] = {verify_forced_tables(rng), verify_operator_algebra(rng),
                          verify_bbs_kerr(rng), verify_erfc(), verify_multiparty(rng)};
    int failures = 0;
    long cases = 0;
    for (const Section& section : sections) {
        section.report(out);
        failures += static_cast<int>(section.failures);
        cases += section.cases;
    }
    out << "verify: " << cases << " cases total, " << failures << " failures\n";
    return failures;
}

}  // namespace rio
