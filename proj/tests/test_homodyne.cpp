#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rio/erfc.hpp"
#include "rio/homodyne.hpp"

using rio::Branch;
using rio::BranchState;
using rio::cplx;
using rio::HomodyneModel;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// The state right after the opening cross-Kerr tags: the aligned branches
// carry probe 0, the misaligned ones +1/-1.
BranchState tagged_joint(double alpha, double beta) {
    BranchState joint = rio::tensor(rio::make_input_state(cplx{alpha}, cplx{beta}),
                                    rio::make_channel(rio::ChannelVariant::OmegaPlus));
    joint = rio::cross_kerr(joint, "X", 0, +1);
    return rio::cross_kerr(joint, "A", 0, -1);
}

}  // namespace

TEST_SUITE("homodyne") {

TEST_CASE("erfc agrees with the standard library") {
    for (int i = -600; i <= 600; ++i) {
        const double x = i * 0.05;
        CHECK(std::abs(rio::erfc(x) - std::erfc(x)) <= 1e-13);
    }
    CHECK(rio::erfc(0.0) == 1.0);
}

TEST_CASE("erfc agrees with direct quadrature of the Gaussian tail") {
    for (double x : {0.05, 0.3, 0.9, 1.4142135623730951, 2.3, 3.7, 5.0, -1.1, -2.6}) {
        CHECK(std::abs(rio::erfc(x) - oracle::erfc_by_integration(x)) <= 1e-12);
    }
}

TEST_CASE("erfc reflection identity") {
    for (double x : {0.2, 0.9, 1.7, 3.3}) {
        CHECK(std::abs(rio::erfc(-x) - (2.0 - rio::erfc(x))) <= 1e-15);
    }
}

TEST_CASE("gaussian means") {
    CHECK(rio::gaussian_mean(HomodyneModel(1.0, kPi, 1.0), 0) == doctest::Approx(2.0));
    CHECK(rio::gaussian_mean(HomodyneModel(1.0, kPi, 1.0), 1) == doctest::Approx(-2.0));
    CHECK(rio::gaussian_mean(HomodyneModel(1.0, kPi / 2.0, 0.5), 1) ==
          doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("model parameter validation") {
    CHECK_THROWS_AS(HomodyneModel(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(HomodyneModel(1.0, -0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(HomodyneModel(1.0, 1.0, 1.5), std::invalid_argument);
    CHECK(HomodyneModel::from_gamma_t(1.0, 1.0, 0.7, 2.0).dissipation ==
          doctest::Approx(std::exp(-1.4)));
}

TEST_CASE("pairwise error against the quadrature oracle") {
    const HomodyneModel model(1.0, kPi, 1.0);
    const double p = rio::pairwise_error(model, 0, 1);
    CHECK(p == doctest::Approx(0.02275).epsilon(1e-3));
    CHECK(std::abs(p - oracle::misidentify_two_gaussians(2.0, -2.0)) <= 1e-12);

    CHECK(rio::pairwise_error(HomodyneModel(3.7, 0.0, 1.0), 0, 1) == 0.5);
    CHECK(rio::pairwise_error(HomodyneModel(1000.0, kPi / 2.0, 1.0), 0, 1) <= 1e-15);
}

TEST_CASE("swapping the pair reflects the error probability") {
    const HomodyneModel model(1.3, 0.8, 0.9);
    for (int n1 = 0; n1 < 4; ++n1) {
        for (int n2 = 0; n2 < 4; ++n2) {
            CHECK(std::abs(rio::pairwise_error(model, n1, n2) +
                           rio::pairwise_error(model, n2, n1) - 1.0) <= 1e-15);
        }
    }
}

TEST_CASE("dissipation only rescales the probe amplitude") {
    const double z = 1.7, theta = 0.6, d = 0.37;
    for (int n = 0; n < 3; ++n) {
        CHECK(rio::pairwise_error(HomodyneModel(z, theta, d), n, n + 1) ==
              rio::pairwise_error(HomodyneModel(d * z, theta, 1.0), n, n + 1));
    }
}

TEST_CASE("closing-readout error triple") {
    SUBCASE("theta = pi: the middle pair swaps sides") {
        const auto triple = rio::step4_error_triple(HomodyneModel(1.0, kPi, 1.0));
        CHECK(std::abs(triple[0] - oracle::misidentify_two_gaussians(2.0, -2.0)) <= 1e-12);
        CHECK(std::abs(triple[1] - (1.0 - triple[0])) <= 1e-12);
        CHECK(std::abs(triple[2] - triple[0]) <= 1e-15);
    }
    SUBCASE("theta = 0 gives coin flips") {
        const auto triple = rio::step4_error_triple(HomodyneModel(2.0, 0.0, 1.0));
        CHECK(triple[0] == 0.5);
        CHECK(triple[1] == 0.5);
        CHECK(triple[2] == 0.5);
    }
    SUBCASE("theta = pi/4 against the oracle") {
        const HomodyneModel model(1.0, kPi / 4.0, 1.0);
        const auto triple = rio::step4_error_triple(model);
        for (int i = 0; i < 3; ++i) {
            CHECK(triple[static_cast<std::size_t>(i)] > 0.0);
            CHECK(triple[static_cast<std::size_t>(i)] < 0.5);
            const double want = oracle::misidentify_two_gaussians(
                rio::gaussian_mean(model, i), rio::gaussian_mean(model, i + 1));
            CHECK(std::abs(triple[static_cast<std::size_t>(i)] - want) <= 1e-12);
        }
    }
}

TEST_CASE("classification threshold sits at the midpoint") {
    const HomodyneModel model(2.0, 0.9, 0.8);
    const double threshold = rio::classification_threshold(model, 0, 1);
    CHECK(threshold == doctest::Approx(model.dissipation * model.z *
                                       (1.0 + std::cos(model.theta))));

    rio::RandomStream rng(31);
    const BranchState state = tagged_joint(0.6, 0.8);
    auto above = rio::sample_homodyne(state, model, rng, {}, threshold + 1e-6);
    CHECK(above.record.classified_label == 0);
    auto below = rio::sample_homodyne(state, model, rng, {}, threshold - 1e-6);
    CHECK(std::abs(below.record.classified_label) == 1);
}

TEST_CASE("distinguishability warning") {
    CHECK(rio::distinguishability_warning(HomodyneModel(1.0, kPi, 1.0)));
    CHECK_FALSE(rio::distinguishability_warning(HomodyneModel(100.0, 0.3, 1.0)));
    CHECK(rio::distinguishability_warning(HomodyneModel(1.0, 0.01, 1.0)));
}

TEST_CASE("readout requires a probe-tagged state") {
    rio::RandomStream rng(32);
    const HomodyneModel model(1.0, 1.0, 1.0);
    CHECK_THROWS_AS(
        rio::sample_homodyne(rio::make_input_state(cplx{0.6}, cplx{0.8}), model, rng),
        rio::NoProbe);
}

TEST_CASE("a single-component mixture never misidentifies") {
    rio::RandomStream rng(33);
    const HomodyneModel model(8.0, 0.5, 1.0);
    const BranchState state({"X"}, {Branch{cplx{1.0}, 0, 1}});
    for (int i = 0; i < 200; ++i) {
        const auto outcome = rio::sample_homodyne(state, model, rng);
        CHECK(outcome.record.classified_label == 1);
        CHECK_FALSE(outcome.record.misidentified);
    }
}

TEST_CASE("collapse keeps the aligned branches for the high outcome") {
    rio::RandomStream rng(34);
    const HomodyneModel model(2.0, 0.9, 1.0);
    const auto outcome = rio::sample_homodyne(tagged_joint(0.6, 0.8), model, rng, 0);
    CHECK(outcome.record.true_label == 0);
    const BranchState want({"X", "A", "B"},
                           {Branch{cplx{0.6}, 0b000, 0}, Branch{cplx{0.8}, 0b111, 0}});
    CHECK(rio::branch_distance(outcome.state, want) <= 1e-12);
}

TEST_CASE("collapse keeps the phase-tagged pair for the low outcome") {
    rio::RandomStream rng(35);
    const HomodyneModel model(2.0, 0.9, 1.0);
    const auto outcome = rio::sample_homodyne(tagged_joint(0.6, 0.8), model, rng, 1);
    REQUIRE(outcome.state.branches().size() == 2);

    const double phi = outcome.record.feed_forward_phase;
    CHECK(phi != 0.0);
    const BranchState want({"X", "A", "B"},
                           {Branch{cplx{0.6} * std::polar(1.0, phi), 0b110, 0},
                            Branch{cplx{0.8} * std::polar(1.0, -phi), 0b001, 0}});
    CHECK(rio::branch_distance(outcome.state, want) <= 1e-12);

    SUBCASE("feed-forward removes the phases and flips the paths") {
        rio::FeedForward ff;
        ff.phase_photon = "A";
        ff.path_flips = {{"A", rio::gates::path_flip()}, {"B", rio::gates::path_flip()}};
        const BranchState fixed =
            rio::apply_feed_forward(outcome.state, outcome.record, ff);
        const BranchState aligned({"X", "A", "B"},
                                  {Branch{cplx{0.6}, 0b000, 0}, Branch{cplx{0.8}, 0b111, 0}});
        CHECK(rio::branch_distance(fixed, aligned) <= 1e-12);
        for (const Branch& b : fixed.branches()) {
            CHECK(std::abs(b.amplitude.imag()) <= 1e-12);
        }
    }
}

TEST_CASE("feed-forward is a no-op for the aligned classification") {
    rio::RandomStream rng(36);
    const HomodyneModel model(2.0, 0.9, 1.0);
    const auto outcome = rio::sample_homodyne(tagged_joint(0.6, 0.8), model, rng, 0);
    rio::FeedForward ff;
    ff.phase_photon = "A";
    ff.path_flips = {{"A", rio::gates::path_flip()}};
    const BranchState same = rio::apply_feed_forward(outcome.state, outcome.record, ff);
    CHECK(rio::branch_distance(same, outcome.state) == 0.0);
}

TEST_CASE("theta = pi leaves no residual phase to correct") {
    rio::RandomStream rng(37);
    const HomodyneModel model(1.0, kPi, 1.0);
    const auto outcome = rio::sample_homodyne(tagged_joint(0.6, 0.8), model, rng, 1);
    CHECK(std::abs(outcome.record.feed_forward_phase) <= 1e-14);
}

TEST_CASE("misidentification frequency matches the pairwise error") {
    // Two-component mixture sampled many times; the empirical cross-over rate
    // must sit within the binomial band around the quadrature-oracle value.
    const HomodyneModel model(1.0, kPi / 4.0, 1.0);
    const BranchState state({"X"}, {Branch{cplx{rio::kInvSqrt2}, 0, 0},
                                    Branch{cplx{rio::kInvSqrt2}, 1, 1}});
    rio::RandomStream rng(38);
    const int trials = 20000;
    int misid = 0;
    for (int i = 0; i < trials; ++i) {
        misid += rio::sample_homodyne(state, model, rng).record.misidentified;
    }
    const double p = oracle::misidentify_two_gaussians(rio::gaussian_mean(model, 0),
                                                       rio::gaussian_mean(model, 1));
    const double band = 3.0 * std::sqrt(p * (1.0 - p) / trials);
    CHECK(std::abs(double(misid) / trials - p) <= band);
}

TEST_CASE("expected misidentification matches quadrature regions") {
    const HomodyneModel model(1.0, kPi / 4.0, 1.0);

    SUBCASE("two labels reduce to the pairwise error") {
        const double expected =
            rio::expected_misidentification(model, {{0, 0.5}, {1, 0.5}});
        CHECK(std::abs(expected - rio::pairwise_error(model, 0, 1)) <= 1e-12);
    }
    SUBCASE("four equal-weight labels") {
        const double expected = rio::expected_misidentification(
            model, {{0, 0.25}, {1, 0.25}, {2, 0.25}, {3, 0.25}});
        double want = 0.0;
        double means[4];
        for (int n = 0; n < 4; ++n) means[n] = rio::gaussian_mean(model, n);
        for (int n = 0; n < 4; ++n) {
            const double hi = n == 0 ? 1e9 : 0.5 * (means[n - 1] + means[n]);
            const double lo = n == 3 ? -1e9 : 0.5 * (means[n] + means[n + 1]);
            want += 0.25 * (1.0 - oracle::gaussian_mass(means[n], lo, hi));
        }
        CHECK(std::abs(expected - want) <= 1e-12);
    }
}

TEST_CASE("degenerate centres collapse together") {
    // At theta = pi the probe states for labels 0 and 2 coincide, so both
    // survive a readout that lands on their shared centre.
    const HomodyneModel model(1.0, kPi, 1.0);
    const BranchState state({"A", "B"}, {Branch{cplx{0.5}, 0b00, 0}, Branch{cplx{0.5}, 0b01, 1},
                                         Branch{cplx{0.5}, 0b10, 2}, Branch{cplx{0.5}, 0b11, 3}});
    rio::RandomStream rng(39);
    const auto outcome = rio::sample_homodyne(state, model, rng, 0);
    CHECK(outcome.state.branches().size() == 2);
    CHECK(outcome.record.true_label == 0);
}

}  // TEST_SUITE
