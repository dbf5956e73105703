#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "rio/cli_support.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

const char* binary_path() { return std::getenv("RIOSIM_BIN"); }

CliResult run_cli(const std::string& args) {
    CliResult result;
    const std::string command = std::string(binary_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("angle literals") {
    CHECK(rio::parse_angle("pi") == doctest::Approx(3.141592653589793).epsilon(1e-15));
    CHECK(rio::parse_angle("pi/4") == doctest::Approx(3.141592653589793 / 4).epsilon(1e-15));
    CHECK(rio::parse_angle("3pi/4") ==
          doctest::Approx(3.0 * 3.141592653589793 / 4).epsilon(1e-15));
    CHECK(rio::parse_angle("2pi") == doctest::Approx(2 * 3.141592653589793).epsilon(1e-15));
    CHECK(rio::parse_angle("0.5") == 0.5);
    CHECK_THROWS_AS(rio::parse_angle("pie"), std::invalid_argument);
    CHECK_THROWS_AS(rio::parse_angle("1.2.3"), std::invalid_argument);
}

TEST_CASE("complex and forced-outcome literals") {
    CHECK(rio::parse_complex("0.6") == rio::cplx{0.6, 0.0});
    CHECK(rio::parse_complex("0.6,-0.8") == rio::cplx{0.6, -0.8});
    CHECK_THROWS_AS(rio::parse_complex("1,2,3"), std::invalid_argument);

    const rio::ForcedOutcomes forced = rio::parse_forced("k=1,m=0,pq=10");
    CHECK(forced.k == 1);
    CHECK(forced.m == 0);
    CHECK(forced.p == 1);
    CHECK(forced.q == 0);
    CHECK_FALSE(rio::parse_forced("").any());
    CHECK_THROWS_AS(rio::parse_forced("pq=2"), std::invalid_argument);
    CHECK_THROWS_AS(rio::parse_forced("j=1"), std::invalid_argument);
}

TEST_CASE("gamma and t fold into the effective dissipation") {
    rio::RunConfig config;
    config.gamma = 0.7;
    config.time = 2.0;
    CHECK(config.effective_dissipation() == doctest::Approx(std::exp(-1.4)).epsilon(1e-15));
    config.dissipation = 0.5;  // direct D wins
    CHECK(config.effective_dissipation() == 0.5);
}

TEST_CASE("forced run succeeds with exit code 0") {
    if (!binary_path()) return;
    const CliResult r = run_cli(
        "run --protocol riho --channel omega+ --alpha 0.6 --beta 0.8 "
        "--u-phase 0.785 --v-phase 1.047 --z 50 --theta 0.8 --force m=0,pq=00 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"achieved_fidelity\"") != std::string::npos);
}

TEST_CASE("bad parameters exit with code 1") {
    if (!binary_path()) return;
    CHECK(run_cli("run --theta -1 --z 0").exit_code == 1);
    CHECK(run_cli("run --channel sideways").exit_code == 1);
    CHECK(run_cli("mc --trials 5").exit_code == 1);
    CHECK(run_cli("sweep --steps 1").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("an uninformative readout fails the run with exit code 2") {
    if (!binary_path()) return;
    const CliResult r = run_cli("run --alpha 0.6 --beta 0.8 --theta 0 --z 1 --seed 5");
    CHECK(r.exit_code == 2);
}

TEST_CASE("sweep output is byte-stable and pinned to the schema") {
    if (!binary_path()) return;
    const std::string args = "sweep --axis D --from 0 --to 1 --steps 11 --z 1 --theta pi";
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.rfind("axis_value,p1suc,p2suc,P1,P2,P31,P32,P33,warning\n", 0) == 0);
    // Fully dissipated endpoint row, 12 significant digits, '.' separator.
    CHECK(first.output.find("\n0,0.625,0.25,0.5,0.5,0.5,0.5,0.5,true\n") != std::string::npos);
    // theta = pi reorders the four-label centres, so every row carries the flag.
    CHECK(first.output.find(",false\n") == std::string::npos);
    CHECK(first.output.find(",true\n") != std::string::npos);
}

TEST_CASE("table-variant corrections reach the partially-unknown task") {
    if (!binary_path()) return;
    const CliResult r = run_cli(
        "run --protocol ripuo --m 1 --channel pi- --alpha 0.6 --beta 0.8 "
        "--v-phase pi/3 --z 50 --theta 0.8 --force k=0,pq=01 --seed 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"X_S\"") != std::string::npos);
}

TEST_CASE("mc output is deterministic for a fixed seed") {
    if (!binary_path()) return;
    const std::string args = "mc --trials 2000 --seed 11 --z 1 --theta pi/4";
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.rfind("metric,value\n", 0) == 0);
    CHECK(first.output.find("step4_within_3sigma,true") != std::string::npos);
}

TEST_CASE("run output is byte-stable for a fixed seed") {
    if (!binary_path()) return;
    const std::string args = "run --z 1 --theta pi/4 --seed 17";
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.output == second.output);
}

TEST_CASE("gamma and t fold into the echoed dissipation factor") {
    if (!binary_path()) return;
    const CliResult r =
        run_cli("run --z 50 --theta 0.8 --gamma 0.5 --t 2 --force k=0,m=0,pq=00 --seed 4");
    // e^{-1} echoed in the config block
    CHECK(r.output.find("\"dissipation\": 0.3678794411714423") != std::string::npos);
}

TEST_CASE("pi literals parse in angle flags") {
    if (!binary_path()) return;
    const CliResult a = run_cli("sweep --axis D --from 0 --to 1 --steps 3 --theta pi");
    const CliResult b = run_cli("sweep --axis D --from 0 --to 1 --steps 3 --theta 3.141592653589793");
    CHECK(a.output == b.output);
}

TEST_CASE("config files feed the same pipeline, flags take precedence") {
    if (!binary_path()) return;
    const std::string path = "/tmp/riosim_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"protocol": "riho", "channel": "omega+", "alpha": "0.6", "beta": "0.8",)"
            << R"( "z": 50.0, "theta": "0.8", "seed": 3, "force": "m=0,pq=00",)"
            << R"( "u-phase": "0.785", "v-phase": "1.047"})";
    }
    const CliResult from_config = run_cli("run --config " + path);
    CHECK(from_config.exit_code == 0);

    // A flag overriding the config switches the channel and still succeeds.
    const CliResult with_flag = run_cli("run --config " + path + " --channel pi-");
    CHECK(with_flag.exit_code == 0);
    CHECK(with_flag.output.find("\"pi-\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("channels subcommand prints branch structure") {
    if (!binary_path()) return;
    const CliResult bell = run_cli("channels --variant pi-");
    CHECK(bell.exit_code == 0);
    CHECK(bell.output.find("\"bell\"") != std::string::npos);

    const CliResult joint = run_cli("channels --joint 3");
    CHECK(joint.exit_code == 0);
    CHECK(joint.output.find("\"m_parties\": 3") != std::string::npos);

    const CliResult chain = run_cli("channels --chain 1,0,1");
    CHECK(chain.exit_code == 0);
    CHECK(chain.output.find("\"phase_bit\": 0") != std::string::npos);

    const CliResult classical = run_cli("channels --joint 1 --controllers 1 --form classical --r 1");
    CHECK(classical.exit_code == 0);
    CHECK(classical.output.find("\"controlled_joint\"") != std::string::npos);
}

TEST_CASE("verify subcommand passes on a healthy build") {
    if (!binary_path()) return;
    const CliResult r = run_cli("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0 failures") != std::string::npos);
}

TEST_CASE("environment seed is honored but flags win") {
    if (!binary_path()) return;
    // popen runs through the shell, so an env prefix assignment works.
    const std::string base = "mc --trials 500 --z 1 --theta pi/4";
    CliResult with_env{};
    {
        const std::string command = "RIOSIM_SEED=21 " + std::string(binary_path()) + " " +
                                    base + " 2>/dev/null";
        FILE* pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buffer[4096];
        std::size_t n;
        while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) with_env.output.append(buffer, n);
        with_env.exit_code = WEXITSTATUS(pclose(pipe));
    }
    const CliResult with_flag = run_cli(base + " --seed 21");
    CHECK(with_env.exit_code == 0);
    CHECK(with_env.output == with_flag.output);

    const CliResult different = run_cli(base + " --seed 22");
    CHECK(different.output != with_flag.output);
}

}  // TEST_SUITE
