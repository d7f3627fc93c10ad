#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Run the installed CLI with the given arguments, capturing stdout only;
// diagnostics go to stderr and are dropped.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "")
{
    const std::string command =
        env_prefix + (env_prefix.empty() ? "" : " ") + SEQMERIT_CLI_PATH " " + args +
        " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto end = text.find('\n', start);
        if (end == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("analyze emits one JSON envelope with both merit routes")
{
    const auto run = run_cli("analyze +++++--++-+-+");
    REQUIRE(run.exit_code == 0);
    const auto envelope = json::parse(run.output);
    CHECK(envelope["command"] == "analyze");
    CHECK(envelope["result"]["n"] == 13);
    CHECK(envelope["result"]["alphabet"] == "pm1");
    CHECK(envelope["result"]["max_sidelobe"] == 1.0);
    CHECK(envelope["result"]["merit"]["merit_exact"] == "169/12");
    CHECK(envelope["result"]["merit"]["l4_exact"] == 181);
    CHECK(envelope["result"]["is_perfect"] == false);
    CHECK(envelope["result"]["two_level"] == true);
    CHECK(envelope["result"]["two_level_gamma"] == 1);
    CHECK(envelope["result"]["unit_aperiodic_sidelobes"] == true);
    CHECK(envelope.contains("warnings"));
    CHECK_FALSE(envelope.contains("timestamp"));
}

TEST_CASE("analyze output is byte-reproducible")
{
    const auto first = run_cli("analyze +++-+");
    const auto second = run_cli("analyze +++-+");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("analyze --timestamps opts into a timestamp")
{
    const auto run = run_cli("--timestamps analyze +-");
    REQUIRE(run.exit_code == 0);
    const auto envelope = json::parse(run.output);
    CHECK(envelope.contains("timestamp"));
    CHECK(envelope["timestamp"].is_number_integer());
}

TEST_CASE("sign strings that collide with option syntax pass after --")
{
    // "-..." looks like an option and bare "++" is part of the option
    // grammar; the conventional positional separator escapes both.
    const auto negative = run_cli("analyze -- -++-");
    REQUIRE(negative.exit_code == 0);
    CHECK(json::parse(negative.output)["result"]["n"] == 4);

    const auto pair = run_cli("analyze -- ++");
    REQUIRE(pair.exit_code == 0);
    CHECK(json::parse(pair.output)["result"]["n"] == 2);
}

TEST_CASE("analyze rejects malformed sequences with exit code 2")
{
    CHECK(run_cli("analyze +a-").exit_code == 2);
    CHECK(run_cli("analyze ''").exit_code == 2);
}

TEST_CASE("analyze --format csv emits the autocorrelation profile")
{
    const auto run = run_cli("analyze +++-+ --format csv");
    REQUIRE(run.exit_code == 0);
    const auto lines = lines_of(run.output);
    REQUIRE(lines.size() == 6); // header + one row per lag
    CHECK(lines[0] == "t,re_rho,im_rho,re_theta,im_theta");
    CHECK(lines[1].rfind("0,5,", 0) == 0);
}

TEST_CASE("generate emits families in both formats")
{
    const auto pm = run_cli("generate barker 13 --format pm");
    CHECK(pm.exit_code == 0);
    CHECK(pm.output == "+++++--++-+-+\n");

    const auto js = run_cli("generate chirp 4");
    REQUIRE(js.exit_code == 0);
    const auto envelope = json::parse(js.output);
    CHECK(envelope["command"] == "generate");
    CHECK(envelope["result"]["alphabet"] == "roots:4");
    CHECK(envelope["result"]["sequence"]["alphabet"] == "roots:4");
    CHECK(envelope["result"]["sequence"]["values"].size() == 4);

    CHECK(run_cli("generate barker 6").exit_code == 2);
    CHECK(run_cli("generate chirp 4 --format pm").exit_code == 2); // not +-1
    CHECK(run_cli("generate nonesuch 4").exit_code == 2);
}

TEST_CASE("search reports counts and survivors")
{
    const auto count = run_cli("search --n 5 --bound 1 --mode count --format pm");
    CHECK(count.exit_code == 0);
    CHECK(count.output == "4\n");

    const auto js = run_cli("search --n 5 --bound 1");
    REQUIRE(js.exit_code == 0);
    const auto envelope = json::parse(js.output);
    CHECK(envelope["result"]["count"] == 4);
    CHECK(envelope["result"]["sequences"].size() == 4);

    const auto pm = run_cli("search --n 5 --bound 1 --format pm");
    CHECK(pm.exit_code == 0);
    CHECK(lines_of(pm.output).size() == 4);

    const auto sym = run_cli("search --n 5 --bound 1 --symmetry");
    REQUIRE(sym.exit_code == 0);
    const auto reduced = json::parse(sym.output);
    CHECK(reduced["result"]["count"] == 4);
    CHECK(reduced["result"]["sequences"].size() == 1);
    CHECK(reduced["result"]["orbit_sizes"] == json::array({4}));
}

TEST_CASE("records table in csv form")
{
    const auto run = run_cli("records --max-n 5 --format csv");
    REQUIRE(run.exit_code == 0);
    const auto lines = lines_of(run.output);
    REQUIRE(lines.size() == 5); // header + n = 2..5
    CHECK(lines[0] == "n,F_num,F_den,witness");
    CHECK(lines[1].rfind("2,2,1,", 0) == 0);
    CHECK(lines[3].rfind("4,4,1,", 0) == 0);
}

TEST_CASE("integrate agrees between exact and qmc methods")
{
    const auto exact = run_cli("integrate +++-+ --method exact");
    REQUIRE(exact.exit_code == 0);
    const auto exact_env = json::parse(exact.output);
    CHECK(exact_env["result"]["method"] == "exact");
    CHECK(exact_env["result"]["N"] == 17);
    CHECK(exact_env["result"]["value"].get<double>() == doctest::Approx(29.0));

    const auto qmc = run_cli("integrate +++-+ --method qmc --nodes 4096");
    REQUIRE(qmc.exit_code == 0);
    const auto qmc_env = json::parse(qmc.output);
    CHECK(qmc_env["result"]["method"] == "qmc");
    const double value = qmc_env["result"]["value"].get<double>();
    const double bound = qmc_env["result"]["error_bound"].get<double>();
    CHECK(std::abs(value - 29.0) <= bound);
}

TEST_CASE("difference-set verification through the CLI")
{
    const auto good = run_cli("verify-ds --set 1,2,4 --v 7");
    REQUIRE(good.exit_code == 0);
    const auto good_env = json::parse(good.output);
    CHECK(good_env["result"]["verified"] == true);
    CHECK(good_env["result"]["k"] == 3);
    CHECK(good_env["result"]["lambda"] == 1);
    CHECK(good_env["result"].contains("characteristic"));

    // A clean rejection is still a successful verification run.
    const auto bad = run_cli("verify-ds --set 0,1 --v 4");
    REQUIRE(bad.exit_code == 0);
    const auto bad_env = json::parse(bad.output);
    CHECK(bad_env["result"]["verified"] == false);
    CHECK(bad_env["result"].contains("rejection"));

    // Malformed input (duplicate residue) is a usage error.
    CHECK(run_cli("verify-ds --set 1,1 --v 7").exit_code == 2);
}

TEST_CASE("hadamard scan through the CLI")
{
    const auto run = run_cli("hadamard-scan --n 8");
    REQUIRE(run.exit_code == 0);
    const auto envelope = json::parse(run.output);
    CHECK(envelope["result"]["rows_scanned"] == 256);
    CHECK(envelope["result"]["perfect_count"] == 0);

    const auto four = run_cli("hadamard-scan --n 4");
    const auto four_env = json::parse(four.output);
    CHECK(four_env["result"]["perfect_count"] == 8);
}

TEST_CASE("result-table suites pass and report rows")
{
    const auto barker = run_cli("run-suite barker-table");
    REQUIRE(barker.exit_code == 0);
    const auto barker_env = json::parse(barker.output);
    CHECK(barker_env["result"]["passed"] == true);
    CHECK(barker_env["result"]["rows"].size() == 7);

    const auto minimal = run_cli("run-suite minimal-table --format csv");
    REQUIRE(minimal.exit_code == 0);
    CHECK(lines_of(minimal.output).size() == 16); // header + n = 2..16

    const auto qmc = run_cli("run-suite qmc-convergence");
    REQUIRE(qmc.exit_code == 0);
    const auto qmc_env = json::parse(qmc.output);
    CHECK(qmc_env["result"]["passed"] == true);

    CHECK(run_cli("run-suite nonesuch").exit_code == 2);
}

TEST_CASE("feasibility guards refuse oversized requests with exit code 2")
{
    CHECK(run_cli("search --n 35 --bound 1 --mode count").exit_code == 2);
    CHECK(run_cli("hadamard-scan --n 21").exit_code == 2);
    CHECK(run_cli("records --max-n 25").exit_code == 2);
}

TEST_CASE("SEQMERIT_MAX_N raises the guard ceiling")
{
    const auto run = run_cli("hadamard-scan --n 21", "SEQMERIT_MAX_N=21");
    REQUIRE(run.exit_code == 0);
    const auto envelope = json::parse(run.output);
    CHECK(envelope["result"]["rows_scanned"] == (1 << 21));
    CHECK(envelope["result"]["perfect_count"] == 0);

    // A malformed override is itself a usage error.
    CHECK(run_cli("hadamard-scan --n 21", "SEQMERIT_MAX_N=lots").exit_code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run_cli("nonesuch").exit_code == 2);
    CHECK(run_cli("search --bound 1").exit_code == 2); // missing --n
    CHECK(run_cli("--help").exit_code == 0);
}
