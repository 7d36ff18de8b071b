#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    fs::path tmp = fs::temp_directory_path();
    fs::path out = tmp / "closure_cli_stdout.txt";
    fs::path err = tmp / "closure_cli_stderr.txt";
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("closure_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const std::string kSmall =
    " --desk --set hyper.ensemble_size=40 --set time.num_observations=4"
    " --set observation.num_locations=40";

}  // namespace

TEST_CASE("help and bad invocations") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("filter --help").exit_code == 0);

    // no preset and no config file
    RunResult r = run_cli("filter");
    CHECK(r.exit_code != 0);

    // unknown preset: single-line error on stderr
    RunResult bad = run_cli("filter --preset nope --out /tmp/closure_cli_nope");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("nope") != std::string::npos);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') <= 1);

    // unknown override key names the key
    RunResult key = run_cli("filter --preset kpp-1d-dense --set bogus.key=1 --out /tmp/x");
    CHECK(key.exit_code == 1);
    CHECK(key.err.find("bogus.key") != std::string::npos);
}

TEST_CASE("filter run produces artifacts and is reproducible") {
    fs::path a = fresh_dir("runa");
    fs::path b = fresh_dir("runb");
    RunResult ra =
        run_cli("filter --preset kpp-1d-dense" + kSmall + " --seed 7 --out " + a.string());
    REQUIRE(ra.exit_code == 0);
    CHECK(fs::exists(a / "summary.json"));
    CHECK(fs::exists(a / "closure_t0003.csv"));

    RunResult rb = run_cli("filter --preset kpp-1d-dense" + kSmall +
                           " --seed 7 --threads 2 --out " + b.string());
    REQUIRE(rb.exit_code == 0);
    CHECK(slurp(a / "observations.csv") == slurp(b / "observations.csv"));
    CHECK(slurp(a / "closure_t0003.csv") == slurp(b / "closure_t0003.csv"));
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("truth, observe, report, and config-file round trip") {
    fs::path d = fresh_dir("stages");
    REQUIRE(run_cli("truth --preset advdiff-1d-dense" + kSmall + " --out " + d.string())
                .exit_code == 0);
    CHECK(fs::exists(d / "truth_t0000.csv"));
    CHECK_FALSE(fs::exists(d / "observations.csv"));

    REQUIRE(run_cli("observe --preset advdiff-1d-dense" + kSmall + " --out " + d.string())
                .exit_code == 0);
    CHECK(fs::exists(d / "observations.csv"));

    // experiment stage emits the report files directly
    fs::path e = fresh_dir("exp");
    REQUIRE(run_cli("experiment --preset kpp-1d-dense" + kSmall + " --out " + e.string())
                .exit_code == 0);
    CHECK(fs::exists(e / "band_t0000.csv"));

    // report subcommand is idempotent over an existing run directory
    std::string before = slurp(e / "band_t0000.csv");
    REQUIRE(run_cli("report --out " + e.string()).exit_code == 0);
    CHECK(slurp(e / "band_t0000.csv") == before);

    // a config file extracted from a run reproduces that run exactly
    fs::path cfg_a = fresh_dir("cfg_a");
    fs::path cfg_b = fresh_dir("cfg_b");
    RunResult dump = run_cli("filter --preset kpp-1d-dense" + kSmall + " --seed 3 --out " +
                             cfg_a.string());
    REQUIRE(dump.exit_code == 0);
    nlohmann::json summary = nlohmann::json::parse(slurp(cfg_a / "summary.json"));
    fs::path cfg_file = cfg_b / "config.json";
    std::ofstream(cfg_file) << summary.at("config").dump(2);
    RunResult replay =
        run_cli("filter --config " + cfg_file.string() + " --seed 3 --out " + cfg_b.string());
    REQUIRE(replay.exit_code == 0);
    CHECK(slurp(cfg_a / "closure_t0003.csv") == slurp(cfg_b / "closure_t0003.csv"));

    fs::remove_all(d);
    fs::remove_all(e);
    fs::remove_all(cfg_a);
    fs::remove_all(cfg_b);
}
