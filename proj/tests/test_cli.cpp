#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "sdlab/cli.hpp"
#include "sdlab/config.hpp"

using namespace sdlab;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("sdlab_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"repro", "--bogus"}).code == kExitUsage);
    CHECK(cli({"repro", "--mode", "spd"}).code == kExitUsage);
    CHECK(cli({"run", "/nonexistent/config"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("run rejects n = 1") {
    const auto dir = scratch_dir("n1");
    write_text_file(dir / "cfg.txt", "n = 1\nn_trials = 2\nn_iters = 3\nalgorithms = alg1\n");
    const Result r = cli({"run", (dir / "cfg.txt").string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("n must be >= 2") != std::string::npos);
}

TEST_CASE("run then figure") {
    const auto dir = scratch_dir("run");
    write_text_file(dir / "cfg.txt",
                    "n = 10\nn_trials = 3\nn_iters = 20\nalgorithms = alg1, alg2\n"
                    "mode = normal-equations\nmaster_seed = 1\noutput_dir = ignored\n");
    const Result r = cli({"run", (dir / "cfg.txt").string(), "--seed", "5", "--out", (dir / "out").string()});
    REQUIRE(r.code == kExitOk);
    CHECK(fs::exists(dir / "out" / "alg1.csv"));
    CHECK(fs::exists(dir / "out" / "alg2.csv"));
    CHECK(!fs::exists("ignored"));

    // --seed overrides master_seed.
    const Result r2 = cli({"run", (dir / "cfg.txt").string(), "--seed", "6", "--out", (dir / "out6").string()});
    REQUIRE(r2.code == kExitOk);
    CHECK(read_text_file(dir / "out" / "alg1.csv") != read_text_file(dir / "out6" / "alg1.csv"));
    const Result r3 = cli({"run", (dir / "cfg.txt").string(), "--seed", "5", "--out", (dir / "out5").string()});
    REQUIRE(r3.code == kExitOk);
    CHECK(read_text_file(dir / "out" / "alg1.csv") == read_text_file(dir / "out5" / "alg1.csv"));

    write_text_file(dir / "fig.txt", "algorithms = alg1, alg2\ny_metric = sigma_res_norm\nlog_y = true\n");
    const Result f = cli({"figure", (dir / "out" / "alg1.csv").string(), (dir / "out" / "alg2.csv").string(),
                          "--spec", (dir / "fig.txt").string(), "--out", (dir / "fig.svg").string()});
    CHECK(f.code == kExitOk);
    const std::string svg = read_text_file(dir / "fig.svg");
    CHECK(svg.find("data-algorithm=\"alg2\"") != std::string::npos);
}

TEST_CASE("figure on an empty csv is a configuration error") {
    const auto dir = scratch_dir("empty");
    write_text_file(dir / "empty.csv", "");
    write_text_file(dir / "fig.txt", "algorithms = alg1\ny_metric = sigma_res_norm\n");
    const Result r = cli({"figure", (dir / "empty.csv").string(), "--spec", (dir / "fig.txt").string(), "--out",
                          (dir / "fig.svg").string()});
    CHECK(r.code == kExitUsage);
    CHECK(!fs::exists(dir / "fig.svg"));
}
