#include <doctest.h>

#include "commands.hpp"

#include <tslasso/empirical.hpp>
#include <tslasso/random.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using tslasso::cli::parse_config;
using tslasso::cli::UsageError;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("tslasso_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run(const std::string& args) {
    const std::string cmd = std::string(TSLASSO_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

std::string panel_csv(int T) {
    tslasso::NormalSource rng(5);
    std::string s = "date,ex_return";
    for (const auto& n : tslasso::kNamedPredictors) s += "," + n;
    s += ",ntis\n";
    for (int t = 0; t < T; ++t) {
        s += std::to_string((1960 + t / 12) * 100 + t % 12 + 1) + "," + std::to_string(0.01 * rng.normal());
        for (int k = 0; k < 12; ++k) s += "," + std::to_string(rng.normal());
        s += "\n";
    }
    return s;
}

}  // namespace

TEST_CASE("config grammar") {
    const auto c = parse_config(
        "# comment\n"
        "designs = dgp1, dgp2\n"
        "n = 40,200   # trailing comment\n"
        "estimators = oracle, plasso\n"
        "reps = 5\n"
        "master_seed = 9\n"
        "tuning = fixed\n"
        "c_lambda.plasso = 0.005\n"
        "c_lambda.dgp2.plasso = 0.001\n"
        "grid = 1e-4:1e-1:4\n"
        "lambda_scale = literal\n");
    CHECK(c.designs.size() == 2);
    CHECK(c.n_list == std::vector<std::size_t>{40, 200});
    CHECK(c.reps == 5);
    CHECK(c.master_seed == 9);
    CHECK_FALSE(c.calibrate);
    CHECK(c.c_lambda.at("dgp2.plasso") == 0.001);
    CHECK(c.grid.size() == 4);
    CHECK(c.scale == tslasso::LambdaScale::Literal);

    const auto j = parse_config(
        R"({"designs": ["dgp3"], "n": [40], "estimators": ["talasso"], "reps": 2,
            "tuning": "fixed", "c_lambda": {"talasso": 0.0005}})");
    CHECK(j.designs.size() == 1);
    CHECK(j.c_lambda.at("talasso") == 0.0005);

    auto message = [](const std::string& text) {
        try {
            parse_config(text, "cfg");
        } catch (const UsageError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("designs = dgp1\nn = 40\nreps = many\n").rfind("cfg:3:", 0) == 0);
    CHECK(message("designs = dgp1\nbogus\n").rfind("cfg:2:", 0) == 0);
    CHECK(message("designs = dgp7\n").rfind("cfg:1:", 0) == 0);
    CHECK(message("designs = dgp1\ndesigns = dgp2\n").rfind("cfg:2:", 0) == 0);
    CHECK(message("designs = dgp1\nn = 40\n").find("estimators") != std::string::npos);
    CHECK(message("designs = dgp1\nn = 40\nestimators = plasso\ntuning = fixed\n").find("c_lambda.plasso") !=
          std::string::npos);
    CHECK(message(R"({"designs": ["dgp1"], "reps": "x"})").find("field 'reps'") != std::string::npos);
    CHECK(message("{ not json").find("invalid JSON") != std::string::npos);
}

TEST_CASE("exit codes") {
    const auto dir = scratch("exit");
    CHECK(run("--help") == 0);
    CHECK(run("") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("simulate --design dgp9 --n 50 --out " + (dir / "x.csv").string()) == 2);
    CHECK(run("simulate --design dgp1 --n 5 --out " + (dir / "x.csv").string()) == 2);
    write(dir / "bad.cfg", "designs = dgp1\nn = forty\n");
    CHECK(run("montecarlo --config " + (dir / "bad.cfg").string() + " --out-dir " + dir.string()) == 2);
    CHECK(run("montecarlo --config " + (dir / "missing.cfg").string() + " --out-dir " + dir.string()) == 2);
    CHECK(run("forecast --panel " + (dir / "missing.csv").string() + " --out-dir " + dir.string()) == 1);
    CHECK(run("simulate --design dgp1 --n 50 --out /proc/forbidden/x.csv") == 1);
}

TEST_CASE("simulate writes identical files for identical seeds") {
    const auto dir = scratch("sim");
    REQUIRE(run("simulate --design dgp2 --n 60 --seed 7 --out " + (dir / "a.csv").string()) == 0);
    REQUIRE(run("simulate --design dgp2 --n 60 --seed 7 --out " + (dir / "b.csv").string()) == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(slurp(dir / "a.csv.truth.json") == slurp(dir / "b.csv.truth.json"));
    std::istringstream in(slurp(dir / "a.csv"));
    std::string prov, header;
    std::getline(in, prov);
    std::getline(in, header);
    CHECK(prov.rfind("# provenance: ", 0) == 0);
    CHECK(header == "t,y,z1,z2,xc1,xc2,xc3,xc4,x1,x2");
}

TEST_CASE("montecarlo and forecast reports are reproducible across job counts") {
    const auto dir = scratch("mc");
    write(dir / "mc.cfg",
          "designs = dgp2\nn = 40\nestimators = oracle, ols, plasso, talasso\nreps = 6\n"
          "master_seed = 4\ncalibration_reps = 3\ngrid = 1e-4:1e-1:6\n");
    REQUIRE(run("montecarlo --config " + (dir / "mc.cfg").string() + " --out-dir " + (dir / "a").string()) == 0);
    REQUIRE(run("montecarlo --jobs 3 --config " + (dir / "mc.cfg").string() + " --out-dir " + (dir / "b").string()) == 0);
    for (const char* f : {"table2.csv", "table3.csv", "report.json", "calibration.json"}) {
        CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
        CHECK_FALSE(slurp(dir / "a" / f).empty());
    }

    write(dir / "panel.csv", panel_csv(80));
    const std::string common = "forecast --panel " + (dir / "panel.csv").string() +
                               " --horizons 1/12,1/4 --windows 40 --estimators rwwd,ols,plasso,talasso-bic"
                               " --grid 1e-4:1e-1:4";
    REQUIRE(run(common + " --out-dir " + (dir / "fa").string()) == 0);
    REQUIRE(run(common + " -j 2 --out-dir " + (dir / "fb").string()) == 0);
    for (const char* f : {"metrics.csv", "table4.csv", "metrics.json", "forecasts.csv", "coefficients.csv"}) {
        CHECK(slurp(dir / "fa" / f) == slurp(dir / "fb" / f));
    }
    const std::string table = slurp(dir / "fa" / "table4.csv");
    CHECK(table.find("window_months,estimator,metric,h=1/12,h=1/4") != std::string::npos);
}

TEST_CASE("forecast with only rwwd never needs a solver") {
    const auto dir = scratch("rw");
    write(dir / "panel.csv", panel_csv(60));
    REQUIRE(run("forecast --panel " + (dir / "panel.csv").string() +
                " --horizons 1/12 --windows 36 --estimators rwwd --out-dir " + dir.string()) == 0);
    const std::string coef = slurp(dir / "coefficients.csv");
    // Header lines only: RWwD carries no coefficients.
    CHECK(std::count(coef.begin(), coef.end(), '\n') == 2);
}
