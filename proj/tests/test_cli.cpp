#include "cli.hpp"

#include "zaremba/spectra.hpp"

#include <doctest.h>
#include <json.hpp>

#include <charconv>
#include <clocale>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace zaremba;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "zaremba");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double number(const std::string& s)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    REQUIRE(ec == std::errc{});
    REQUIRE(ptr == s.data() + s.size());
    return v;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("kernel subcommands")
{
    auto r = run({"kernel", "psi", "--t", "0.5", "--rho", "1", "--theta", "0", "--rho2", "1", "--theta2", "0",
                  "--vertex", "regular"});
    REQUIRE(r.code == 0);
    auto rows = csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"t", "rho", "theta", "rho2", "theta2", "value"});
    CHECK(number(rows[1][5]) == doctest::Approx(0.15191335118080419239).epsilon(1e-13));

    r = run({"kernel", "halfline-d", "--t", "0.1,0.2", "--r", "0", "--r2", "0.5,1,2"});
    REQUIRE(r.code == 0);
    rows = csv(r.out);
    REQUIRE(rows.size() == 7);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(number(rows[i][3]) == 0.0);

    r = run({"kernel", "halfline-robin", "--t", "0.5", "--r", "0.3", "--r2", "0.8", "--s", "1"});
    REQUIRE(r.code == 0);
    CHECK(number(csv(r.out)[1][4]) == doctest::Approx(0.39295139521552754608).epsilon(1e-13));

    r = run({"kernel", "mixed-diag", "--t", "0.1", "--rho", "10", "--theta", "0"});
    REQUIRE(r.code == 0);
    CHECK(number(csv(r.out)[1][3]) == doctest::Approx(1.0 / (0.4 * std::numbers::pi)).epsilon(1e-14));

    r = run({"kernel", "psi", "--t", "0.5", "--rho", "1", "--theta", "0", "--rho2", "1", "--theta2", "0",
             "--vertex", "robin", "--s", "0,1"});
    REQUIRE(r.code == 0);
    rows = csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][5] == "s");
}

TEST_CASE("exit codes")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    auto r = run({"kernel", "halfline-d", "--t", "-1", "--r", "1", "--r2", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(run({"kernel", "psi", "--t", "1", "--rho", "1", "--theta", "0", "--rho2", "1", "--theta2", "0",
               "--vertex", "robin"})
              .code == 2);
    CHECK(run({"kernel", "psi", "--t", "1", "--rho", "1", "--theta", "3", "--rho2", "1", "--theta2", "0"}).code ==
          2);
    CHECK(run({"trace", "--alpha", "1.0"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    // Robin with s < 0 and huge t s^2 is numerically unrepresentable
    CHECK(run({"kernel", "halfline-robin", "--t", "100", "--r", "1", "--r2", "1", "--s", "-10"}).code == 3);
    CHECK(run({"verify", "--suite", "kernels", "--tol-delta-slope", "0"}).code == 1);
}

TEST_CASE("trace output")
{
    const auto r = run({"trace"});
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == std::vector<std::string>{"t", "value", "tail_bound"});

    const spectra::SectorSpec half{std::numbers::pi, 1.0, spectra::BoundaryCondition::Dirichlet,
                                   spectra::BoundaryCondition::Neumann};
    const auto grid = spectra::default_t_grid();
    const auto lib = spectra::heat_trace_grid(half, grid, spectra::default_lambda_max(grid.front()));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(number(rows[i][0]) == lib[i - 1].t);
        CHECK(number(rows[i][1]) == lib[i - 1].value);
        if (i > 1) CHECK(number(rows[i][1]) < number(rows[i - 1][1]));
    }

    const std::filesystem::path golden = std::filesystem::path(ZAREMBA_GOLDEN_DIR) / "trace_half_disk_dn.csv";
    if (std::getenv("ZAREMBA_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(golden) << r.out;
    }
    REQUIRE(std::filesystem::exists(golden));
    CHECK(r.out == slurp(golden));

    CHECK(run({"trace", "--threads", "4"}).out == r.out);
    CHECK(run({"trace", "--alpha", "pi/2", "--bc-lo", "D", "--bc-hi", "D", "--points", "8"}).code == 0);
}

TEST_CASE("fit")
{
    auto r = run({"fit"});
    REQUIRE(r.code == 0);
    auto rows = csv(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(number(rows[1][0]) == -1.0);
    CHECK(number(rows[1][1]) == doctest::Approx(0.125).epsilon(1e-3));

    const auto tmp = std::filesystem::temp_directory_path() / "zaremba_fit_input.csv";
    {
        std::ofstream f(tmp);
        f.precision(17);
        f << "t,value\n";
        for (int i = 0; i < 10; ++i) {
            const double t = 0.01 * (i + 1);
            f << t << ',' << 2.0 / t + 3.0 + 0.5 * t << '\n';
        }
    }
    r = run({"fit", "--input", tmp.string(), "--exponents", "-1,0,1"});
    REQUIRE(r.code == 0);
    rows = csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(number(rows[1][1]) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(number(rows[2][1]) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(number(rows[3][1]) == doctest::Approx(0.5).epsilon(1e-8));
    std::filesystem::remove(tmp);
    CHECK(run({"fit", "--input", tmp.string()}).code == 2);
}

TEST_CASE("verify manifest")
{
    auto a = run({"verify", "--suite", "specfun", "--output", "-"});
    REQUIRE(a.code == 0);
    const auto b = run({"verify", "--suite", "specfun", "--output", "-"});
    CHECK(a.out == b.out);
    auto j = nlohmann::ordered_json::parse(a.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "version", "parameters", "tolerances", "outcome"});
    CHECK(j["outcome"]["pass"] == true);

    const auto c = run({"verify", "--suite", "specfun", "--output", "-", "--threads", "3"});
    auto jc = nlohmann::ordered_json::parse(c.out);
    CHECK(jc["parameters"]["threads"] == 3);
    CHECK(jc["outcome"] == j["outcome"]);

    const auto timed = run({"verify", "--suite", "specfun", "--output", "-", "--record-timing"});
    CHECK(nlohmann::json::parse(timed.out).contains("duration_seconds"));

    const auto tmp = std::filesystem::temp_directory_path() / "zaremba_manifest.json";
    const auto text = run({"verify", "--suite", "specfun", "--output", tmp.string()});
    CHECK(text.out.find("all checks passed") != std::string::npos);
    CHECK(slurp(tmp) == a.out);
    std::filesystem::remove(tmp);
}

TEST_CASE("output does not depend on the C locale")
{
    const auto before = run({"kernel", "halfline-n", "--t", "0.5", "--r", "0.25", "--r2", "1.5"});
    if (std::setlocale(LC_ALL, "de_DE.UTF-8") != nullptr) {
        const auto after = run({"kernel", "halfline-n", "--t", "0.5", "--r", "0.25", "--r2", "1.5"});
        CHECK(after.out == before.out);
        std::setlocale(LC_ALL, "C");
    }
    CHECK(before.out.find("0.25") != std::string::npos);
}

TEST_CASE("thread count from the environment")
{
    ::setenv("ZAREMBA_THREADS", "2", 1);
    const auto r = run({"verify", "--suite", "specfun", "--output", "-"});
    ::unsetenv("ZAREMBA_THREADS");
    CHECK(nlohmann::json::parse(r.out)["parameters"]["threads"] == 2);
}
