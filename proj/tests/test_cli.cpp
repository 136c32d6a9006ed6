#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uk/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = uk::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("anti-koksma") {
    const auto r = run({"anti-koksma", "--q", "2", "--M", "3", "--T", "8"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["ratio"] == "6");
    CHECK(j["delta"] == "1/256");
    CHECK(j["lhs"] == "3/128");
    CHECK(j["v_taib"] == "2");
    CHECK(run({"anti-koksma", "--q", "2", "--M", "3", "--T", "5"}).code == 1);
}

TEST_CASE("variation") {
    const auto r = run({"variation", "--func", R"({"kind":"indicator","disc":"1:1"})", "--q", "3", "--mode", "padic",
                        "--level", "4"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["taibleson"] == "1");
    CHECK(j["berkovich"] == "4/3");
    CHECK(j["beer"] == "2");
    CHECK(j["level"] == 4);

    const auto table = run({"variation", "--func", R"({"kind":"table","level":1,"values":[0,"1/2",1]})", "--q", "3",
                            "--ordering", "2,0,1"});
    REQUIRE(table.code == 0);
    CHECK(json_of(table)["taibleson"] == "1");

    const auto power = run({"variation", "--func", R"({"kind":"abs_power","c":"0","t":2})", "--q", "2", "--level", "20"});
    REQUIRE(power.code == 0);
    CHECK(json_of(power)["taibleson"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("discrepancy") {
    const auto grid = run({"discrepancy", "--points", "grid:3", "--q", "3"});
    REQUIRE(grid.code == 0);
    CHECK(json_of(grid)["delta"] == "1/27");
    CHECK(json_of(grid)["N"] == 27);
    CHECK(json_of(run({"discrepancy", "--points", "thm36:2:6", "--q", "3"}))["delta"] == "1/729");

    const std::string path = "uk_cli_points.txt";
    {
        std::ofstream file(path);
        file << "# two points\n1\n0,1\n";
    }
    const auto from_file = run({"discrepancy", "--points", path, "--q", "2"});
    std::remove(path.c_str());
    REQUIRE(from_file.code == 0);
    CHECK(json_of(from_file)["delta"] == "1/2");
    CHECK(run({"discrepancy", "--points", "missing-file.txt", "--q", "2"}).code == 1);
}

TEST_CASE("fourier") {
    const auto r = run({"fourier", "--func", R"({"kind":"indicator","disc":"1:0"})", "--q", "2", "--dump-coeffs", "-"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "index,level,re,im,abs\n0,0,0.5,0,0.5\n1,1,0.5,0,0.5\n");
    const auto summary = run({"fourier", "--func", R"({"kind":"indicator","disc":"1:0"})", "--q", "2"});
    REQUIRE(summary.code == 0);
    CHECK(json_of(summary)["fourier"].get<double>() == doctest::Approx(1.0));
    CHECK(run({"fourier", "--func", R"({"kind":"indicator","disc":"1:0"})", "--q", "4", "--mode", "powerseries"}).code == 1);
}

TEST_CASE("koksma") {
    const auto r = run({"koksma", "--func", R"({"kind":"abs_power","c":"0","t":1})", "--points", "grid:4", "--q", "3",
                        "--level", "8"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["all_hold"] == true);
    CHECK(j["delta"] == "1/81");
    CHECK(j["beer"]["holds"] == true);
    CHECK(j.contains("fourier"));
    const auto skipped = run({"koksma", "--func", R"({"kind":"indicator","disc":"1:1"})", "--points", "random:20:3:5",
                              "--q", "4", "--mode", "powerseries", "--no-fourier"});
    REQUIRE(skipped.code == 0);
    CHECK_FALSE(json_of(skipped).contains("fourier"));
}

TEST_CASE("sweep") {
    const std::vector<std::string> args{"sweep", "--q", "3", "--t-range", "0.25:4:0.25", "--level", "8"};
    const auto r = run(args);
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t,C_Beer_closed,C_Beer_trunc,C_Berk,C_Fourier_trunc,C_Fourier_closed");
    int rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string t, beer_closed, beer_trunc, berk;
        std::getline(cells, t, ',');
        std::getline(cells, beer_closed, ',');
        std::getline(cells, beer_trunc, ',');
        std::getline(cells, berk, ',');
        CHECK(std::stod(berk) < std::stod(beer_closed));
        ++rows;
    }
    CHECK(rows == 16);
    CHECK(run(args).out == r.out);
    CHECK(run({"sweep", "--q", "3", "--t-range", "0:1:0.5"}).code == 1);
    CHECK(run({"sweep", "--q", "3", "--t-range", "-1:1:0.5"}).code == 1);
}

TEST_CASE("errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"variation", "--q", "3"}).code == 1);
    const auto bad = run({"variation", "--func", "{not json", "--q", "3"});
    CHECK(bad.code == 1);
    CHECK(bad.err.rfind("error: ", 0) == 0);
    CHECK(run({"variation", "--func", R"({"kind":"abs_power","c":"0","t":0})", "--q", "3", "--level", "3"}).code == 1);
    CHECK(run({"variation", "--func", R"({"kind":"indicator","disc":"1:1","extra":1})", "--q", "3"}).code == 1);
    CHECK(run({"variation", "--func", R"({"kind":"indicator","disc":"1:1"})", "--q", "3", "--mode", "other"}).code == 1);
    CHECK(run({"discrepancy", "--points", "grid:2", "--q", "1"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
}
