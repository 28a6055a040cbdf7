#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "conic2bezier/cli.hpp"
#include "conic2bezier/error_analysis.hpp"
#include "doctest.h"
#include "support/path_text.hpp"

using namespace conic2bezier;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const char* name) { return std::string(C2B_TEST_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const char* name) {
    const auto dir = std::filesystem::temp_directory_path() / "conic2bezier_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("render") {
    SUBCASE("empty scene to stdout") {
        const Run r = run({"render", data_path("empty.json")});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("<svg") != std::string::npos);
        CHECK(r.out.find("<path") == std::string::npos);
    }
    SUBCASE("to a file, deterministic") {
        const auto out = scratch("pies.svg");
        REQUIRE(run({"render", data_path("six_pies.json"), "-o", out.string()}).code == kExitOk);
        const std::string first = slurp(out);
        REQUIRE(run({"render", data_path("six_pies.json"), "--output", out.string()}).code == kExitOk);
        CHECK(slurp(out) == first);
        CHECK(pathtext::path_attributes(first).size() == 30);
    }
    SUBCASE("segment options") {
        const Run five = run({"render", data_path("unit_circle.json")});
        const Run eight = run({"render", data_path("unit_circle.json"), "--nsegs", "8"});
        auto curves = [](const std::string& svg) {
            const auto cmds = pathtext::parse(pathtext::path_attributes(svg).at(0));
            return std::count_if(cmds.begin(), cmds.end(), [](const auto& c) { return c.op == 'C'; });
        };
        CHECK(curves(five.out) == 5);
        CHECK(curves(eight.out) == 8);
        const Run tol = run({"render", data_path("unit_circle.json"), "--nsegs", "8", "--tolerance", "0.01"});
        CHECK(tol.code == kExitOk);
        CHECK(curves(tol.out) == segments_for_tolerance({{0, 0}, {1, 0}, {0, 1}}, 2 * kPi, 0.01));
        CHECK(run({"render", data_path("six_pies.json"), "--max-phi", "0.5"}).code == kExitOk);
    }
    SUBCASE("precision from the environment") {
        // unit_circle.json pins precision 6; empty.json does not.
        const auto scene = scratch("noprec.json");
        std::ofstream(scene) << R"({"width":4,"height":4,"items":[{"kind":"arc","C":[0,0],"P":[1,0],"Q":[0,1],"astart":0,"asweep":1.5707963267948966}]})";
        ::setenv("CONIC2BEZIER_PRECISION", "2", 1);
        const Run r = run({"render", scene.string()});
        ::unsetenv("CONIC2BEZIER_PRECISION");
        CHECK(r.code == kExitOk);
        CHECK(pathtext::path_attributes(r.out).at(0) == "M1 0 C1 0.55 0.55 1 0 1");
    }
    SUBCASE("validation failures exit 1") {
        const auto bad = scratch("bad.json");
        std::ofstream(bad) << R"({"width":-1,"height":1,"items":[]})";
        const Run r = run({"render", bad.string()});
        CHECK(r.code == kExitValidation);
        CHECK(r.err.find("width") != std::string::npos);

        const auto broken = scratch("broken.json");
        std::ofstream(broken) << "{\"width\":";
        CHECK(run({"render", broken.string()}).code == kExitValidation);

        CHECK(run({"render", data_path("unit_circle.json"), "--nsegs", "1"}).code == kExitValidation);
        CHECK(run({"render", data_path("unit_circle.json"), "--max-phi", "3"}).code == kExitValidation);
        CHECK(run({"render", data_path("unit_circle.json"), "--tolerance", "-1"}).code == kExitValidation);
    }
    SUBCASE("I/O failures exit 2") {
        CHECK(run({"render", data_path("does_not_exist.json")}).code == kExitIo);
        CHECK(run({"render", data_path("empty.json"), "-o", "/nonexistent-dir/x.svg"}).code == kExitIo);
    }
}

TEST_CASE("error-table") {
    const Run r = run({"error-table", "--grid", "1000"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "phi_radians,eps_closed,eps_sampled,t_argmax");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        double phi, closed, sampled, t;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &phi, &closed, &sampled, &t) == 4);
        CHECK(phi == doctest::Approx(rows * kPi / 10).epsilon(1e-11));
        CHECK(closed == doctest::Approx(eps_max(rows * kPi / 10)).epsilon(1e-11));
    }
    CHECK(rows == 9);

    const auto out = scratch("table.csv");
    CHECK(run({"error-table", "-o", out.string(), "--grid", "1000"}).code == kExitOk);
    CHECK(slurp(out) == r.out);
    CHECK(run({"error-table", "--grid", "10"}).code == kExitValidation);
}

TEST_CASE("probe") {
    const Run r = run({"probe", "--phi", "1.5707963267948966"});
    CHECK(r.code == kExitOk);
    double eps = 0, psi = 0, sampled = 0, t = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        std::sscanf(line.c_str(), "eps_max=%lf", &eps);
        std::sscanf(line.c_str(), "psi_max=%lf", &psi);
        std::sscanf(line.c_str(), "eps_sampled=%lf", &sampled);
        std::sscanf(line.c_str(), "t_argmax=%lf", &t);
    }
    CHECK(eps == doctest::Approx(2.7e-4).epsilon(0.05));
    CHECK(psi == doctest::Approx(2 * eps).epsilon(1e-9));
    CHECK(sampled == doctest::Approx(eps).epsilon(1e-3));
    CHECK(t == doctest::Approx(0.2113).epsilon(0.01));

    CHECK(run({"probe"}).code == kExitValidation);
    CHECK(run({"probe", "--phi", "7"}).code == kExitValidation);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitValidation);
    CHECK(run({"frobnicate"}).code == kExitValidation);
    const Run r = run({"render", data_path("empty.json"), "--bogus"});
    CHECK(r.code == kExitValidation);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"--help"}).code == kExitOk);
}
