// Copyright 2026 The EJM Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ejm/cli.hpp"
#include "ejm/errors.hpp"
#include "ejm/network.hpp"
#include "ejm/optimize.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ejm;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string num(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("verify") {
    const auto r = run({"verify", "--n", "3", "--z", "0.8", "--phi", "0.3", "--theta", "1.0", "--gamma", "0.5"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["schema"] == "ejm.verify");
    CHECK(j["version"] == cli::kSchemaVersion);
    CHECK(j["gram_error"].get<double>() < 1e-10);
    CHECK(j["completeness_error"].get<double>() < 1e-10);
    CHECK(j["ok"] == true);

    const auto strict = run({"verify", "--n", "4", "--tol", "1e-300"});
    CHECK(strict.code == cli::kExitVerificationFailed);
    CHECK(json::parse(strict.out)["ok"] == false);
}

TEST_CASE("domain errors name the flag") {
    const auto r = run({"sweep", "--vary", "phi", "--lo", "0", "--hi", "3.14159265", "--points", "5",
                        "--z", "0.57735", "--gamma", "0.785398", "--theta", "1.570796"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("--z") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(run({"network", "--gamma", "2"}).err.find("--gamma") != std::string::npos);
    const auto range = run({"sweep", "--lo", "0", "--hi", "4"});
    CHECK(range.code == cli::kExitUsage);
    CHECK(range.err.find("--lo/--hi") != std::string::npos);
    CHECK(run({"sweep", "--lo", "1", "--hi", "1"}).code == cli::kExitUsage);
    CHECK(run({"sweep", "--vary", "omega"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--n", "9"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--n", "1"}).code == cli::kExitUsage);
    CHECK(run({"tangle", "--n", "4"}).code == cli::kExitUsage);
    CHECK(run({"optimize", "--budget", "10"}).code == cli::kExitUsage);
    CHECK(run({"optimize", "--theta-range", "0", "3"}).err.find("--theta-range") != std::string::npos);
}

TEST_CASE("usage errors") {
    const auto unknown = run({"frobnicate"});
    CHECK(unknown.code == cli::kExitUsage);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"network", "--bogus"}).code == cli::kExitUsage);
    CHECK(run({"network", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"network", "--method", "guess"}).code == cli::kExitUsage);
    CHECK(run({"network", "--z", "abc"}).code == cli::kExitUsage);
    const auto help = run({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("sweep") != std::string::npos);
}

TEST_CASE("network report") {
    const auto r = run({"network", "--verify", "--method", "brute_force"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["schema"] == "ejm.network");
    CHECK(j["method"] == "brute_force");
    CHECK(j["verified"] == true);
    CHECK(j["violated"] == true);
    CHECK(std::abs(j["S"].get<double>() - 2.2968) < 5e-4);
    CHECK(j["params"]["phi_z"].get<double>() == doctest::Approx(support::pi / 2));
}

TEST_CASE("degrees flag") {
    const auto a = json::parse(run({"network", "--deg", "--phi", "45", "--theta", "90", "--gamma", "45"}).out);
    const auto b = json::parse(run({"network", "--phi", num(support::pi / 4)}).out);
    CHECK(a["params"]["phi"].get<double>() == doctest::Approx(support::pi / 4).epsilon(1e-15));
    CHECK(a["S"].get<double>() == doctest::Approx(b["S"].get<double>()).epsilon(1e-12));
}

TEST_CASE("tangle, reduce and basis reports") {
    const auto t = json::parse(run({"tangle", "--theta", "1.0", "--gamma", "0.4"}).out);
    CHECK(t["values"].size() == 8);
    for (const auto &v : t["values"]) {
        CHECK(std::abs(v["value"].get<double>() - t["predicted"].get<double>()) < 1e-9);
    }
    const auto c = json::parse(run({"tangle", "--n", "2"}).out);
    CHECK(c["measure"] == "concurrence");

    const auto r = run({"reduce", "--n", "5", "--theta", "0.3", "--gamma", "0.2"});
    CHECK(r.code == cli::kExitOk);
    const auto rj = json::parse(r.out);
    CHECK(rj["reductions"].size() == 32 * 5);
    CHECK(rj["parallelepiped_ok"] == true);
    CHECK(rj["vector_sum_norm"].get<double>() < 1e-9);

    const auto b = json::parse(run({"basis", "--n", "2"}).out);
    CHECK(b["states"].size() == 4);
    CHECK(b["states"][0]["amplitudes"].size() == 4);
}

TEST_CASE("csv export") {
    const auto r = run({"sweep", "--points", "3", "--format", "csv"});
    REQUIRE(r.code == cli::kExitOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "value,S");
    const auto comma = ls[3].find(',');
    CHECK(std::stod(ls[3].substr(0, comma)) == support::pi);

    const auto bad = run({"network", "--format", "csv"});
    CHECK(bad.code == cli::kExitUsage);
    CHECK(bad.err.find("--format") != std::string::npos);

    cli::Report plain{nlohmann::ordered_json::object(), std::nullopt};
    CHECK_THROWS_AS(cli::export_report(plain, cli::Format::csv), ArgumentError);
}

TEST_CASE("json numbers round-trip exactly") {
    const auto j = json::parse(run({"network", "--z", "0.9", "--phi", "0.5", "--theta", "1.0", "--gamma", "0.4"}).out);
    const auto direct = network::trilocal_score(bases::EjmParams(0.9, 0.5, 1.0, 0.4));
    for (std::size_t m = 0; m < 4; ++m) CHECK(j["I"][m].get<double>() == direct.I[m]);
    CHECK(j["S"].get<double>() == direct.S);

    const auto s = json::parse(run({"sweep", "--vary", "gamma", "--lo", "0.1", "--hi", "1.2", "--points", "7"}).out);
    const optimize::SweepSpec spec{optimize::Param::gamma, 0.1, 1.2, 7,
                                   bases::EjmParams(1.0, 0.1781, support::pi / 2, support::pi / 4)};
    const auto samples = optimize::sweep(spec);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        CHECK(s["samples"][k]["value"].get<double>() == samples[k].value);
        CHECK(s["samples"][k]["S"].get<double>() == samples[k].S);
    }
}

TEST_CASE("optimize") {
    const auto r = run({"optimize", "--budget", "20000"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["schema"] == "ejm.optimize");
    const double S = j["S"].get<double>();
    CHECK(S >= 2.2960);
    const auto lib = optimize::maximize(optimize::Bounds::standard());
    CHECK(S == lib.S);
    const auto p = j["params"];
    const auto again = network::trilocal_score(bases::EjmParams(
        p["z"].get<double>(), p["phi"].get<double>(), p["theta"].get<double>(), p["gamma"].get<double>()));
    CHECK(std::abs(again.S - S) < 1e-12);
    CHECK_FALSE(j.contains("trace"));

    const auto slice = json::parse(run({"optimize", "--z-range", "1", "1", "--trace", "--budget", "2000"}).out);
    CHECK(slice["trace"].size() == slice["evaluations"].get<std::size_t>());
    CHECK(slice["params"]["z"].get<double>() == 1.0);
}

TEST_CASE("byte reproducibility") {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"verify", "--n", "5"}, {"tangle"}, {"reduce", "--n", "4"},
          {"basis"}, {"network", "--method", "brute_force"}, {"sweep", "--format", "csv"},
          {"optimize", "--budget", "3000", "--trace"}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("output file and phi-sweep curves") {
    const auto dir = std::filesystem::temp_directory_path() / "ejm_cli_test";
    std::filesystem::create_directories(dir);
    const std::array<std::pair<const char *, double>, 3> curves{
        {{"z1.csv", 1.0}, {"z2.csv", 1 / std::sqrt(2.0)}, {"z3.csv", 1 / std::sqrt(3.0)}}};
    std::array<double, 3> peaks{};
    for (std::size_t c = 0; c < 3; ++c) {
        const auto path = (dir / curves[c].first).string();
        const auto r = run({"sweep", "--vary", "phi", "--lo", "0", "--hi", num(support::pi),
                            "--points", "200", "--z", num(curves[c].second), "--format", "csv", "-o", path});
        REQUIRE(r.code == cli::kExitOk);
        CHECK(r.out.empty());
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        const auto ls = lines(buf.str());
        REQUIRE(ls.size() == 201);
        double peak = 0.0;
        for (std::size_t k = 1; k < ls.size(); ++k) {
            peak = std::max(peak, std::stod(ls[k].substr(ls[k].find(',') + 1)));
        }
        peaks[c] = peak;
    }
    CHECK(peaks[0] >= 2.29);
    CHECK(peaks[1] > 2.0);
    CHECK(peaks[2] <= 2.0 + 1e-9);
    std::filesystem::remove_all(dir);

    CHECK(run({"network", "-o", "/nonexistent/dir/out.json"}).code == cli::kExitUsage);
}

TEST_CASE("thread count from the environment") {
    ::setenv("EJM_THREADS", "zero", 1);
    const auto bad = run({"network"});
    CHECK(bad.code == cli::kExitUsage);
    CHECK(bad.err.find("EJM_THREADS") != std::string::npos);
    ::setenv("EJM_THREADS", "2", 1);
    const auto a = run({"verify", "--n", "6"});
    ::unsetenv("EJM_THREADS");
    const auto b = run({"verify", "--n", "6"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
}
