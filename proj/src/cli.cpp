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

#include "ejm/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ejm/analysis.hpp"
#include "ejm/bases.hpp"
#include "ejm/errors.hpp"
#include "ejm/network.hpp"
#include "ejm/parallel.hpp"

namespace ejm::cli {

namespace {

using json = nlohmann::ordered_json;
using std::numbers::pi;

constexpr double kVerifyTol = 1e-9;

// Raised for bad arguments detected after parsing; carries the message.
struct UsageError {
    std::string message;
};

struct ParamFlags {
    double z = 1.0;
    double phi = 0.1781;
    double theta = pi / 2;
    double gamma = pi / 4;
};

struct Options {
    ParamFlags params;
    bool degrees = false;
    std::size_t n = 3;
    std::size_t max_qubits = bases::kDefaultMaxQubits;
    std::string output;
    std::string format = "json";

    double tol = kVerifyTol;
    std::string method = "analytic";
    bool verify = false;

    std::string vary = "phi";
    double lo = 0.0;
    double hi = pi;
    int points = 200;

    std::size_t budget = 20000;
    int grid = 9;
    int starts = 5;
    bool trace = false;
    std::vector<double> z_range;
    std::vector<double> phi_range;
    std::vector<double> theta_range;
    std::vector<double> gamma_range;
};

double to_radians(double v, bool degrees) { return degrees ? v * pi / 180.0 : v; }

bool is_angle(optimize::Param p) { return p != optimize::Param::z; }

json vec3(const qla::BlochVector &v) { return json::array({v.x, v.y, v.z}); }

json params_json(const bases::EjmParams &p) {
    return json{{"z", p.z()},
                {"phi", p.phi()},
                {"theta", p.theta()},
                {"gamma", p.gamma()},
                {"phi_z", p.phi_z()}};
}

json header(const std::string &kind) {
    return json{{"schema", "ejm." + kind}, {"version", kSchemaVersion}};
}

bases::EjmParams make_params(const Options &o) {
    try {
        return {o.params.z, to_radians(o.params.phi, o.degrees),
                to_radians(o.params.theta, o.degrees),
                to_radians(o.params.gamma, o.degrees)};
    } catch (const DomainError &e) {
        throw UsageError{"--" + e.parameter() + ": " + e.what()};
    }
}

bases::BasisFamily make_family(const Options &o, const bases::EjmParams &params) {
    try {
        return bases::n_qubit_ejm(params, o.n, o.max_qubits);
    } catch (const ArgumentError &e) {
        throw UsageError{std::string("--n: ") + e.what()};
    } catch (const ResourceError &e) {
        throw UsageError{std::string("--n: ") + e.what()};
    }
}

Report cmd_verify(const Options &o, int &status) {
    const auto params = make_params(o);
    const auto family = make_family(o, params);
    const auto check = analysis::verify_orthonormal_complete(family);
    const bool ok = check.gram_error < o.tol && check.completeness_error < o.tol;
    status = ok ? kExitOk : kExitVerificationFailed;
    json body = header("verify");
    body["n"] = o.n;
    body["params"] = params_json(params);
    body["states"] = family.size();
    body["gram_error"] = check.gram_error;
    body["completeness_error"] = check.completeness_error;
    body["tolerance"] = o.tol;
    body["ok"] = ok;
    return {body, std::nullopt};
}

Report cmd_tangle(const Options &o) {
    if (o.n != 2 && o.n != 3) {
        throw UsageError{"--n: entanglement is reported for n = 2 (concurrence) "
                         "or n = 3 (three-tangle) only"};
    }
    const auto params = make_params(o);
    const auto family = make_family(o, params);
    json body = header("tangle");
    body["n"] = o.n;
    body["params"] = params_json(params);
    body["measure"] = o.n == 3 ? "three_tangle" : "concurrence";
    json values = json::array();
    for (const auto &e : family.entries()) {
        const double v = o.n == 3 ? analysis::three_tangle(e.state).value
                                  : analysis::concurrence(e.state);
        values.push_back(json{{"label", e.label.to_string()}, {"value", v}});
    }
    body["values"] = values;
    if (o.n == 3) {
        const double s2g = std::sin(2.0 * params.gamma());
        body["predicted"] = s2g * s2g * std::sin(params.theta());
    }
    return {body, std::nullopt};
}

Report cmd_reduce(const Options &o, int &status) {
    const auto params = make_params(o);
    const auto family = make_family(o, params);
    const auto report = analysis::symmetry_report(family);
    json body = header("reduce");
    body["n"] = o.n;
    body["params"] = params_json(params);
    json reductions = json::array();
    for (const auto &r : report.reductions) {
        reductions.push_back(json{{"label", r.label.to_string()},
                                  {"qubit", r.qubit},
                                  {"vector", vec3(r.vector)}});
    }
    body["reductions"] = reductions;
    body["radii"] = report.radii;
    body["vector_sum"] = vec3(report.vector_sum);
    body["vector_sum_norm"] = report.vector_sum.norm();
    body["parallelepiped_ok"] = report.parallelepiped_ok;
    body["mirror_pairs_ok"] = report.mirror_pairs_ok;
    body["degenerate"] = report.degenerate;
    const bool ok = report.parallelepiped_ok && report.mirror_pairs_ok &&
                    report.vector_sum.norm() < analysis::kGeometryTol;
    status = ok ? kExitOk : kExitVerificationFailed;
    return {body, std::nullopt};
}

Report cmd_basis(const Options &o) {
    const auto params = make_params(o);
    const auto family = make_family(o, params);
    json body = header("basis");
    body["n"] = o.n;
    body["params"] = params_json(params);
    json states = json::array();
    for (const auto &e : family.entries()) {
        json amps = json::array();
        for (const auto &a : e.state.amplitudes()) {
            amps.push_back(json::array({a.real(), a.imag()}));
        }
        states.push_back(json{{"label", e.label.to_string()}, {"amplitudes", amps}});
    }
    body["states"] = states;
    return {body, std::nullopt};
}

Report cmd_network(const Options &o, int &status) {
    const auto params = make_params(o);
    const auto method = o.method == "brute_force" ? network::Method::brute_force
                                                  : network::Method::analytic;
    network::CorrelationReport report;
    try {
        report = network::trilocal_score(params, method, o.verify);
    } catch (const ContractError &) {
        status = kExitVerificationFailed;
        report = network::trilocal_score(params, method, false);
    }
    json body = header("network");
    body["params"] = params_json(params);
    body["method"] = std::string(network::to_string(report.method));
    body["I"] = report.I;
    body["S"] = report.S;
    body["bound"] = network::kTrilocalBound;
    body["violated"] = report.violated;
    body["verified"] = o.verify && status == kExitOk;
    return {body, std::nullopt};
}

Report cmd_sweep(const Options &o) {
    const auto params = make_params(o);
    const auto varying = optimize::parse_param(o.vary);
    if (!varying) {
        throw UsageError{"--vary: expected one of z, phi, theta, gamma"};
    }
    const bool angle = is_angle(*varying);
    const optimize::SweepSpec spec{*varying,
                                   angle ? to_radians(o.lo, o.degrees) : o.lo,
                                   angle ? to_radians(o.hi, o.degrees) : o.hi,
                                   o.points, params};
    std::vector<optimize::SweepSample> samples;
    try {
        samples = optimize::sweep(spec);
    } catch (const DomainError &e) {
        throw UsageError{std::string("--lo/--hi: ") + e.what()};
    } catch (const ArgumentError &e) {
        throw UsageError{std::string("--lo/--hi/--points: ") + e.what()};
    }
    json body = header("sweep");
    body["vary"] = o.vary;
    body["lo"] = spec.lo;
    body["hi"] = spec.hi;
    body["points"] = spec.points;
    body["fixed"] = params_json(params);
    json rows = json::array();
    double best = -1.0;
    for (const auto &s : samples) {
        rows.push_back(json{{"value", s.value}, {"S", s.S}});
        best = std::max(best, s.S);
    }
    body["samples"] = rows;
    body["max_S"] = best;
    return {body, samples};
}

Report cmd_optimize(const Options &o) {
    auto bounds = optimize::Bounds::standard();
    const std::pair<const std::vector<double> *, optimize::Param> ranges[] = {
        {&o.z_range, optimize::Param::z},
        {&o.phi_range, optimize::Param::phi},
        {&o.theta_range, optimize::Param::theta},
        {&o.gamma_range, optimize::Param::gamma}};
    for (const auto &[range, p] : ranges) {
        if (range->empty()) {
            continue;
        }
        const bool angle = is_angle(p);
        bounds[p] = {angle ? to_radians((*range)[0], o.degrees) : (*range)[0],
                     angle ? to_radians((*range)[1], o.degrees) : (*range)[1]};
    }
    optimize::MaximizeOptions options;
    options.budget = o.budget;
    options.grid_points = o.grid;
    options.starts = o.starts;
    optimize::OptimumResult result = [&] {
        try {
            return optimize::maximize(bounds, options);
        } catch (const DomainError &e) {
            throw UsageError{"--" + e.parameter() + "-range: " + e.what()};
        } catch (const ArgumentError &e) {
            throw UsageError{e.what()};
        }
    }();

    json body = header("optimize");
    json box = json::object();
    for (const auto &[range, p] : ranges) {
        (void)range;
        box[std::string(optimize::to_string(p))] = json::array({bounds[p].lo, bounds[p].hi});
    }
    body["bounds"] = box;
    body["budget"] = o.budget;
    body["evaluations"] = result.trace.size();
    body["grid_only"] = result.grid_only;
    body["params"] = params_json(result.params);
    body["S"] = result.S;
    body["violated"] = result.S > network::kTrilocalBound;
    if (o.trace) {
        json trace = json::array();
        for (const auto &t : result.trace) {
            trace.push_back(json{{"z", t.params.z()},
                                 {"phi", t.params.phi()},
                                 {"theta", t.params.theta()},
                                 {"gamma", t.params.gamma()},
                                 {"S", t.S}});
        }
        body["trace"] = trace;
    }
    return {body, std::nullopt};
}

void add_param_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--z", o.params.z, "z, with 1/sqrt(3) <= |z| <= 1")->capture_default_str();
    cmd->add_option("--phi", o.params.phi, "phi in [-pi, pi]")->capture_default_str();
    cmd->add_option("--theta", o.params.theta, "theta in [0, pi/2]")->capture_default_str();
    cmd->add_option("--gamma", o.params.gamma, "gamma in [0, pi/2]")->capture_default_str();
    cmd->add_flag("--deg", o.degrees, "angles are given in degrees");
}

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("-o,--output", o.output, "write the report to this file");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void add_qubits(CLI::App *cmd, Options &o) {
    cmd->add_option("--n", o.n, "qubit count")->capture_default_str();
    cmd->add_option("--max-qubits", o.max_qubits, "qubit cap")->capture_default_str();
}

} // namespace

std::string export_report(const Report &report, Format format) {
    if (format == Format::json) {
        return report.body.dump(2) + "\n";
    }
    if (!report.table) {
        throw ArgumentError("CSV export is only available for sweeps");
    }
    std::string out = "value,S\n";
    char line[96];
    for (const auto &s : *report.table) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", s.value, s.S);
        out += line;
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symmetric joint measurements on n qubits and the trilocal star network", "ejm"};
    app.require_subcommand(1);
    Options o;

    auto *verify = app.add_subcommand("verify", "check orthonormality and completeness");
    add_param_flags(verify, o);
    add_qubits(verify, o);
    add_common(verify, o);
    verify->add_option("--tol", o.tol, "failure threshold")->capture_default_str();

    auto *tangle = app.add_subcommand("tangle", "entanglement of every basis state");
    add_param_flags(tangle, o);
    add_qubits(tangle, o);
    add_common(tangle, o);

    auto *reduce = app.add_subcommand("reduce", "single-qubit reductions and symmetry");
    add_param_flags(reduce, o);
    add_qubits(reduce, o);
    add_common(reduce, o);

    auto *basis = app.add_subcommand("basis", "dump basis amplitudes");
    add_param_flags(basis, o);
    add_qubits(basis, o);
    add_common(basis, o);

    auto *net = app.add_subcommand("network", "trilocal star-network correlations");
    add_param_flags(net, o);
    add_common(net, o);
    net->add_option("--method", o.method, "analytic or brute_force")
        ->check(CLI::IsMember({"analytic", "brute_force"}))
        ->capture_default_str();
    net->add_flag("--verify", o.verify, "cross-check against the other method");

    auto *sw = app.add_subcommand("sweep", "trilocal score along one parameter");
    add_param_flags(sw, o);
    add_common(sw, o);
    sw->add_option("--vary", o.vary, "z, phi, theta or gamma")->capture_default_str();
    sw->add_option("--lo", o.lo, "first value")->capture_default_str();
    sw->add_option("--hi", o.hi, "last value")->capture_default_str();
    sw->add_option("--points", o.points, "sample count (>= 2)")->capture_default_str();

    auto *opt = app.add_subcommand("optimize", "maximize the trilocal score");
    add_common(opt, o);
    opt->add_flag("--deg", o.degrees, "angle ranges are given in degrees");
    opt->add_option("--budget", o.budget, "evaluation budget (>= 100)")->capture_default_str();
    opt->add_option("--grid", o.grid, "grid points per dimension")->capture_default_str();
    opt->add_option("--starts", o.starts, "local refinements")->capture_default_str();
    opt->add_flag("--trace", o.trace, "include every evaluation");
    opt->add_option("--z-range", o.z_range, "z bounds")->expected(2);
    opt->add_option("--phi-range", o.phi_range, "phi bounds")->expected(2);
    opt->add_option("--theta-range", o.theta_range, "theta bounds")->expected(2);
    opt->add_option("--gamma-range", o.gamma_range, "gamma bounds")->expected(2);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    if (const char *env = std::getenv("EJM_THREADS")) {
        if (!parallel::parse_thread_count(env)) {
            err << "error: EJM_THREADS must be a positive integer\n";
            return kExitUsage;
        }
    }

    int status = kExitOk;
    Report report;
    try {
        if (verify->parsed()) {
            report = cmd_verify(o, status);
        } else if (tangle->parsed()) {
            report = cmd_tangle(o);
        } else if (reduce->parsed()) {
            report = cmd_reduce(o, status);
        } else if (basis->parsed()) {
            report = cmd_basis(o);
        } else if (net->parsed()) {
            report = cmd_network(o, status);
        } else if (sw->parsed()) {
            report = cmd_sweep(o);
        } else {
            report = cmd_optimize(o);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.message << "\n";
        return kExitUsage;
    }

    const Format format = o.format == "csv" ? Format::csv : Format::json;
    std::string text;
    try {
        text = export_report(report, format);
    } catch (const ArgumentError &e) {
        err << "error: --format: " << e.what() << "\n";
        return kExitUsage;
    }

    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: --output: cannot open " << o.output << "\n";
            return kExitUsage;
        }
        file << text;
    }
    return status;
}

} // namespace ejm::cli
