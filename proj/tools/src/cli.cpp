// Copyright 2026 The cvtele Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtele/cli.hpp"

#include "cvtele/errors.hpp"
#include "cvtele/fidelity.hpp"
#include "cvtele/gaussian_state.hpp"
#include "cvtele/oracle.hpp"
#include "cvtele/scan.hpp"
#include "cvtele/state_io.hpp"
#include "cvtele/symmetry.hpp"
#include "cvtele/version.hpp"
#include "cvtele/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace cvtele::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string state_file;
    std::optional<double> tmss_r;
    double g = 1.0;
    double t_a = 1.0;
    double t_b = 1.0;
    double ratio = 1.0;
    double q = 2.0;
    double p = 2.0;
    std::optional<std::size_t> steps;
    double g_max = 4.0;
    std::size_t samples = 1000000;
    std::uint64_t seed = 42;
    double alpha_re = 0.5;
    double alpha_im = 0.25;
    std::string out;
    std::string format;  // empty: json for reports, csv for scans
    std::string emit_state;
    unsigned threads = 1;
};

/// Failure carrying the exit code it maps to.
struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NonSymmetricBlock:
    case ErrorCode::NonZeroMean:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidEta:
        return kInputError;
    default:
        return kPreconditionViolated;
    }
}

json matrix_json(const Matrix4& m)
{
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2), m(i, 3)}));
    }
    return rows;
}

json config_json(const RunConfig& cfg)
{
    json state;
    if (cfg.tmss_r) {
        state = {{"source", "tmss"}, {"r", *cfg.tmss_r}};
    } else if (!cfg.state_file.empty()) {
        state = {{"source", "file"}, {"path", cfg.state_file}};
    }
    json c = {
        {"command", cfg.command},
        {"state", state},
        {"g", cfg.g},
        {"ta", cfg.t_a},
        {"tb", cfg.t_b},
        {"ratio", cfg.ratio},
        {"Q", cfg.q},
        {"P", cfg.p},
        {"steps", cfg.steps ? json(*cfg.steps) : json(nullptr)},
        {"g_max", cfg.g_max},
        {"samples", cfg.samples},
        {"seed", cfg.seed},
        {"alpha", {cfg.alpha_re, cfg.alpha_im}},
        {"out", cfg.out},
        {"format", cfg.format},
        {"threads", cfg.threads},
    };
    return c;
}

json envelope(const RunConfig& cfg)
{
    return {{"tool", "cvtele"}, {"version", kVersion}, {"command", cfg.command}, {"config", config_json(cfg)}};
}

TwoModeState load_state(const RunConfig& cfg)
{
    const bool has_file = !cfg.state_file.empty();
    if (has_file == cfg.tmss_r.has_value()) {
        throw CliFailure{kInputError, "exactly one of --state FILE or --tmss R is required"};
    }
    if (cfg.tmss_r) {
        if (!std::isfinite(*cfg.tmss_r)) {
            throw CliFailure{kInputError, "--tmss must be finite"};
        }
        return two_mode_squeezed_state(*cfg.tmss_r);
    }
    return load_state_file(cfg.state_file);
}

json optional_number(const std::optional<double>& x)
{
    return x ? json(*x) : json(nullptr);
}

// Writes text to --out if given, otherwise to the output stream.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        throw CliFailure{kInputError, "cannot write " + cfg.out};
    }
    file << text;
}

std::string scalar_text(const json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", v.get<double>());
        return buf;
    }
    return v.dump();
}

// json: the document; csv: key,value rows for the scalar fields.
std::string render(const RunConfig& cfg, const json& doc)
{
    if (cfg.format == "json") {
        return doc.dump(2) + "\n";
    }
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto& [key, value] : doc.items()) {
        if (value.is_primitive()) {
            csv << key << ',' << scalar_text(value) << '\n';
        }
    }
    return csv.str();
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw CliFailure{kInputError, "unsupported --format " + cfg.format + " for " + cfg.command};
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out)
{
    require_format(cfg, {"json", "csv"});
    const TwoModeState state = load_state(cfg);
    const ChannelParams channel(cfg.t_a, cfg.t_b);
    const Gain g(cfg.g);

    json doc = envelope(cfg);
    doc["V"] = matrix_json(state.covariance());

    std::optional<SymplecticInvariants> inv;
    try {
        inv = symplectic_invariants(state);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ComplexEigenvalue) {
            throw;
        }
    }
    const bool physical = inv && inv->nu_minus >= 1.0 - kPhysicalTolerance;
    doc["physical"] = physical;
    doc["nu_minus"] = inv ? json(inv->nu_minus) : json(nullptr);
    doc["nu_plus"] = inv ? json(inv->nu_plus) : json(nullptr);
    doc["nu_tilde_minus"] = inv ? json(inv->nu_tilde_minus) : json(nullptr);
    doc["ppt_entangled"] = physical ? json(ppt_entangled(state)) : json(nullptr);

    const WitnessReport report = witness_report(state, channel, g);
    doc["fidelity"] = report.fidelity;
    doc["cft"] = report.cft;
    doc["quantum"] = report.fidelity > report.cft + kWitnessTolerance;
    doc["w_all"] = report.w_all;
    doc["w_sum"] = report.w_sum;
    doc["w_prod"] = report.w_prod;
    doc["w_rob"] = report.w_rob;
    doc["w_full"] = report.w_full;
    doc["var_u"] = report.var_u;
    doc["var_v"] = report.var_v;
    doc["eta"] = optional_number(report.eta);

    std::optional<double> g_min;
    std::optional<bool> g_min_out;
    try {
        const auto og = optimal_gain(state, channel);
        g_min = og.value;
        g_min_out = og.out_of_domain;
    } catch (const Error&) {
        // t_A = 0 or tr A = 2: no interior minimiser to report.
    }
    doc["g_min"] = optional_number(g_min);
    doc["g_min_out_of_domain"] = g_min_out ? json(*g_min_out) : json(nullptr);

    std::optional<double> theta;
    try {
        theta = canonicalize(state, channel, g).theta;
    } catch (const Error&) {
    }
    doc["canonical_theta"] = optional_number(theta);

    Region region = Region::Unphysical;
    if (physical) {
        region = classify(state, channel, g);
    }
    doc["region"] = std::string(to_string(region));

    if (!cfg.emit_state.empty()) {
        std::ofstream file(cfg.emit_state);
        if (!file) {
            throw CliFailure{kInputError, "cannot write " + cfg.emit_state};
        }
        file << state_to_json(state) << '\n';
    }
    emit(cfg, render(cfg, doc), out);
    return kOk;
}

void write_sidecar(const RunConfig& cfg, json meta)
{
    if (cfg.out.empty()) {
        return;
    }
    const std::filesystem::path path = std::filesystem::path(cfg.out).replace_extension(".json");
    std::ofstream file(path);
    if (!file) {
        throw CliFailure{kInputError, "cannot write " + path.string()};
    }
    file << meta.dump(2) << '\n';
}

std::size_t steps_or(const RunConfig& cfg, std::size_t fallback)
{
    return cfg.steps.value_or(fallback);
}

int cmd_scan_region(const RunConfig& cfg, std::ostream& out)
{
    require_format(cfg, {"csv"});
    if (!(cfg.t_a > 0.0)) {
        throw CliFailure{kInputError, "--ta must be positive to turn --ratio into a gain"};
    }
    // ratio = g t_A / t_B.
    const double g_value = cfg.ratio * cfg.t_b / cfg.t_a;
    const SymmetricFamilyParams family{cfg.q, cfg.p};
    const ChannelParams channel(cfg.t_a, cfg.t_b);
    const std::size_t n = steps_or(cfg, 400);
    const RegionGrid grid = region_scan(family, channel, Gain(g_value), n, cfg.threads);

    std::ostringstream csv;
    write_region_csv(csv, grid);
    emit(cfg, csv.str(), out);

    std::map<std::string, std::size_t> counts;
    for (const Region r : grid.labels) {
        ++counts[std::string(to_string(r))];
    }
    json meta = envelope(cfg);
    meta["family"] = {{"Q", cfg.q}, {"P", cfg.p}};
    meta["g"] = g_value;
    const auto axis_json = [](const Axis& a) {
        return json{{"min", a.min}, {"max", a.max}, {"steps", a.steps}};
    };
    meta["grid"] = {{"kq_bar", axis_json(grid.kq_axis)}, {"kp_bar", axis_json(grid.kp_axis)}};
    meta["label_counts"] = counts;
    write_sidecar(cfg, meta);
    return kOk;
}

json transmissivity_grid(std::size_t n)
{
    json axis = {{"min", transmissivity_at(0, n)}, {"max", 1.0}, {"steps", n}};
    return {{"ta", axis}, {"tb", axis}};
}

int cmd_scan_surface(const RunConfig& cfg, std::ostream& out)
{
    require_format(cfg, {"csv"});
    const TwoModeState state = load_state(cfg);
    const std::size_t n = steps_or(cfg, 100);
    const SurfaceGrid grid = fidelity_surface(state, Gain(cfg.g), n, cfg.threads);
    std::ostringstream csv;
    write_surface_csv(csv, grid);
    emit(cfg, csv.str(), out);

    json meta = envelope(cfg);
    meta["V"] = matrix_json(state.covariance());
    meta["g"] = cfg.g;
    meta["grid"] = transmissivity_grid(n);
    write_sidecar(cfg, meta);
    return kOk;
}

int cmd_scan_robustness(const RunConfig& cfg, std::ostream& out)
{
    require_format(cfg, {"csv"});
    const TwoModeState state = load_state(cfg);
    const std::size_t n = steps_or(cfg, 20);
    const RobustnessGrid grid = robustness_sweep(state, n, cfg.threads);
    std::ostringstream csv;
    write_robustness_csv(csv, grid);
    emit(cfg, csv.str(), out);

    json meta = envelope(cfg);
    meta["V"] = matrix_json(state.covariance());
    meta["grid"] = transmissivity_grid(n);
    meta["all_quantum"] = grid.all_quantum();
    write_sidecar(cfg, meta);
    return kOk;
}

int cmd_scan_gain(const RunConfig& cfg, std::ostream& out)
{
    require_format(cfg, {"csv"});
    const TwoModeState state = load_state(cfg);
    const GainRange range{0.0, cfg.g_max, steps_or(cfg, 401)};
    const auto sweep = gain_sweep(state, ChannelParams(cfg.t_a, cfg.t_b), range);
    std::ostringstream csv;
    write_gain_csv(csv, sweep);
    emit(cfg, csv.str(), out);

    json meta = envelope(cfg);
    meta["V"] = matrix_json(state.covariance());
    meta["grid"] = {{"g", {{"min", range.g_min}, {"max", range.g_max}, {"steps", range.steps}}}};
    write_sidecar(cfg, meta);
    return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out)
{
    require_format(cfg, {"json", "csv"});
    const TwoModeState state = load_state(cfg);
    const ChannelParams channel(cfg.t_a, cfg.t_b);
    const Gain g(cfg.g);
    bool physical = false;
    try {
        physical = is_physical(state);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ComplexEigenvalue) {
            throw;
        }
    }
    if (!physical) {
        throw CliFailure{kPreconditionViolated, "state fails bona-fide condition"};
    }

    const CoherentAmplitude alpha{cfg.alpha_re, cfg.alpha_im};
    const double analytic = mean_fidelity(state, channel, g);
    McOptions options;
    options.threads = cfg.threads;
    const McEstimate mc = mc_fidelity(state, channel, g, alpha, cfg.samples, cfg.seed, options);
    const double grid = grid_overlap_fidelity(state, channel, g, alpha);

    constexpr double kSigmas = 4.0;
    constexpr double kGridTolerance = 1e-4;
    const double mc_dev = std::abs(mc.fidelity_hat - analytic);
    const bool mc_pass = mc_dev <= kSigmas * mc.std_error;
    const bool grid_pass = std::abs(grid - analytic) <= kGridTolerance;

    json doc = envelope(cfg);
    doc["analytic"] = analytic;
    doc["cft"] = classical_threshold(g);
    doc["mc_fidelity"] = mc.fidelity_hat;
    doc["mc_std_error"] = mc.std_error;
    doc["mc_z"] = mc.std_error > 0.0 ? mc_dev / mc.std_error : 0.0;
    doc["mc_pass"] = mc_pass;
    doc["grid_fidelity"] = grid;
    doc["grid_error"] = std::abs(grid - analytic);
    doc["grid_pass"] = grid_pass;
    doc["pass"] = mc_pass && grid_pass;
    emit(cfg, render(cfg, doc), out);
    return mc_pass && grid_pass ? kOk : kValidationFailed;
}

int cmd_optimal_gain(const RunConfig& cfg, std::ostream& out)
{
    require_format(cfg, {"json", "csv"});
    const TwoModeState state = load_state(cfg);
    const ChannelParams channel(cfg.t_a, cfg.t_b);
    const OptimalGain og = optimal_gain(state, channel);
    const GainSearchResult best = maximize_fidelity_ratio(state, channel);

    json doc = envelope(cfg);
    doc["g_min"] = og.value;
    doc["out_of_domain"] = og.out_of_domain;
    if (!og.out_of_domain) {
        const Gain g(og.value);
        doc["w_sum_at_g_min"] = w_sum(state, channel, g);
        doc["fidelity_at_g_min"] = mean_fidelity(state, channel, g);
        doc["cft_at_g_min"] = classical_threshold(g);
    }
    doc["best_gain"] = best.gain;
    doc["best_ratio"] = best.ratio;
    doc["quantum_with_tuned_gain"] = best.ratio > 1.0 + kWitnessTolerance;
    emit(cfg, render(cfg, doc), out);
    return kOk;
}

void add_state_options(CLI::App& cmd, RunConfig& cfg)
{
    cmd.add_option("--state", cfg.state_file, "State file (JSON: V, A/B/C blocks or tmss)");
    cmd.add_option("--tmss", cfg.tmss_r, "Two-mode squeezed vacuum with squeezing r");
}

void add_channel_options(CLI::App& cmd, RunConfig& cfg)
{
    cmd.add_option("--ta", cfg.t_a, "Alice channel transmissivity")->capture_default_str();
    cmd.add_option("--tb", cfg.t_b, "Bob channel transmissivity")->capture_default_str();
}

void add_output_options(CLI::App& cmd, RunConfig& cfg, const char* default_format)
{
    cmd.add_option("--out", cfg.out, "Output file (default: stdout)");
    cmd.add_option("--format", cfg.format, std::string("Output format (default: ") + default_format + ")")
        ->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Two-mode Gaussian teleportation analysis: fidelity, witnesses and region maps"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Witnesses, fidelity and region of one configuration");
    add_state_options(*analyze, cfg);
    analyze->add_option("--g", cfg.g, "Classical gain")->capture_default_str();
    add_channel_options(*analyze, cfg);
    add_output_options(*analyze, cfg, "json");
    analyze->add_option("--emit-state", cfg.emit_state, "Also write the state as JSON to this file");
    analyze->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "Grid scans written as CSV with a JSON sidecar");
    scan->require_subcommand(1);
    auto* region = scan->add_subcommand("region", "Region map over normalised correlations");
    region->add_option("--Q", cfg.q, "Diagonal variance Q")->capture_default_str();
    region->add_option("--P", cfg.p, "Diagonal variance P")->capture_default_str();
    region->add_option("--ratio", cfg.ratio, "g t_A / t_B")->capture_default_str();
    add_channel_options(*region, cfg);
    auto* surface = scan->add_subcommand("surface", "Fidelity over (t_A, t_B)");
    add_state_options(*surface, cfg);
    surface->add_option("--g", cfg.g, "Classical gain")->capture_default_str();
    auto* robustness = scan->add_subcommand("robustness", "Best-gain quantum flag over (t_A, t_B)");
    add_state_options(*robustness, cfg);
    auto* gain = scan->add_subcommand("gain", "Fidelity, threshold and w_sum along g");
    add_state_options(*gain, cfg);
    add_channel_options(*gain, cfg);
    gain->add_option("--g-max", cfg.g_max, "Largest gain of the sweep")->capture_default_str();
    for (CLI::App* cmd : {region, surface, robustness, gain}) {
        cmd->add_option("--steps", cfg.steps, "Grid points per axis");
        cmd->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
        add_output_options(*cmd, cfg, "csv");
    }

    auto* validate = app.add_subcommand("validate", "Compare the closed form with Monte-Carlo and grid oracles");
    add_state_options(*validate, cfg);
    validate->add_option("--g", cfg.g, "Classical gain")->capture_default_str();
    add_channel_options(*validate, cfg);
    validate->add_option("--samples", cfg.samples, "Monte-Carlo samples")->capture_default_str();
    validate->add_option("--seed", cfg.seed, "Monte-Carlo seed")->capture_default_str();
    validate->add_option("--alpha-re", cfg.alpha_re, "Re(alpha) of the probe state")->capture_default_str();
    validate->add_option("--alpha-im", cfg.alpha_im, "Im(alpha) of the probe state")->capture_default_str();
    validate->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
    add_output_options(*validate, cfg, "json");

    auto* optimal = app.add_subcommand("optimal-gain", "Gain minimising w_sum and the tuned-gain search");
    add_state_options(*optimal, cfg);
    add_channel_options(*optimal, cfg);
    add_output_options(*optimal, cfg, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    if (cfg.format.empty()) {
        cfg.format = scan->parsed() ? "csv" : "json";
    }
    try {
        if (analyze->parsed()) {
            cfg.command = "analyze";
            return cmd_analyze(cfg, out);
        }
        if (validate->parsed()) {
            cfg.command = "validate";
            return cmd_validate(cfg, out);
        }
        if (optimal->parsed()) {
            cfg.command = "optimal-gain";
            return cmd_optimal_gain(cfg, out);
        }
        if (region->parsed()) {
            cfg.command = "scan region";
            return cmd_scan_region(cfg, out);
        }
        if (surface->parsed()) {
            cfg.command = "scan surface";
            return cmd_scan_surface(cfg, out);
        }
        if (robustness->parsed()) {
            cfg.command = "scan robustness";
            return cmd_scan_robustness(cfg, out);
        }
        cfg.command = "scan gain";
        return cmd_scan_gain(cfg, out);
    } catch (const CliFailure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

} // namespace cvtele::cli
