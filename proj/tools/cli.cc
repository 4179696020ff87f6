// Copyright 2026 The freqbin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "freqbin/circuit.h"
#include "freqbin/error.h"
#include "freqbin/experiments.h"

namespace freqbin::cli {

using nlohmann::json;

double round12(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    double r = std::stod(format12(v));
    return r == 0.0 ? 0.0 : r;
}

std::string format12(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

namespace {

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);
    return buf;
}

json state_json(const StateVector &s) {
    json terms = json::array();
    for (const auto &[k, a] : s.terms()) {
        json modes = json::array();
        for (const auto &[m, c] : k.occupations()) {
            for (int i = 0; i < c; ++i) {
                modes.push_back(m.str());
            }
        }
        terms.push_back({{"modes", modes}, {"re", round12(a.real())}, {"im", round12(a.imag())}});
    }
    return terms;
}

json outcome_json(const HeraldOutcome &o) {
    json metrics = json::object();
    for (const auto &[name, v] : o.metrics) {
        metrics[name] = round12(v);
    }
    return {{"label", o.label},
            {"accepted", o.accepted},
            {"probability", round12(o.probability)},
            {"state", state_json(o.conditional_state)},
            {"metrics", metrics}};
}

bool write_json(const json &doc, const std::optional<std::string> &path, bool pretty, std::ostream &out,
                std::ostream &err) {
    if (!path) {
        return true;
    }
    std::string text = doc.dump(pretty ? 2 : -1) + "\n";
    if (*path == "-") {
        out << text;
        return true;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << *path << "\n";
        return false;
    }
    file << text;
    return static_cast<bool>(file);
}

// The human-readable table is suppressed when the JSON report goes to
// standard output, so that stream stays machine-readable.
void emit_text(const std::ostringstream &text, const std::optional<std::string> &json_path, std::ostream &out) {
    if (!(json_path && *json_path == "-")) {
        out << text.str();
    }
}

std::string metrics_text(const HeraldOutcome &o) {
    std::string s;
    for (const auto &[name, v] : o.metrics) {
        s += (s.empty() ? "" : "  ") + name + "=" + fixed6(v);
    }
    return s;
}

void print_table(const std::string &circuit, const Pipeline &pipeline, const PipelineRun &run, std::ostream &out) {
    out << "circuit: " << circuit << "\n";
    out << "convention: " << pipeline.convention_label() << (run.non_unitary ? " (renormalized)" : "") << "\n";
    if (run.bandwidth_valid) {
        out << "bandwidth check: " << (*run.bandwidth_valid ? "valid" : "VIOLATED") << "\n";
    }
    out << "success probability " << fixed6(run.success_probability()) << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-32s %-12s %s\n", "herald", "probability", "metrics");
    out << line;
    for (const auto &o : run.resolved.outcomes) {
        std::snprintf(line, sizeof line, "%-32s %-12s %s\n", (o.accepted ? o.label : "!" + o.label).c_str(),
                      fixed6(o.probability).c_str(), metrics_text(o).c_str());
        out << line;
    }
    std::snprintf(line, sizeof line, "%-32s %-12s\n", "discarded", fixed6(run.resolved.discarded_probability).c_str());
    out << line;
    for (std::size_t i = 0; i < run.distributions.size(); ++i) {
        out << "photon-count distribution #" << (i + 1) << ":";
        for (const auto &[n, p] : run.distributions[i]) {
            out << "  " << n << ":" << fixed6(p);
        }
        out << "\n";
    }
}

std::optional<Convention> parse_convention(const std::string &s) {
    if (s == "unitary") {
        return Convention::Unitary;
    }
    if (s == "paper") {
        return Convention::PaperLiteral;
    }
    return std::nullopt;
}

}  // namespace

json run_report(const std::string &circuit, const Pipeline &pipeline, const PipelineRun &run) {
    json outcomes = json::array();
    for (const auto &o : run.resolved.outcomes) {
        outcomes.push_back(outcome_json(o));
    }
    json unresolved = json::array();
    for (const auto &o : run.unresolved.outcomes) {
        if (o.accepted) {
            unresolved.push_back(outcome_json(o));
        }
    }
    json distributions = json::array();
    std::size_t dist_index = 0;
    for (const auto &report : pipeline.reports) {
        if (report.kind != ReportKind::Outcomes || dist_index >= run.distributions.size()) {
            continue;
        }
        json counts = json::object();
        for (const auto &[n, p] : run.distributions[dist_index++]) {
            counts[std::to_string(n)] = round12(p);
        }
        distributions.push_back({{"paths", json(std::vector<std::string>(report.paths.begin(), report.paths.end()))},
                                 {"counts", counts}});
    }
    return {
        {"schema_version", kSchemaVersion},
        {"circuit", circuit},
        {"convention", pipeline.convention_label()},
        {"success_probability", round12(run.success_probability())},
        {"discarded_probability", round12(run.resolved.discarded_probability)},
        {"outcomes", outcomes},
        {"unresolved", unresolved},
        {"distributions", distributions},
        {"metrics", json::object()},
        {"validity",
         {{"bandwidth", run.bandwidth_valid ? json(*run.bandwidth_valid) : json(nullptr)},
          {"non_unitary", run.non_unitary}}},
    };
}

int cmd_run(const RunOptions &opts, std::ostream &out, std::ostream &err) {
    std::ifstream file(opts.file, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << opts.file << "\n";
        return kUsageError;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    auto parsed = circuit::parse(buffer.str());
    if (!parsed.ok()) {
        for (const auto &e : parsed.errors) {
            err << opts.file << ":" << e.line << ":" << e.column << ": error: " << e.message << " (at '" << e.token
                << "')\n";
        }
        return kUsageError;
    }
    Pipeline pipeline;
    try {
        pipeline = circuit::compile(*parsed.ast);
    } catch (const circuit::CompileError &e) {
        err << opts.file << ":" << e.line() << ": error: " << e.what() << "\n";
        return kUsageError;
    }
    pipeline.name = opts.file;
    if (opts.convention) {
        pipeline.set_convention(*opts.convention);
    }
    try {
        PipelineRun result = run(pipeline);
        std::ostringstream text;
        print_table(opts.file, pipeline, result, text);
        emit_text(text, opts.json_path, out);
        if (!write_json(run_report(opts.file, pipeline, result), opts.json_path, opts.pretty, out, err)) {
            return kRuntimeError;
        }
    } catch (const Error &e) {
        err << opts.file << ": runtime error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kOk;
}

int cmd_demo(const DemoOptions &opts, std::ostream &out, std::ostream &err) {
    const Convention convention = opts.convention.value_or(Convention::Unitary);
    std::ostringstream text;
    try {
        if (opts.name == "swap") {
            SwapResult r = run_swap(opts.alpha, convention);
            Pipeline pipeline = swap_pipeline(opts.alpha, convention);
            print_table("demo:swap", pipeline, r.run, text);
            for (const auto &h : r.heralds) {
                text << "entropy " << fixed6(h.metrics.at("entropy")) << " ebit  [" << h.label << "]\n";
            }
            json report = run_report("demo:swap", pipeline, r.run);
            report["metrics"]["alpha"] = round12(opts.alpha);
            if (r.unresolved_state) {
                text << "unresolved factorization entropy " << fixed6(r.unresolved_factorization_entropy) << "\n";
                text << "AOM-output purity " << fixed6(r.output_purity) << "\n";
                text << "photon 1/4 Bell fidelity " << fixed6(r.bell_block_fidelity) << "\n";
                report["metrics"]["unresolved_factorization_entropy"] = round12(r.unresolved_factorization_entropy);
                report["metrics"]["output_purity"] = round12(r.output_purity);
                report["metrics"]["bell_block_fidelity"] = round12(r.bell_block_fidelity);
            }
            emit_text(text, opts.json_path, out);
            return write_json(report, opts.json_path, opts.pretty, out, err) ? kOk : kRuntimeError;
        }
        if (opts.name == "ghz") {
            GhzResult r = run_ghz(opts.alpha, convention);
            Pipeline pipeline = ghz_pipeline(opts.alpha, convention);
            print_table("demo:ghz", pipeline, r.run, text);
            json report = run_report("demo:ghz", pipeline, r.run);
            report["metrics"]["alpha"] = round12(opts.alpha);
            for (const auto &[detector, p] : r.per_detector) {
                text << "per-detector probability D_" << detector << " " << fixed6(p) << "\n";
                report["metrics"]["per_detector_" + detector] = round12(p);
            }
            text << "total probability " << fixed6(r.total_probability) << "\n";
            report["metrics"]["per_detector_probability"] = round12(r.per_detector_probability());
            report["metrics"]["total_probability"] = round12(r.total_probability);
            if (r.ghz_fidelity) {
                text << "ghz fidelity " << fixed6(*r.ghz_fidelity) << "\n";
                report["metrics"]["ghz_fidelity"] = round12(*r.ghz_fidelity);
            } else {
                text << "ghz fidelity n/a (herald never fires)\n";
            }
            emit_text(text, opts.json_path, out);
            return write_json(report, opts.json_path, opts.pretty, out, err) ? kOk : kRuntimeError;
        }
    } catch (const Error &e) {
        err << "runtime error: " << e.what() << "\n";
        return kRuntimeError;
    }
    err << "error: unknown demo '" << opts.name << "' (expected swap or ghz)\n";
    return kUsageError;
}

int cmd_sweep(const SweepOptions &opts, std::ostream &out, std::ostream &err) {
    if (opts.name != "ghz") {
        err << "error: unknown sweep '" << opts.name << "' (expected ghz)\n";
        return kUsageError;
    }
    if (opts.steps < 2 || !(opts.alpha_from < opts.alpha_to)) {
        err << "error: sweep needs --steps >= 2 and --alpha-from < --alpha-to\n";
        return kUsageError;
    }
    const Convention convention = opts.convention.value_or(Convention::Unitary);
    std::vector<double> alphas(static_cast<std::size_t>(opts.steps));
    for (int i = 0; i < opts.steps; ++i) {
        alphas[i] = opts.alpha_from + (opts.alpha_to - opts.alpha_from) * i / (opts.steps - 1);
    }
    alphas.back() = opts.alpha_to;

    std::vector<std::future<GhzResult>> jobs;
    for (double a : alphas) {
        jobs.push_back(std::async(std::launch::async, [a, convention] { return run_ghz(a, convention); }));
    }
    std::ostringstream csv;
    csv << "alpha,per_detector_prob,total_prob,ghz_fidelity\n";
    try {
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            GhzResult r = jobs[i].get();
            csv << format12(alphas[i]) << "," << format12(r.per_detector_probability()) << ","
                << format12(r.total_probability) << "," << format12(r.ghz_fidelity.value_or(std::nan(""))) << "\n";
        }
    } catch (const Error &e) {
        err << "runtime error: " << e.what() << "\n";
        return kRuntimeError;
    }
    if (!opts.csv_path || *opts.csv_path == "-") {
        out << csv.str();
        return kOk;
    }
    std::ofstream file(*opts.csv_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << *opts.csv_path << "\n";
        return kRuntimeError;
    }
    file << csv.str();
    out << "wrote " << alphas.size() << " rows to " << *opts.csv_path << "\n";
    return file ? kOk : kRuntimeError;
}

int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Frequency-bin photonic circuit simulator"};
    app.require_subcommand(1);

    RunOptions run_opts;
    std::string run_convention;
    std::string run_json;
    auto *run_cmd = app.add_subcommand("run", "Parse, compile and execute a circuit file");
    run_cmd->add_option("file", run_opts.file, "Circuit file")->required();
    run_cmd->add_option("--json", run_json, "Write a JSON run report (use - for standard output)");
    run_cmd->add_option("--convention", run_convention, "Override every AOM: unitary or paper");
    run_cmd->add_flag("--pretty", run_opts.pretty, "Indent JSON output");

    DemoOptions demo_opts;
    demo_opts.alpha = std::numbers::pi / 4.0;
    std::string demo_convention;
    std::string demo_json;
    auto *demo_cmd = app.add_subcommand("demo", "Run a built-in scheme: swap or ghz");
    demo_cmd->add_option("name", demo_opts.name, "swap or ghz")->required();
    demo_cmd->add_option("--alpha", demo_opts.alpha, "Source angle in radians");
    demo_cmd->add_option("--convention", demo_convention, "unitary or paper");
    demo_cmd->add_option("--json", demo_json, "Write a JSON run report (use - for standard output)");
    demo_cmd->add_flag("--pretty", demo_opts.pretty, "Indent JSON output");

    SweepOptions sweep_opts;
    sweep_opts.alpha_from = 0.0;
    sweep_opts.alpha_to = std::numbers::pi / 2.0;
    sweep_opts.steps = 33;
    std::string sweep_convention;
    std::string sweep_csv;
    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep the source angle of a built-in scheme");
    sweep_cmd->add_option("name", sweep_opts.name, "ghz")->required();
    sweep_cmd->add_option("--alpha-from", sweep_opts.alpha_from, "First angle (radians)");
    sweep_cmd->add_option("--alpha-to", sweep_opts.alpha_to, "Last angle (radians)");
    sweep_cmd->add_option("--steps", sweep_opts.steps, "Number of grid points (>= 2)");
    sweep_cmd->add_option("--csv", sweep_csv, "CSV output path (standard output when omitted)");
    sweep_cmd->add_option("--convention", sweep_convention, "unitary or paper");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    auto convention = [&](const std::string &s, std::optional<Convention> &dst) {
        if (s.empty()) {
            return true;
        }
        dst = parse_convention(s);
        if (!dst) {
            err << "error: --convention must be unitary or paper\n";
            return false;
        }
        return true;
    };

    if (run_cmd->parsed()) {
        if (!convention(run_convention, run_opts.convention)) {
            return kUsageError;
        }
        if (!run_json.empty()) {
            run_opts.json_path = run_json;
        }
        return cmd_run(run_opts, out, err);
    }
    if (demo_cmd->parsed()) {
        if (!convention(demo_convention, demo_opts.convention)) {
            return kUsageError;
        }
        if (!demo_json.empty()) {
            demo_opts.json_path = demo_json;
        }
        return cmd_demo(demo_opts, out, err);
    }
    if (!convention(sweep_convention, sweep_opts.convention)) {
        return kUsageError;
    }
    if (!sweep_csv.empty()) {
        sweep_opts.csv_path = sweep_csv;
    }
    return cmd_sweep(sweep_opts, out, err);
}

}  // namespace freqbin::cli
