// Copyright 2026 The qrelief authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qrelief/errors.hpp"
#include "qrelief/io.hpp"
#include "qrelief/quantum_relief.hpp"
#include "qrelief/relief.hpp"

namespace {

using qrelief::Dataset;
using qrelief::PickPolicy;
using qrelief::ReplayTable;
using qrelief::RunConfig;
using qrelief::RunMode;
using qrelief::RunReport;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitRuntime = 3;

struct CommonOptions {
    std::string dataset_path;
    double tau = 0.5;
    int iterations = 0;  // 0: one pass over the dataset
    std::string policy = "round-robin";
    std::optional<std::uint64_t> seed;
    std::string report_path;
};

struct QuantumOptions {
    std::string mode = "exact";
    std::string replay_path;
    std::uint64_t shots = 8192;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--dataset", opts.dataset_path, "dataset CSV file")
        ->required();
    cmd->add_option("--tau", opts.tau, "relevance threshold (default 0.5)");
    cmd->add_option("--iterations", opts.iterations,
                    "iteration count T (default: dataset size)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--policy", opts.policy, "sample pick policy")
        ->check(CLI::IsMember({"round-robin", "random"}));
    cmd->add_option("--seed", opts.seed, "random seed (default: from entropy)");
    cmd->add_option("--report", opts.report_path,
                    "write the full JSON report here ('-' for stdout)");
}

void add_quantum_options(CLI::App* cmd, QuantumOptions& opts) {
    cmd->add_option("--mode", opts.mode, "similarity estimation mode")
        ->check(CLI::IsMember({"exact", "sampled", "replay"}));
    cmd->add_option("--replay", opts.replay_path,
                    "replay table JSON (required with --mode replay)");
    cmd->add_option("--shots", opts.shots, "shots per swap test in sampled mode")
        ->check(CLI::PositiveNumber);
}

RunMode parse_mode(const std::string& mode) {
    if (mode == "exact") {
        return RunMode::Exact;
    }
    if (mode == "sampled") {
        return RunMode::Sampled;
    }
    return RunMode::Replay;
}

std::uint64_t draw_entropy_seed() {
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, bool needed) {
    if (seed.has_value()) {
        return *seed;
    }
    return needed ? draw_entropy_seed() : 0;
}

int resolve_iterations(int requested, const Dataset& dataset) {
    if (requested < 0) {
        throw qrelief::ConfigError("iterations must be positive");
    }
    return requested == 0 ? static_cast<int>(dataset.size()) : requested;
}

void print_summary(const RunReport& report) {
    std::cout << "mode: " << report.mode << "   policy: " << report.policy
              << "   iterations: " << report.iterations
              << "   tau: " << report.tau << "   seed: " << report.seed << '\n';
    std::cout << "selected features:";
    if (report.selected.empty()) {
        std::cout << " (none)";
    }
    for (const std::string& name : report.selected_names()) {
        std::cout << ' ' << name;
    }
    std::cout << '\n' << "wt_mean:";
    for (double w : report.wt_mean) {
        std::cout << ' ' << w;
    }
    std::cout << '\n'
              << "resources: qubits=" << report.resources.qubits_used
              << " gates=" << report.resources.gates_applied
              << " shots=" << report.resources.total_shots << '\n';
}

void emit_report(const RunReport& report, const std::string& path) {
    if (path.empty()) {
        return;
    }
    if (path == "-") {
        std::cout << qrelief::io::report_to_json(report);
    } else {
        qrelief::io::save_report(report, path);
        std::cout << "report written to " << path << '\n';
    }
}

RunReport execute_quantum(const CommonOptions& common, const QuantumOptions& quantum) {
    const Dataset dataset = qrelief::io::load_dataset(common.dataset_path);

    RunConfig config;
    config.mode = parse_mode(quantum.mode);
    config.tau = common.tau;
    config.iterations = resolve_iterations(common.iterations, dataset);
    config.shots = quantum.shots;
    config.policy = common.policy == "random" ? PickPolicy::Random
                                              : PickPolicy::RoundRobin;
    config.seed = resolve_seed(common.seed,
                               config.mode == RunMode::Sampled ||
                                   config.policy == PickPolicy::Random);

    std::optional<ReplayTable> replay;
    if (config.mode == RunMode::Replay) {
        replay = qrelief::io::load_replay(quantum.replay_path);
    }

    RunReport report = qrelief::run_quantum_relief(
        dataset, config, replay.has_value() ? &*replay : nullptr);
    report.dataset_path = common.dataset_path;
    report.replay_path = quantum.replay_path;
    return report;
}

RunReport execute_classical(const CommonOptions& common) {
    const Dataset dataset = qrelief::io::load_dataset(common.dataset_path);
    const PickPolicy policy = common.policy == "random" ? PickPolicy::Random
                                                        : PickPolicy::RoundRobin;
    const std::uint64_t seed =
        resolve_seed(common.seed, policy == PickPolicy::Random);
    RunReport report = qrelief::run_classical_relief(
        dataset, resolve_iterations(common.iterations, dataset), common.tau,
        policy, seed);
    report.dataset_path = common.dataset_path;
    return report;
}

int run_compare(const CommonOptions& common, const QuantumOptions& quantum) {
    // One seed for both pipelines keeps a random pick policy aligned.
    CommonOptions shared = common;
    if (!shared.seed.has_value() &&
        (shared.policy == "random" || quantum.mode == "sampled")) {
        shared.seed = draw_entropy_seed();
    }
    const RunReport quantum_report = execute_quantum(shared, quantum);
    const RunReport classical_report = execute_classical(shared);

    const bool selected_equal =
        quantum_report.selected == classical_report.selected;
    std::cout << "quantum selected:  ";
    for (const std::string& name : quantum_report.selected_names()) {
        std::cout << ' ' << name;
    }
    std::cout << '\n' << "classical selected:";
    for (const std::string& name : classical_report.selected_names()) {
        std::cout << ' ' << name;
    }
    std::cout << '\n'
              << "selected sets equal: " << (selected_equal ? "yes" : "no") << '\n';
    std::cout << "wt_mean delta (quantum - classical):";
    nlohmann::ordered_json deltas = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < quantum_report.wt_mean.size(); ++i) {
        const double delta =
            quantum_report.wt_mean[i] - classical_report.wt_mean[i];
        std::cout << ' ' << delta;
        deltas.push_back(delta);
    }
    std::cout << '\n';

    if (!common.report_path.empty()) {
        nlohmann::ordered_json doc;
        doc["quantum"] =
            nlohmann::ordered_json::parse(qrelief::io::report_to_json(quantum_report));
        doc["classical"] = nlohmann::ordered_json::parse(
            qrelief::io::report_to_json(classical_report));
        doc["agreement"] = {{"selected_equal", selected_equal},
                            {"wt_mean_delta", deltas}};
        if (common.report_path == "-") {
            std::cout << doc.dump(2) << '\n';
        } else {
            std::ofstream out(common.report_path);
            if (!out) {
                throw qrelief::ParseError("cannot write '" + common.report_path + "'");
            }
            out << doc.dump(2) << '\n';
            std::cout << "report written to " << common.report_path << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relief feature selection on simulated quantum circuits"};
    app.require_subcommand(1);

    CommonOptions run_common;
    QuantumOptions run_quantum;
    CLI::App* run_cmd = app.add_subcommand(
        "run", "quantum pipeline (exact, sampled, or replay mode)");
    add_common_options(run_cmd, run_common);
    add_quantum_options(run_cmd, run_quantum);

    CommonOptions classical_common;
    CLI::App* classical_cmd =
        app.add_subcommand("classical", "classical Relief baseline");
    add_common_options(classical_cmd, classical_common);

    CommonOptions compare_common;
    QuantumOptions compare_quantum;
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "run both pipelines and summarize their agreement");
    add_common_options(compare_cmd, compare_common);
    add_quantum_options(compare_cmd, compare_quantum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            if (run_quantum.mode == "replay" && run_quantum.replay_path.empty()) {
                std::cerr << "run: --mode replay requires --replay\n";
                return kExitUsage;
            }
            const RunReport report = execute_quantum(run_common, run_quantum);
            print_summary(report);
            emit_report(report, run_common.report_path);
        } else if (classical_cmd->parsed()) {
            const RunReport report = execute_classical(classical_common);
            print_summary(report);
            emit_report(report, classical_common.report_path);
        } else if (compare_cmd->parsed()) {
            if (compare_quantum.mode == "replay" &&
                compare_quantum.replay_path.empty()) {
                std::cerr << "compare: --mode replay requires --replay\n";
                return kExitUsage;
            }
            return run_compare(compare_common, compare_quantum);
        }
    } catch (const qrelief::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const qrelief::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const qrelief::DegenerateDatasetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const qrelief::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
