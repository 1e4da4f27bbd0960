// Copyright 2026 The qsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Command line front-end for the qsim experiments.
//
//   qsim sat   --cnf FILE [--backend nonlinear|nonunitary|brute]
//   qsim count --cnf FILE [--backend nonlinear|brute]
//   qsim taut  --cnf FILE [--backend nonunitary|brute]
//   qsim tqbf  --qdimacs FILE [--backend nonlinear|brute]
//   qsim signal --n N
//   qsim cmqm  --demo ghz-staircase|random-circuit|coherent-fidelity
//
// Common flags: --seed, --mu, --theta, --format json|csv, --out PATH.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "qsim/error.hpp"
#include "qsim/experiments.hpp"

namespace {

using qsim::cli::ExperimentConfig;
using qsim::cli::ResultRecord;

struct Options {
    std::vector<std::string> cnf_paths;
    std::vector<std::string> qdimacs_paths;
    std::string backend;
    std::optional<std::uint64_t> seed;
    int mu = 16;
    std::string theta = "1.0";
    std::string format = "json";
    std::string out_path;
    std::string trajectory_path;
    int scale_n = 1;
    std::string demo = "ghz-staircase";
    qsim::cli::CmqmParams cmqm;
};

/// Writes to `path` through a temporary file so readers never see a partial
/// result; stdout when `path` is empty.
void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw qsim::ArgumentError("cannot write '" + path + "'");
        }
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

double parse_theta(const std::string &text) {
    if (text == "inf" || text == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) {
        throw qsim::ArgumentError("invalid --theta '" + text + "'");
    }
    return value;
}

std::string render(const std::vector<ResultRecord> &records,
                   const ExperimentConfig &config) {
    std::ostringstream out;
    if (config.format == qsim::cli::OutputFormat::Csv) {
        if (records.size() == 1 && !records.front().trajectory.empty()) {
            qsim::cli::write_trajectory_csv(out, records.front());
        } else {
            qsim::cli::write_result_csv(out, records);
        }
        return out.str();
    }
    if (records.size() == 1) {
        out << qsim::cli::to_json(records.front()).dump(2) << '\n';
    } else {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const auto &r : records) {
            all.push_back(qsim::cli::to_json(r));
        }
        out << all.dump(2) << '\n';
    }
    return out.str();
}

using FileRunner = ResultRecord (*)(const std::string &,
                                    const ExperimentConfig &);

/// Independent instances run concurrently; output keeps the input order.
std::vector<ResultRecord> run_batch(FileRunner runner,
                                    const std::vector<std::string> &paths,
                                    const ExperimentConfig &config) {
    std::vector<std::future<ResultRecord>> pending;
    pending.reserve(paths.size());
    for (const auto &path : paths) {
        pending.push_back(std::async(std::launch::async, runner, path, config));
    }
    std::vector<ResultRecord> records;
    records.reserve(paths.size());
    for (auto &f : pending) {
        records.push_back(f.get());
    }
    return records;
}

int finish(const std::vector<ResultRecord> &records,
           const ExperimentConfig &config, const Options &opts) {
    emit(opts.out_path, render(records, config));
    if (!opts.trajectory_path.empty() && records.size() == 1) {
        std::ostringstream csv;
        qsim::cli::write_trajectory_csv(csv, records.front());
        emit(opts.trajectory_path, csv.str());
    }
    for (const auto &r : records) {
        if (r.agreement() == false) {
            std::cerr << "qsim: " << r.experiment
                      << " disagrees with its oracle\n";
            return 4;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variant quantum mechanics simulator"};
    app.require_subcommand(1);
    Options opts;

    auto add_common = [&opts](CLI::App *cmd) {
        cmd->add_option("--seed", opts.seed,
                        "64-bit seed (falls back to QSIM_SEED, then 0)");
        cmd->add_option("--mu", opts.mu, "bits per amplitude (even)");
        cmd->add_option("--theta", opts.theta,
                        "collapse threshold factor, or 'inf'");
        cmd->add_option("--format", opts.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opts.out_path, "write output to PATH");
    };

    auto *sat = app.add_subcommand("sat", "decide CNF satisfiability");
    auto *count = app.add_subcommand("count", "count CNF solutions");
    auto *taut = app.add_subcommand("taut", "decide CNF tautology");
    for (auto *cmd : {sat, count, taut}) {
        cmd->add_option("--cnf", opts.cnf_paths, "DIMACS CNF file(s)")
            ->required();
        cmd->add_option("--backend", opts.backend,
                        "nonlinear, nonunitary or brute");
        add_common(cmd);
    }
    auto *tqbf = app.add_subcommand("tqbf", "decide a QDIMACS QBF");
    tqbf->add_option("--qdimacs", opts.qdimacs_paths, "QDIMACS file(s)")
        ->required();
    tqbf->add_option("--backend", opts.backend, "nonlinear or brute");
    add_common(tqbf);

    auto *signal = app.add_subcommand("signal", "G / XGX signaling protocol");
    signal->add_option("--n", opts.scale_n, "gate scale n >= 1");
    add_common(signal);

    auto *cmqm = app.add_subcommand("cmqm", "collapse-model demos");
    cmqm->add_option("--demo", opts.demo)
        ->check(CLI::IsMember(
            {"ghz-staircase", "random-circuit", "coherent-fidelity"}));
    cmqm->add_option("--qubits", opts.cmqm.qubits, "register size (<= 12)");
    cmqm->add_option("--depth", opts.cmqm.depth, "random circuit layers");
    cmqm->add_option("--alpha", opts.cmqm.alpha_re, "coherent amplitude");
    cmqm->add_option("--alpha-imag", opts.cmqm.alpha_im,
                     "imaginary part of the coherent amplitude");
    cmqm->add_option("--cutoff", opts.cmqm.cutoff, "Fock cutoff");
    cmqm->add_option("--trajectory", opts.trajectory_path,
                     "also write the trajectory CSV to PATH");
    add_common(cmqm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ExperimentConfig config;
        config.seed =
            opts.seed.value_or(qsim::cli::seed_from_environment().value_or(0));
        config.mu = opts.mu;
        config.theta = parse_theta(opts.theta);
        config.format = opts.format == "csv" ? qsim::cli::OutputFormat::Csv
                                             : qsim::cli::OutputFormat::Json;

        auto backend_or = [&opts](qsim::cli::Backend fallback) {
            return opts.backend.empty()
                       ? fallback
                       : qsim::cli::parse_backend(opts.backend);
        };

        if (sat->parsed()) {
            config.backend = backend_or(qsim::cli::Backend::Nonlinear);
            return finish(
                run_batch(&qsim::cli::run_sat, opts.cnf_paths, config), config,
                opts);
        }
        if (count->parsed()) {
            config.backend = backend_or(qsim::cli::Backend::Nonlinear);
            return finish(
                run_batch(&qsim::cli::run_count, opts.cnf_paths, config),
                config, opts);
        }
        if (taut->parsed()) {
            config.backend = backend_or(qsim::cli::Backend::Nonunitary);
            return finish(
                run_batch(&qsim::cli::run_taut, opts.cnf_paths, config), config,
                opts);
        }
        if (tqbf->parsed()) {
            config.backend = backend_or(qsim::cli::Backend::Nonlinear);
            return finish(
                run_batch(&qsim::cli::run_tqbf, opts.qdimacs_paths, config),
                config, opts);
        }
        if (signal->parsed()) {
            return finish({qsim::cli::run_signal(opts.scale_n, config)}, config,
                          opts);
        }
        return finish({qsim::cli::run_cmqm(qsim::cli::parse_demo(opts.demo),
                                           opts.cmqm, config)},
                      config, opts);
    } catch (const std::exception &e) {
        std::cerr << "qsim: " << e.what() << '\n';
        return qsim::cli::exit_code_for(e);
    }
}
