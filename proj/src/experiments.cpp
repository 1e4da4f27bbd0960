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
#include "qsim/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "qsim/dimacs.hpp"
#include "qsim/error.hpp"
#include "qsim/instances.hpp"
#include "qsim/quantize.hpp"
#include "qsim/solvers.hpp"
#include "qsim/variant.hpp"

namespace qsim::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kCollapseStream = 0;
constexpr std::uint64_t kCircuitStream = 1;

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ordered_json trace_json(const solvers::SolverTrace &trace) {
    ordered_json steps = ordered_json::array();
    for (const auto &s : trace.steps) {
        steps.push_back({{"gate", s.gate},
                         {"control", s.control},
                         {"flag_one_terms", s.flag_one_terms}});
    }
    return {{"steps", steps},
            {"final_flag_disentangled", trace.final_flag_disentangled},
            {"decision", trace.decision}};
}

ordered_json oracle_json(const std::string &kind, const ordered_json &value,
                         bool agreement) {
    return {{"kind", kind}, {"value", value}, {"agreement", agreement}};
}

ResultRecord start_record(const std::string &experiment,
                          const ExperimentConfig &config,
                          const std::string &instance) {
    config.validate();
    ResultRecord record;
    record.experiment = experiment;
    record.config = config.echo();
    if (!instance.empty()) {
        record.config["instance"] = instance;
    }
    return record;
}

void require_backend(const ExperimentConfig &config,
                     std::initializer_list<Backend> allowed,
                     const std::string &experiment) {
    for (Backend b : allowed) {
        if (config.backend == b) {
            return;
        }
    }
    throw ArgumentError("backend '" + to_string(config.backend) +
                        "' is not available for '" + experiment + "'");
}

} // namespace

std::string to_string(Backend backend) {
    switch (backend) {
    case Backend::Nonlinear:
        return "nonlinear";
    case Backend::Nonunitary:
        return "nonunitary";
    case Backend::Brute:
        return "brute";
    }
    return "unknown";
}

Backend parse_backend(const std::string &name) {
    if (name == "nonlinear") {
        return Backend::Nonlinear;
    }
    if (name == "nonunitary") {
        return Backend::Nonunitary;
    }
    if (name == "brute") {
        return Backend::Brute;
    }
    throw ArgumentError("unknown backend '" + name + "'");
}

void ExperimentConfig::validate() const {
    cmqm::CmqmConfig{mu, theta}.validate();
}

ordered_json ExperimentConfig::echo() const {
    ordered_json out{
        {"seed", seed}, {"backend", to_string(backend)}, {"mu", mu}};
    // JSON has no infinity; an unbounded threshold is echoed as null.
    out["theta"] = std::isfinite(theta) ? ordered_json(theta) : ordered_json();
    out["format"] = format == OutputFormat::Json ? "json" : "csv";
    return out;
}

std::optional<bool> ResultRecord::agreement() const {
    if (oracle.is_null()) {
        return std::nullopt;
    }
    return oracle.at("agreement").get<bool>();
}

ResultRecord run_sat(const std::string &path, const ExperimentConfig &config) {
    require_backend(config,
                    {Backend::Nonlinear, Backend::Nonunitary, Backend::Brute},
                    "sat");
    ResultRecord record = start_record("sat", config, path);
    const Stopwatch clock;
    const auto cnf = instances::parse_dimacs(read_file(path));
    record.result["num_vars"] = cnf.num_vars();
    record.result["num_clauses"] = cnf.clauses().size();

    bool decision = false;
    switch (config.backend) {
    case Backend::Nonlinear: {
        const auto outcome = solvers::solve_sat_nonlinear(cnf);
        decision = outcome.decision;
        record.trace = trace_json(outcome.trace);
        break;
    }
    case Backend::Nonunitary: {
        const auto outcome = solvers::solve_sat_nonunitary(cnf);
        decision = outcome.decision;
        record.result["p_flag_one"] = outcome.probability;
        record.result["error_bound"] = outcome.error_bound;
        break;
    }
    case Backend::Brute:
        decision = instances::brute_sat(cnf);
        break;
    }
    record.result["decision"] = decision ? 1 : 0;

    if (cnf.num_vars() <= instances::kBruteForceMaxVars) {
        const bool truth = instances::brute_sat(cnf);
        bool agree = truth == decision;
        if (config.backend == Backend::Nonunitary) {
            const double closed = instances::nonunitary_success_probability(
                instances::brute_count(cnf), cnf.num_vars());
            record.result["p_flag_one_closed_form"] = closed;
            agree =
                agree && std::abs(record.result["p_flag_one"].get<double>() -
                                  closed) <= 1e-12;
        }
        record.oracle = oracle_json("brute_sat", truth ? 1 : 0, agree);
    }
    record.duration_ms = clock.elapsed_ms();
    return record;
}

ResultRecord run_count(const std::string &path,
                       const ExperimentConfig &config) {
    require_backend(config, {Backend::Nonlinear, Backend::Brute}, "count");
    ResultRecord record = start_record("count", config, path);
    const Stopwatch clock;
    const auto cnf = instances::parse_dimacs(read_file(path));
    record.result["num_vars"] = cnf.num_vars();
    record.result["num_clauses"] = cnf.clauses().size();

    std::uint64_t count = 0;
    if (config.backend == Backend::Nonlinear) {
        const auto outcome = solvers::count_sat_nonlinear(cnf);
        count = outcome.count;
        record.trace = trace_json(outcome.trace);
    } else {
        count = instances::brute_count(cnf);
    }
    record.result["count"] = count;
    if (cnf.num_vars() <= instances::kBruteForceMaxVars) {
        const std::uint64_t truth = instances::brute_count(cnf);
        record.oracle = oracle_json("brute_count", truth, truth == count);
    }
    record.duration_ms = clock.elapsed_ms();
    return record;
}

ResultRecord run_taut(const std::string &path, const ExperimentConfig &config) {
    require_backend(config, {Backend::Nonunitary, Backend::Brute}, "taut");
    ResultRecord record = start_record("taut", config, path);
    const Stopwatch clock;
    const auto cnf = instances::parse_dimacs(read_file(path));
    record.result["num_vars"] = cnf.num_vars();
    record.result["num_clauses"] = cnf.clauses().size();

    bool decision = false;
    if (config.backend == Backend::Nonunitary) {
        const auto outcome = solvers::solve_taut_nonunitary(cnf);
        decision = outcome.decision;
        record.result["p_flag_zero"] = outcome.probability;
        record.result["error_bound"] = outcome.error_bound;
    } else {
        decision = instances::brute_taut(cnf);
    }
    record.result["decision"] = decision ? 1 : 0;
    if (cnf.num_vars() <= instances::kBruteForceMaxVars) {
        const bool truth = instances::brute_taut(cnf);
        record.oracle =
            oracle_json("brute_taut", truth ? 1 : 0, truth == decision);
    }
    record.duration_ms = clock.elapsed_ms();
    return record;
}

ResultRecord run_tqbf(const std::string &path, const ExperimentConfig &config) {
    require_backend(config, {Backend::Nonlinear, Backend::Brute}, "tqbf");
    ResultRecord record = start_record("tqbf", config, path);
    const Stopwatch clock;
    const auto qbf = instances::parse_qdimacs(read_file(path));
    if (qbf.num_vars() > 12 && config.backend == Backend::Nonlinear) {
        throw ResourceError("tqbf simulation limited to 12 variables");
    }
    record.result["num_vars"] = qbf.num_vars();
    record.result["num_clauses"] = qbf.matrix().clauses().size();
    std::string prefix;
    for (auto q : qbf.prefix()) {
        prefix += q == instances::Quantifier::Exists ? 'e' : 'a';
    }
    record.result["prefix"] = prefix;

    bool decision = false;
    if (config.backend == Backend::Nonlinear) {
        const auto outcome = solvers::solve_tqbf_nonlinear(qbf);
        decision = outcome.decision;
        record.trace = trace_json(outcome.trace);
    } else {
        decision = instances::brute_qbf(qbf);
    }
    record.result["decision"] = decision ? 1 : 0;
    if (qbf.num_vars() <= instances::kBruteForceMaxVars) {
        const bool truth = instances::brute_qbf(qbf);
        record.oracle =
            oracle_json("brute_qbf", truth ? 1 : 0, truth == decision);
    }
    record.duration_ms = clock.elapsed_ms();
    return record;
}

ResultRecord run_signal(int scale_n, const ExperimentConfig &config) {
    ResultRecord record = start_record("signal", config, "");
    const Stopwatch clock;
    const auto outcome = variant::signaling_experiment(scale_n);
    const double closed = variant::signaling_closed_form(scale_n);
    const double error =
        std::max(std::abs(outcome.p_bob_zero_given_G - closed),
                 std::abs(outcome.p_bob_one_given_XGX - closed));
    record.config["scale_n"] = scale_n;
    record.result = {{"scale_n", scale_n},
                     {"p_bob_zero_given_G", outcome.p_bob_zero_given_G},
                     {"p_bob_one_given_XGX", outcome.p_bob_one_given_XGX},
                     {"closed_form", closed},
                     {"abs_error", error}};
    record.oracle = oracle_json("closed_form", closed, error < 1e-12);
    record.duration_ms = clock.elapsed_ms();
    return record;
}

CmqmDemo parse_demo(const std::string &name) {
    if (name == "ghz-staircase") {
        return CmqmDemo::GhzStaircase;
    }
    if (name == "random-circuit") {
        return CmqmDemo::RandomCircuit;
    }
    if (name == "coherent-fidelity") {
        return CmqmDemo::CoherentFidelity;
    }
    throw ArgumentError("unknown cmqm demo '" + name + "'");
}

std::string to_string(CmqmDemo demo) {
    switch (demo) {
    case CmqmDemo::GhzStaircase:
        return "ghz-staircase";
    case CmqmDemo::RandomCircuit:
        return "random-circuit";
    case CmqmDemo::CoherentFidelity:
        return "coherent-fidelity";
    }
    return "unknown";
}

std::optional<int> expected_ghz_collapse(int qubits, int mu, double theta) {
    // GHZ_k carries exactly k bits of mu-resolvable entanglement (k >= 2).
    const double target = theta * static_cast<double>(mu);
    for (int k = 2; k <= qubits; ++k) {
        if (static_cast<double>(k) >= target) {
            return k;
        }
    }
    return std::nullopt;
}

ResultRecord run_cmqm(CmqmDemo demo, const CmqmParams &params,
                      const ExperimentConfig &config) {
    ResultRecord record = start_record("cmqm", config, "");
    const Stopwatch clock;
    record.config["demo"] = to_string(demo);

    if (demo == CmqmDemo::CoherentFidelity) {
        const Complex alpha{params.alpha_re, params.alpha_im};
        record.config["alpha"] = {params.alpha_re, params.alpha_im};
        record.config["cutoff"] = params.cutoff;
        record.result["fidelity"] =
            cmqm::coherent_state_fidelity(alpha, params.cutoff, config.mu);
        ordered_json sweep = ordered_json::array();
        for (int mu : {8, 16, 24, 32}) {
            sweep.push_back({{"mu", mu},
                             {"fidelity", cmqm::coherent_state_fidelity(
                                              alpha, params.cutoff, mu)}});
        }
        record.result["sweep"] = sweep;
        record.duration_ms = clock.elapsed_ms();
        return record;
    }

    if (params.qubits < 1 || params.qubits > cmqm::kMaxParticles) {
        throw ArgumentError("cmqm demos take 1 to " +
                            std::to_string(cmqm::kMaxParticles) + " qubits");
    }
    record.config["qubits"] = params.qubits;
    std::vector<cmqm::CircuitGate> circuit;
    if (demo == CmqmDemo::GhzStaircase) {
        circuit = cmqm::ghz_staircase(params.qubits);
    } else {
        record.config["depth"] = params.depth;
        Rng circuit_rng(derive_stream_seed(config.seed, kCircuitStream));
        circuit =
            cmqm::random_circuit(params.qubits, params.depth, circuit_rng);
    }
    Rng collapse_rng(derive_stream_seed(config.seed, kCollapseStream));
    const auto trajectory = cmqm::evolve(
        new_basis_state(params.qubits, 0), circuit,
        qubit_grouping(params.qubits), {config.mu, config.theta}, collapse_rng);

    double max_xi = 0.0;
    for (const auto &s : trajectory.steps) {
        max_xi = std::max(max_xi, s.xi);
    }
    record.status = trajectory.status;
    record.result["steps"] = trajectory.steps.size();
    record.result["collapse_events"] = trajectory.collapse_events;
    record.result["first_collapse"] =
        trajectory.collapse_events.empty()
            ? ordered_json()
            : ordered_json(trajectory.collapse_events.front());
    record.result["max_xi"] = max_xi;
    if (!trajectory.message.empty()) {
        record.result["message"] = trajectory.message;
    }
    record.trajectory = trajectory.steps;

    if (demo == CmqmDemo::GhzStaircase) {
        const auto expected =
            expected_ghz_collapse(params.qubits, config.mu, config.theta);
        const ordered_json value =
            expected ? ordered_json(*expected) : ordered_json();
        record.oracle = oracle_json("ghz_xi_equals_k", value,
                                    value == record.result["first_collapse"]);
    }
    record.duration_ms = clock.elapsed_ms();
    return record;
}

ordered_json to_json(const ResultRecord &record, bool include_duration) {
    ordered_json out{
        {"schema", kSchemaVersion}, {"experiment", record.experiment},
        {"status", record.status},  {"config", record.config},
        {"result", record.result},  {"trace", record.trace},
        {"oracle", record.oracle}};
    if (!record.trajectory.empty()) {
        ordered_json steps = ordered_json::array();
        for (const auto &s : record.trajectory) {
            steps.push_back({{"step", s.step},
                             {"gate", s.gate},
                             {"xi", s.xi},
                             {"norm_loss", s.norm_loss},
                             {"significant_loss", s.significant_loss},
                             {"collapsed", s.collapsed},
                             {"cluster_size", s.cluster_size}});
        }
        out["trajectory"] = steps;
    }
    if (include_duration) {
        out["duration_ms"] = record.duration_ms;
    }
    return out;
}

namespace {

std::string csv_cell(const ordered_json &value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_null()) {
        return "";
    }
    std::string text = value.dump();
    if (value.is_structured()) {
        for (char &c : text) {
            if (c == ',') {
                c = ';';
            }
        }
    }
    return text;
}

} // namespace

void write_result_csv(std::ostream &out,
                      const std::vector<ResultRecord> &records) {
    std::vector<std::string> columns{"experiment", "status", "seed",
                                     "instance"};
    for (const auto &r : records) {
        for (const auto &[key, _] : r.result.items()) {
            if (std::find(columns.begin(), columns.end(), key) ==
                columns.end()) {
                columns.push_back(key);
            }
        }
    }
    columns.push_back("agreement");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i == 0 ? "" : ",") << columns[i];
    }
    out << '\n';
    for (const auto &r : records) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto &col = columns[i];
            ordered_json cell;
            if (col == "experiment") {
                cell = r.experiment;
            } else if (col == "status") {
                cell = r.status;
            } else if (col == "seed") {
                cell = r.config.value("seed", ordered_json());
            } else if (col == "instance") {
                cell = r.config.value("instance", ordered_json());
            } else if (col == "agreement") {
                const auto agree = r.agreement();
                cell = agree ? ordered_json(*agree) : ordered_json();
            } else {
                cell = r.result.value(col, ordered_json());
            }
            out << (i == 0 ? "" : ",") << csv_cell(cell);
        }
        out << '\n';
    }
}

void write_trajectory_csv(std::ostream &out, const ResultRecord &record) {
    out << "step,xi,norm_loss,collapsed\n";
    for (const auto &s : record.trajectory) {
        out << s.step << ',' << ordered_json(s.xi).dump() << ','
            << ordered_json(s.norm_loss).dump() << ',' << (s.collapsed ? 1 : 0)
            << '\n';
    }
}

int exit_code_for(const std::exception &error) noexcept {
    if (dynamic_cast<const ResourceError *>(&error) != nullptr) {
        return 3;
    }
    if (dynamic_cast<const ConsistencyError *>(&error) != nullptr ||
        dynamic_cast<const InstabilityError *>(&error) != nullptr) {
        return 4;
    }
    return 2;
}

std::optional<std::uint64_t> seed_from_environment() {
    const char *raw = std::getenv("QSIM_SEED");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    const std::string text(raw);
    std::size_t used = 0;
    try {
        const unsigned long long value = std::stoull(text, &used, 0);
        if (used != text.size()) {
            return std::nullopt;
        }
        return value;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

} // namespace qsim::cli
