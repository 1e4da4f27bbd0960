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
/**
 * @file
 * Experiment harness behind the `qsim` command line tool: runs one
 * experiment, cross-checks it against its brute-force or closed-form
 * oracle, and renders a ResultRecord as JSON or CSV.
 *
 * The JSON layout is versioned by the "schema" field; see
 * schema/result-v1.schema.json.
 */
#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsim/dynamics.hpp"

namespace qsim::cli {

inline constexpr const char *kSchemaVersion = "qsim.result.v1";

enum class Backend { Nonlinear, Nonunitary, Brute };
enum class OutputFormat { Json, Csv };

[[nodiscard]] std::string to_string(Backend backend);
[[nodiscard]] Backend parse_backend(const std::string &name);

struct ExperimentConfig {
    std::uint64_t seed = 0;
    int mu = 16;
    double theta = 1.0;
    Backend backend = Backend::Nonlinear;
    OutputFormat format = OutputFormat::Json;

    /// Throws ArgumentError when mu or theta is invalid.
    void validate() const;
    [[nodiscard]] nlohmann::ordered_json echo() const;
};

struct ResultRecord {
    std::string experiment;
    std::string status = "ok";
    nlohmann::ordered_json config;
    nlohmann::ordered_json result;
    nlohmann::ordered_json trace;
    /// Null when the experiment has no oracle.
    nlohmann::ordered_json oracle;
    std::vector<cmqm::TrajectoryStep> trajectory;
    double duration_ms = 0.0;

    /// Oracle agreement, or nullopt if no oracle exists.
    [[nodiscard]] std::optional<bool> agreement() const;
};

[[nodiscard]] ResultRecord run_sat(const std::string &path,
                                   const ExperimentConfig &config);
[[nodiscard]] ResultRecord run_count(const std::string &path,
                                     const ExperimentConfig &config);
[[nodiscard]] ResultRecord run_taut(const std::string &path,
                                    const ExperimentConfig &config);
[[nodiscard]] ResultRecord run_tqbf(const std::string &path,
                                    const ExperimentConfig &config);
[[nodiscard]] ResultRecord run_signal(int scale_n,
                                      const ExperimentConfig &config);

enum class CmqmDemo { GhzStaircase, RandomCircuit, CoherentFidelity };

[[nodiscard]] CmqmDemo parse_demo(const std::string &name);
[[nodiscard]] std::string to_string(CmqmDemo demo);

struct CmqmParams {
    int qubits = 12;
    int depth = 4;
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    int cutoff = 32;
};

[[nodiscard]] ResultRecord run_cmqm(CmqmDemo demo, const CmqmParams &params,
                                    const ExperimentConfig &config);

/// First step at which the GHZ staircase must collapse, if any.
[[nodiscard]] std::optional<int> expected_ghz_collapse(int qubits, int mu,
                                                       double theta);

[[nodiscard]] nlohmann::ordered_json to_json(const ResultRecord &record,
                                             bool include_duration = true);

/// Header plus one row per record with the flattened result fields.
void write_result_csv(std::ostream &out,
                      const std::vector<ResultRecord> &records);

/// Columns: step, xi, norm_loss, collapsed.
void write_trajectory_csv(std::ostream &out, const ResultRecord &record);

/// 0 success, 2 input error, 3 resource bound, 4 internal consistency.
[[nodiscard]] int exit_code_for(const std::exception &error) noexcept;

/// Seed from the QSIM_SEED environment variable, if set and valid.
[[nodiscard]] std::optional<std::uint64_t> seed_from_environment();

} // namespace qsim::cli
