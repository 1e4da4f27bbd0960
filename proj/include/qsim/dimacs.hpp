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
 * DIMACS CNF and QDIMACS readers and writers.
 *
 * Both readers accept LF or CRLF line endings, clauses spanning several
 * lines, and a trailing '%' end marker. QDIMACS variables are renumbered so
 * that quantification order matches variable order; unquantified variables
 * join an outermost existential block in ascending order unless strict mode
 * is requested.
 */
#pragma once

#include <string>
#include <string_view>

#include "qsim/instances.hpp"

namespace qsim::instances {

[[nodiscard]] CnfFormula parse_dimacs(std::string_view text);

struct QdimacsOptions {
    /// Reject variables that no quantifier line mentions.
    bool strict = false;
};

[[nodiscard]] QbfInstance parse_qdimacs(std::string_view text,
                                        QdimacsOptions options = {});

[[nodiscard]] std::string serialize_dimacs(const CnfFormula &cnf);
[[nodiscard]] std::string serialize_qdimacs(const QbfInstance &qbf);

} // namespace qsim::instances
