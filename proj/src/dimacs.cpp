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
#include "qsim/dimacs.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "qsim/error.hpp"

namespace qsim::instances {

namespace {

struct QuantifierBlock {
    Quantifier kind;
    std::vector<int> vars;
    std::size_t line;
};

struct RawInstance {
    int num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<QuantifierBlock> blocks;
};

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() &&
               (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
               line[pos] != '\r') {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

long long to_integer(std::string_view token, std::size_t line) {
    long long value = 0;
    const auto *first = token.data();
    const auto *last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError(line, "expected an integer, found '" +
                                   std::string(token) + "'");
    }
    return value;
}

/// Shared reader; quantifier lines are rejected unless `qdimacs`.
RawInstance read_instance(std::string_view text, bool qdimacs) {
    RawInstance raw;
    bool header_seen = false;
    bool clauses_started = false;
    long long declared_clauses = 0;
    Clause pending;
    std::size_t line_no = 0;
    std::size_t last_line = 1;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto tokens = split_tokens(line);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        last_line = line_no;
        const std::string_view head = tokens.front();
        if (head.front() == 'c') {
            continue;
        }
        if (head == "%") {
            break;
        }
        if (head == "p") {
            if (header_seen) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (tokens.size() != 4 || tokens[1] != "cnf") {
                throw ParseError(line_no,
                                 "problem line must read 'p cnf <vars> "
                                 "<clauses>'");
            }
            const long long vars = to_integer(tokens[2], line_no);
            declared_clauses = to_integer(tokens[3], line_no);
            if (vars < 1 || vars > 63) {
                throw ParseError(line_no, "variable count must lie in "
                                          "[1, 63]");
            }
            if (declared_clauses < 0) {
                throw ParseError(line_no, "negative clause count");
            }
            raw.num_vars = static_cast<int>(vars);
            header_seen = true;
            continue;
        }
        if (!header_seen) {
            throw ParseError(line_no, "data before the 'p cnf' problem line");
        }
        if (head == "e" || head == "a") {
            if (!qdimacs) {
                throw ParseError(line_no,
                                 "quantifier line in a plain DIMACS file");
            }
            if (clauses_started) {
                throw ParseError(line_no,
                                 "quantifier line after the first clause");
            }
            QuantifierBlock block{head == "e" ? Quantifier::Exists
                                              : Quantifier::ForAll,
                                  {},
                                  line_no};
            bool terminated = false;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                if (terminated) {
                    throw ParseError(line_no, "tokens after terminating 0");
                }
                const long long v = to_integer(tokens[t], line_no);
                if (v == 0) {
                    terminated = true;
                    continue;
                }
                if (v < 1 || v > raw.num_vars) {
                    throw ParseError(line_no, "quantified variable " +
                                                  std::to_string(v) +
                                                  " out of range");
                }
                block.vars.push_back(static_cast<int>(v));
            }
            if (!terminated) {
                throw ParseError(line_no, "quantifier line missing its 0");
            }
            raw.blocks.push_back(std::move(block));
            continue;
        }
        clauses_started = true;
        for (const auto token : tokens) {
            const long long lit = to_integer(token, line_no);
            if (lit == 0) {
                raw.clauses.push_back(std::move(pending));
                pending.clear();
                continue;
            }
            if (lit < -raw.num_vars || lit > raw.num_vars) {
                throw ParseError(line_no, "literal " + std::to_string(lit) +
                                              " exceeds variable count " +
                                              std::to_string(raw.num_vars));
            }
            pending.push_back(static_cast<int>(lit));
        }
    }

    if (!header_seen) {
        throw ParseError(last_line, "missing 'p cnf' problem line");
    }
    if (!pending.empty()) {
        throw ParseError(last_line, "final clause is not terminated by 0");
    }
    if (static_cast<long long>(raw.clauses.size()) != declared_clauses) {
        throw ParseError(last_line, "header declares " +
                                        std::to_string(declared_clauses) +
                                        " clauses, found " +
                                        std::to_string(raw.clauses.size()));
    }
    return raw;
}

void write_clauses(std::ostringstream &out, const CnfFormula &cnf) {
    for (const auto &clause : cnf.clauses()) {
        for (int lit : clause) {
            out << lit << ' ';
        }
        out << "0\n";
    }
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
    RawInstance raw = read_instance(text, false);
    return CnfFormula(raw.num_vars, std::move(raw.clauses));
}

QbfInstance parse_qdimacs(std::string_view text, QdimacsOptions options) {
    RawInstance raw = read_instance(text, true);
    const auto n = static_cast<std::size_t>(raw.num_vars);

    std::vector<int> position(n + 1, 0); // variable -> new index, 1-based
    std::vector<Quantifier> kind_of(n + 1, Quantifier::Exists);
    std::vector<std::size_t> line_of(n + 1, 0);
    for (const auto &block : raw.blocks) {
        for (int v : block.vars) {
            const auto vi = static_cast<std::size_t>(v);
            if (line_of[vi] != 0) {
                throw ParseError(block.line,
                                 "variable " + std::to_string(v) +
                                     " quantified twice (first on line " +
                                     std::to_string(line_of[vi]) + ")");
            }
            line_of[vi] = block.line;
            kind_of[vi] = block.kind;
        }
    }

    std::vector<Quantifier> prefix;
    prefix.reserve(n);
    int next = 1;
    for (std::size_t v = 1; v <= n; ++v) {
        if (line_of[v] == 0) {
            if (options.strict) {
                throw ParseError(1, "variable " + std::to_string(v) +
                                        " is not quantified");
            }
            position[v] = next++;
            prefix.push_back(Quantifier::Exists);
        }
    }
    for (const auto &block : raw.blocks) {
        for (int v : block.vars) {
            position[static_cast<std::size_t>(v)] = next++;
            prefix.push_back(block.kind);
        }
    }

    for (auto &clause : raw.clauses) {
        for (int &lit : clause) {
            const int mapped =
                position[static_cast<std::size_t>(std::abs(lit))];
            lit = lit > 0 ? mapped : -mapped;
        }
    }
    return QbfInstance(std::move(prefix),
                       CnfFormula(raw.num_vars, std::move(raw.clauses)));
}

std::string serialize_dimacs(const CnfFormula &cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.num_vars() << ' ' << cnf.clauses().size() << '\n';
    write_clauses(out, cnf);
    return out.str();
}

std::string serialize_qdimacs(const QbfInstance &qbf) {
    std::ostringstream out;
    const auto &prefix = qbf.prefix();
    out << "p cnf " << qbf.num_vars() << ' ' << qbf.matrix().clauses().size()
        << '\n';
    std::size_t i = 0;
    while (i < prefix.size()) {
        const Quantifier kind = prefix[i];
        out << (kind == Quantifier::Exists ? 'e' : 'a');
        while (i < prefix.size() && prefix[i] == kind) {
            out << ' ' << (i + 1);
            ++i;
        }
        out << " 0\n";
    }
    write_clauses(out, qbf.matrix());
    return out.str();
}

} // namespace qsim::instances
