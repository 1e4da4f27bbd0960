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
 * Exception types shared by every qsim module.
 *
 * All errors derive from qsim::Error so callers can catch the family as a
 * whole; the CLI maps the concrete types onto process exit codes.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsim {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Index or value outside its admissible range.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// Malformed call: duplicate qubits, empty subsets, bad sizes.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Input fails a checkable mathematical contract (unitarity, normalization).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Every amplitude is zero, so no distribution exists.
class DegenerateStateError : public Error {
  public:
    using Error::Error;
};

/// A register value does not fit in its allotted qubits.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// State is not resolvable enough for the requested operation.
class InstabilityError : public Error {
  public:
    using Error::Error;
};

/// An algorithm invariant failed; indicates a bug, not bad input.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

/// Work exceeds a configured size bound.
class ResourceError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qsim
