// Copyright 2026 The invphase Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file cli.hpp
 * Command dispatch for the `invphase` tool.
 *
 *   invphase verify|trig|stats|dist [--dim D] [--half-width M]
 *            [--boundary cyclic|truncated] [--family F] [--k paper|normalized]
 *            [--alpha-re X] [--alpha-im Y] [--r R] [--theta T] [--n A[..B]]
 *            [--tol-identity E] [--tol-quadrature E] [--bins B]
 *            [--format json|csv] [--out PATH]
 *
 * Exit codes: 0 success, 1 an unconditional identity failed (verify only),
 * 2 usage error.
 */

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invphase/analysis.hpp"
#include "invphase/phase.hpp"

namespace invphase::cli {

inline constexpr const char *kVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Verify, Trig, Stats, Dist };
enum class OutputFormat { Json, Csv };

struct RunConfig {
    Command command = Command::Verify;
    int dim = 32;
    int half_width = 16;
    Boundary boundary = Boundary::Cyclic;
    PhaseFamily family{};
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    double r = 0.0;
    double theta = 0.0;
    std::optional<LabelRange> n;
    double tol_identity = kDefaultIdentityTol;
    double tol_quadrature = kDefaultQuadratureTol;
    int bins = 256;
    OutputFormat format = OutputFormat::Json;
    std::string out; ///< empty: standard output
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses "A" or "A..B".
[[nodiscard]] LabelRange parse_label_range(const std::string &text);

/// Throws UsageError on bad flags. Returns nullopt when help/version was
/// printed to `out`.
[[nodiscard]] std::optional<RunConfig>
parse_command_line(const std::vector<std::string> &args, std::ostream &out);

struct RunResult {
    int exit_code = kExitOk;
    std::string payload;
};

/// Computes the serialized report. Throws UsageError for invalid
/// configurations.
[[nodiscard]] RunResult execute(const RunConfig &config);

/// execute() plus writing to config.out or `out`; errors go to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Full front end: parse, run, map errors to exit codes. args excludes argv[0].
int main_entry(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err);

} // namespace invphase::cli
