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
#include "invphase/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "invphase/ladder.hpp"
#include "invphase/report.hpp"
#include "invphase/states.hpp"

namespace invphase::cli {

namespace {

using report::Json;

const std::map<std::string, Command> kCommands{{"verify", Command::Verify},
                                               {"trig", Command::Trig},
                                               {"stats", Command::Stats},
                                               {"dist", Command::Dist}};
const std::map<std::string, Boundary> kBoundaries{
    {"cyclic", Boundary::Cyclic}, {"truncated", Boundary::Truncated}};
const std::map<std::string, PhaseKind> kFamilies{
    {"sg", PhaseKind::SgDirect},
    {"sg-annihilation", PhaseKind::SgFromAnnihilation},
    {"sg-creation", PhaseKind::SgFromCreation},
    {"unitary", PhaseKind::UnitaryDirect},
    {"unitary-inverse", PhaseKind::UnitaryFromInverses},
    {"measured", PhaseKind::Measured}};
const std::map<std::string, KConvention> kKConventions{
    {"paper", KConvention::Paper}, {"normalized", KConvention::Normalized}};
const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

template <class E>
std::string name_of(const std::map<std::string, E> &table, E value) {
    for (const auto &[name, v] : table) {
        if (v == value) {
            return name;
        }
    }
    return "unknown";
}

std::string range_text(const LabelRange &r) {
    if (r.first == r.last) {
        return std::to_string(r.first);
    }
    return std::to_string(r.first) + ".." + std::to_string(r.last);
}

int parse_int(std::string_view text, const std::string &whole) {
    int value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw UsageError("--n expects an integer or A..B, got '" + whole +
                         "'");
    }
    return value;
}

void validate(const RunConfig &c) {
    if (c.dim < 4) {
        throw UsageError("--dim must be >= 4");
    }
    if (c.half_width < 2) {
        throw UsageError("--half-width must be >= 2");
    }
    if (!(c.tol_identity > 0.0) || !(c.tol_quadrature > 0.0)) {
        throw UsageError("tolerances must be > 0");
    }
    if (c.bins < 4) {
        throw UsageError("--bins must be >= 4");
    }
    if (!(c.r >= 0.0)) {
        throw UsageError("--r must be >= 0");
    }
    if (c.n && c.n->first > c.n->last) {
        throw UsageError("--n range is empty");
    }
}

Json config_json(const RunConfig &c) {
    Json j;
    j["command"] = name_of(kCommands, c.command);
    j["dim"] = c.dim;
    j["half_width"] = c.half_width;
    j["boundary"] = name_of(kBoundaries, c.boundary);
    j["family"] = name_of(kFamilies, c.family.kind);
    j["k"] = name_of(kKConventions, c.family.k);
    j["alpha_re"] = c.alpha_re;
    j["alpha_im"] = c.alpha_im;
    j["r"] = c.r;
    j["theta"] = c.theta;
    j["n"] = c.n ? Json(range_text(*c.n)) : Json(nullptr);
    j["tol_identity"] = c.tol_identity;
    j["tol_quadrature"] = c.tol_quadrature;
    j["bins"] = c.bins;
    j["format"] = name_of(kFormats, c.format);
    return j;
}

BasisParams basis_params(const RunConfig &c) {
    return {c.dim, c.half_width, c.boundary};
}

struct PreparedState {
    Ket ket;
    Json description;
};

// --n selects a number state; otherwise the alpha / r flags pick coherent,
// squeezed vacuum (alpha = 0, r > 0) or squeezed coherent (both set).
PreparedState state_from_config(const RunConfig &c, const FockBasis &basis) {
    const Complex alpha(c.alpha_re, c.alpha_im);
    Json d;
    if (c.n) {
        if (c.n->first != c.n->last) {
            throw UsageError("--n must be a single label for a number state");
        }
        if (alpha != Complex{} || c.r != 0.0) {
            throw UsageError(
                "--n cannot be combined with --alpha-re/--alpha-im/--r");
        }
        d["kind"] = "number";
        d["n"] = c.n->first;
        return {number_state(basis, c.n->first), d};
    }
    if (basis.is_two_sided()) {
        throw UsageError("two-sided families only support number states; "
                         "pass --n");
    }
    StateKind kind;
    if (c.r > 0.0 && alpha != Complex{}) {
        kind = SqueezedCoherentState{alpha, c.r, c.theta};
        d["kind"] = "squeezed_coherent";
    } else if (c.r > 0.0) {
        kind = SqueezedVacuumState{c.r, c.theta};
        d["kind"] = "squeezed_vacuum";
    } else {
        kind = CoherentState{alpha};
        d["kind"] = "coherent";
    }
    d["alpha_re"] = c.alpha_re;
    d["alpha_im"] = c.alpha_im;
    d["r"] = c.r;
    d["theta"] = c.theta;
    try {
        return {prepare(StateSpec{kind, basis}), d};
    } catch (const TruncationError &e) {
        throw UsageError(e.what());
    }
}

Json run_verify(const RunConfig &c, Json &summary, int &exit_code) {
    if (c.n) {
        throw UsageError("--n is not used by verify");
    }
    VerifyParams params;
    params.basis = basis_params(c);
    params.unitary = c.family.kind == PhaseKind::UnitaryFromInverses
                         ? UnitaryConstruction::FromInverses
                         : UnitaryConstruction::Direct;
    params.tol = c.tol_identity;

    Json results = Json::array();
    Json gating_failures = Json::array();
    Json discrepancies = Json::array();
    for (const auto &r : verify_all(params)) {
        results.push_back(report::to_json(r));
        if (!r.passed) {
            (r.gating ? gating_failures : discrepancies).push_back(r.name);
        }
    }
    summary["records"] = results.size();
    summary["gating_failures"] = gating_failures;
    summary["documented_discrepancies"] = discrepancies;
    exit_code = gating_failures.empty() ? kExitOk : kExitIdentityFailure;
    return results;
}

Json run_trig(const RunConfig &c, Json &summary) {
    const BasisParams params = basis_params(c);
    const LabelRange range = c.n.value_or(trig_range_limit(c.family, params));
    Json results = Json::array();
    int holds = 0;
    try {
        for (const auto &row :
             trig_sum_table(c.family, params, range, c.tol_identity)) {
            holds += row.claim_holds ? 1 : 0;
            results.push_back(report::to_json(row));
        }
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }
    summary["rows"] = results.size();
    summary["claim_holds_rows"] = holds;
    return results;
}

Json run_stats(const RunConfig &c, Json &summary) {
    const FockBasis basis = basis_params(c).for_family(c.family.kind);
    const PreparedState state = state_from_config(c, basis);
    PhaseStatistics stats;
    try {
        stats = phase_statistics(c.family, state.ket);
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }
    summary["state"] = state.description;
    Json results = Json::array();
    results.push_back(report::to_json(stats));
    return results;
}

Json run_dist(const RunConfig &c, Json &summary) {
    const PreparedState state =
        state_from_config(c, basis_params(c).one_sided());
    Json results = Json::array();
    double integral = 0.0;
    const double step = 2.0 * std::numbers::pi / c.bins;
    for (const auto &s : phase_distribution(state.ket, c.bins)) {
        integral += s.density * step;
        results.push_back(report::to_json(s));
    }
    summary["state"] = state.description;
    summary["normalization"] = integral;
    summary["normalization_within_tol"] =
        std::abs(integral - 1.0) <= c.tol_quadrature;
    return results;
}

} // namespace

LabelRange parse_label_range(const std::string &text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text, text);
        return {v, v};
    }
    const std::string_view view(text);
    const LabelRange range{parse_int(view.substr(0, dots), text),
                           parse_int(view.substr(dots + 2), text)};
    if (range.first > range.last) {
        throw UsageError("empty label range '" + text + "'");
    }
    return range;
}

std::optional<RunConfig>
parse_command_line(const std::vector<std::string> &args, std::ostream &out) {
    RunConfig c;
    std::string n_text;
    std::string family_text;
    std::string k_text;

    CLI::App app{"Inverse-operator phase operators on truncated Fock bases",
                 "invphase"};
    app.set_version_flag("--version", kVersion);
    app.add_option("command", c.command, "verify | trig | stats | dist")
        ->required()
        ->transform(CLI::CheckedTransformer(kCommands));
    app.add_option("--dim", c.dim, "One-sided dimension D")
        ->capture_default_str();
    app.add_option("--half-width", c.half_width, "Two-sided half width M")
        ->capture_default_str();
    app.add_option("--boundary", c.boundary, "cyclic | truncated")
        ->transform(CLI::CheckedTransformer(kBoundaries));
    app.add_option("--family", family_text,
                   "sg | sg-annihilation | sg-creation | unitary | "
                   "unitary-inverse | measured")
        ->check(CLI::IsMember(kFamilies));
    app.add_option("--k", k_text, "paper | normalized")
        ->check(CLI::IsMember(kKConventions));
    app.add_option("--alpha-re", c.alpha_re, "Coherent amplitude, real part");
    app.add_option("--alpha-im", c.alpha_im, "Coherent amplitude, imag part");
    app.add_option("--r", c.r, "Squeeze parameter r >= 0");
    app.add_option("--theta", c.theta, "Squeeze phase (radians)");
    app.add_option("--n", n_text,
                   "Label or range A..B (use --n=-3..3 for negative labels)");
    app.add_option("--tol-identity", c.tol_identity)->capture_default_str();
    app.add_option("--tol-quadrature", c.tol_quadrature)
        ->capture_default_str();
    app.add_option("--bins", c.bins)->capture_default_str();
    app.add_option("--format", c.format, "json | csv")
        ->transform(CLI::CheckedTransformer(kFormats));
    app.add_option("--out", c.out, "Output file (default stdout)");

    std::vector<const char *> argv{"invphase"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream discard;
            app.exit(e, out, discard);
            return std::nullopt;
        }
        throw UsageError(std::string(e.what()) + "\nRun with --help for usage.");
    }
    if (!family_text.empty()) {
        c.family.kind = kFamilies.at(family_text);
    }
    if (!k_text.empty()) {
        c.family.k = kKConventions.at(k_text);
    }
    if (!n_text.empty()) {
        c.n = parse_label_range(n_text);
    }
    validate(c);
    return c;
}

RunResult execute(const RunConfig &config) {
    validate(config);
    Json summary = Json::object();
    RunResult result;
    Json results;
    switch (config.command) {
    case Command::Verify:
        results = run_verify(config, summary, result.exit_code);
        break;
    case Command::Trig:
        results = run_trig(config, summary);
        break;
    case Command::Stats:
        results = run_stats(config, summary);
        break;
    case Command::Dist:
        results = run_dist(config, summary);
        break;
    }

    if (config.format == OutputFormat::Csv) {
        result.payload = report::to_csv(results);
        return result;
    }
    Json doc;
    doc["meta"]["version"] = kVersion;
    doc["meta"]["config"] = config_json(config);
    doc["summary"] = summary;
    doc["results"] = results;
    result.payload = doc.dump(2) + "\n";
    return result;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    RunResult result;
    try {
        result = execute(config);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ContractError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (config.out.empty()) {
        out << result.payload;
    } else {
        std::ofstream file(config.out, std::ios::binary);
        if (!file) {
            err << "usage error: cannot open " << config.out << '\n';
            return kExitUsage;
        }
        file << result.payload;
    }
    return result.exit_code;
}

int main_entry(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
    std::optional<RunConfig> config;
    try {
        config = parse_command_line(args, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (!config) {
        return kExitOk;
    }
    return run(*config, out, err);
}

} // namespace invphase::cli
