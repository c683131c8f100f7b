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
#include "invphase/report.hpp"

#include <stdexcept>

namespace invphase::report {

namespace {

std::string scalar_text(const Json &v) {
    if (v.is_null()) {
        return {};
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

std::string cell(const Json &v) {
    if (!v.is_array()) {
        return scalar_text(v);
    }
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            joined += ';';
        }
        joined += scalar_text(v[i]);
    }
    return joined;
}

template <class T> Json optional_json(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const IdentityReport &r) {
    Json j;
    j["name"] = r.name;
    j["statement"] = r.statement;
    j["residual_full"] = r.residual_full;
    j["residual_interior"] = r.residual_interior;
    j["excluded_rows"] = r.excluded_rows;
    j["discrepant_columns"] = r.discrepant_columns;
    j["gating"] = r.gating;
    j["passed"] = r.passed;
    return j;
}

Json to_json(const TrigStats &row) {
    Json j;
    j["n"] = row.n;
    j["cos_sq"] = row.cos_sq;
    j["sin_sq"] = row.sin_sq;
    j["sum"] = row.sum;
    j["claim_holds"] = row.claim_holds;
    j["k"] = optional_json(row.k);
    return j;
}

Json to_json(const PhaseStatistics &stats) {
    Json j;
    j["mean_cos"] = stats.mean_cos;
    j["mean_sin"] = stats.mean_sin;
    j["var_cos"] = stats.var_cos;
    j["var_sin"] = stats.var_sin;
    j["trig_sum"] = stats.trig_sum;
    j["n_context"] = optional_json(stats.n_context);
    return j;
}

Json to_json(const PhaseSample &sample) {
    Json j;
    j["phi"] = sample.phi;
    j["density"] = sample.density;
    return j;
}

std::string csv_field(const std::string &value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string to_csv(const Json &rows) {
    if (!rows.is_array()) {
        throw std::invalid_argument("to_csv expects an array of objects");
    }
    if (rows.empty()) {
        return {};
    }
    std::vector<std::string> keys;
    for (const auto &item : rows.front().items()) {
        keys.push_back(item.key());
    }
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        out += (i ? "," : "") + csv_field(keys[i]);
    }
    out += "\r\n";
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const auto it = row.find(keys[i]);
            const std::string text = it == row.end() ? "" : cell(*it);
            out += (i ? "," : "") + csv_field(text);
        }
        out += "\r\n";
    }
    return out;
}

} // namespace invphase::report
