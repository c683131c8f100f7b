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

#include <string>

#include <json.hpp>

#include "invphase/analysis.hpp"

namespace invphase::report {

/// Insertion-ordered so serialized field order is fixed.
using Json = nlohmann::ordered_json;

Json to_json(const IdentityReport &r);
Json to_json(const TrigStats &row);
Json to_json(const PhaseStatistics &stats);
Json to_json(const PhaseSample &sample);

/// Flattens an array of flat objects into CSV with a header row taken from
/// the first object's keys. Arrays become ';'-joined fields, null becomes an
/// empty field. Fields are quoted when they contain ',', '"', CR or LF.
/// Lines end with CRLF.
std::string to_csv(const Json &rows);

/// RFC 4180 field escaping.
std::string csv_field(const std::string &value);

} // namespace invphase::report
