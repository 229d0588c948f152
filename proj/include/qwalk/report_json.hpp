// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON form of MixingReport:
//
//   {"graph": {"family": "cycle", "parameters": [5]},
//    "verdict": "no-mixing-found-evidence", "witness_times": [],
//    "min_distance": ..., "argmin_time": ..., "deficit": ...,
//    "scan_window": [0, T], "grid_step": ..., "tolerance": ...,
//    "route": "numeric", "notes": [...]}
//
// Doubles are written in shortest round-trip form, so parsing restores the
// exact binary64 values.

#pragma once

#include <string>

#include <json.hpp>

#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/mixing.hpp"

namespace qwalk {

inline nlohmann::ordered_json to_json(const MixingReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = {{"family", family_name(r.graph.kind)}, {"parameters", r.graph.parameters}};
  j["verdict"] = verdict_name(r.verdict);
  j["witness_times"] = r.witness_times;
  j["min_distance"] = r.min_distance;
  j["argmin_time"] = r.argmin_time;
  j["deficit"] = r.deficit;
  j["scan_window"] = {r.window_start, r.window_end};
  j["grid_step"] = r.grid_step;
  j["tolerance"] = r.tolerance;
  j["route"] = certification_route_name(r.route);
  j["notes"] = r.notes;
  return j;
}

inline MixingReport report_from_json(const nlohmann::json& j) {
  try {
    MixingReport r;
    const auto kind = parse_family_name(j.at("graph").at("family").get<std::string>());
    detail::require(kind.has_value(), ErrorKind::parse_error, "unknown family");
    r.graph.kind = *kind;
    r.graph.parameters = j.at("graph").at("parameters").get<std::vector<std::size_t>>();

    const auto verdict = j.at("verdict").get<std::string>();
    bool matched = false;
    for (auto v : {Verdict::mixes, Verdict::does_not_mix_certified, Verdict::no_mixing_found_evidence}) {
      if (verdict_name(v) == verdict) {
        r.verdict = v;
        matched = true;
      }
    }
    detail::require(matched, ErrorKind::parse_error, "unknown verdict '" + verdict + "'");

    r.witness_times = j.at("witness_times").get<std::vector<double>>();
    r.min_distance = j.at("min_distance").get<double>();
    r.argmin_time = j.at("argmin_time").get<double>();
    r.deficit = j.at("deficit").get<double>();
    const auto& window = j.at("scan_window");
    detail::require(window.is_array() && window.size() == 2, ErrorKind::parse_error,
                    "scan_window must be [start, end]");
    r.window_start = window[0].get<double>();
    r.window_end = window[1].get<double>();
    r.grid_step = j.at("grid_step").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    const auto route = j.at("route").get<std::string>();
    detail::require(route == "closed-form" || route == "numeric", ErrorKind::parse_error,
                    "unknown route '" + route + "'");
    r.route = route == "closed-form" ? CertificationRoute::closed_form : CertificationRoute::numeric;
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

inline MixingReport report_from_json(const std::string& text) {
  try {
    return report_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

}  // namespace qwalk
