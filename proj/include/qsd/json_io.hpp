// Copyright 2026 The qsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of reports. Field names are stable.

#ifndef QSD_JSON_IO_HPP
#define QSD_JSON_IO_HPP

#include <json.hpp>

#include "qsd/classifier.hpp"
#include "qsd/equivalence.hpp"
#include "qsd/quantum.hpp"
#include "qsd/reproduce.hpp"
#include "qsd/weight_tools.hpp"

namespace qsd {

using Json = nlohmann::ordered_json;

inline Json to_json(const WeightReport& r) {
    Json counts = Json::object();
    for (const auto& [w, c] : r.counts) counts[std::to_string(w)] = c;
    return Json{{"n", r.n},
                {"k", r.k},
                {"d", r.min_weight},
                {"certified", r.certified},
                {"lowerBound", r.lower_bound},
                {"method", to_string(r.method)},
                {"counts", counts},
                {"elapsedSeconds", r.elapsed_seconds}};
}

inline Json to_json(const Survivor& s) { return Json{{"record", s.record.to_string()}, {"d", s.d}}; }

inline Json to_json(const SearchOutcome& o) {
    Json log = Json::array();
    for (const auto& s : o.log) log.push_back(Json{{"stage", s.stage}, {"count", s.count}, {"seconds", s.seconds}});
    Json survivors = Json::array(), reps = Json::array();
    for (const auto& s : o.survivors) survivors.push_back(to_json(s));
    for (const auto& s : o.representatives) reps.push_back(to_json(s));
    Json j{{"n", o.n},
           {"length", 4 * o.n},
           {"mu", std::string(1, o.mu.to_char())},
           {"mode", o.mode},
           {"domain", o.domain},
           {"dTarget", o.d_target},
           {"seed", o.seed},
           {"trials", o.trials},
           {"stages", log},
           {"survivors", survivors},
           {"representatives", reps},
           {"classCount", o.class_count},
           {"undecidedPairs", o.undecided_pairs},
           {"maxWeightFound", o.max_weight_found},
           {"elapsedSeconds", o.elapsed_seconds}};
    if (o.semilinear_class_count >= 0) j["semilinearClassCount"] = o.semilinear_class_count;
    return j;
}

inline Json to_json(const QuantumParams& q) {
    return Json{{"n", q.n}, {"k", q.k}, {"d", q.d}, {"params", q.to_string()}, {"source", q.source}};
}

inline Json to_json(const RunReport& r) {
    Json claims = Json::array();
    for (const auto& c : r.claims)
        claims.push_back(Json{{"locus", c.locus},
                              {"claim", c.claim},
                              {"expected", c.expected},
                              {"observed", c.observed},
                              {"status", to_string(c.status)},
                              {"seconds", c.seconds}});
    return Json{{"command", r.command},
                {"version", r.version},
                {"passed", r.count(ClaimStatus::pass)},
                {"failed", r.count(ClaimStatus::fail)},
                {"longRunning", r.count(ClaimStatus::long_running)},
                {"claims", claims},
                {"elapsedSeconds", r.elapsed_seconds}};
}

}  // namespace qsd

#endif  // QSD_JSON_IO_HPP
