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

// Rebuilds every embedded code and checks its published claims.

#ifndef QSD_REPRODUCE_HPP
#define QSD_REPRODUCE_HPP

#include <string>
#include <vector>

#include "qsd/constructions.hpp"
#include "qsd/gleason.hpp"
#include "qsd/known_codes.hpp"
#include "qsd/linear_code.hpp"
#include "qsd/weight_tools.hpp"

namespace qsd {

inline constexpr const char* kVersion = "1.0.0";

enum class ClaimStatus { pass, fail, long_running };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass:
            return "pass";
        case ClaimStatus::fail:
            return "fail";
        default:
            return "longRunning";
    }
}

struct ClaimResult {
    std::string locus;  // "<table> <entry>"
    std::string claim;
    std::string expected;
    std::string observed;
    ClaimStatus status = ClaimStatus::pass;
    double seconds = 0;
};

struct RunReport {
    std::string command;
    std::string version = kVersion;
    std::vector<ClaimResult> claims;
    double elapsed_seconds = 0;

    std::size_t count(ClaimStatus s) const {
        std::size_t c = 0;
        for (const auto& r : claims) c += r.status == s;
        return c;
    }
    bool ok() const { return count(ClaimStatus::fail) == 0; }
};

struct ReproduceOptions {
    EnumerationBudget budget;
    /// Also certify minimum weights at lengths >= 60.
    bool long_jobs = false;
};

namespace detail {

class ClaimRecorder {
   public:
    explicit ClaimRecorder(RunReport& r) : report_(r) {}

    void check(const std::string& locus, const std::string& claim, const std::string& expected,
               const std::string& observed) {
        report_.claims.push_back({locus, claim, expected, observed,
                                  expected == observed ? ClaimStatus::pass : ClaimStatus::fail, lap()});
    }

    void long_running(const std::string& locus, const std::string& claim, const std::string& expected) {
        report_.claims.push_back({locus, claim, expected, "", ClaimStatus::long_running, lap()});
    }

   private:
    double lap() {
        const double now = clock_.seconds();
        const double d = now - last_;
        last_ = now;
        return d;
    }

    RunReport& report_;
    Stopwatch clock_;
    double last_ = 0;
};

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline void reproduce_code_entry(const KnownCodeEntry& e, const ReproduceOptions& opt, ClaimRecorder& rec) {
    const std::string locus = e.table + " " + e.name;
    const ConstructionRecord r = e.record();
    const LinearCode code = r.build();
    const int n = static_cast<int>(code.length());
    if (r.kind == ConstructionRecord::Kind::four_circulant) {
        rec.check(locus, "selfDualCondition", "true", yes_no(is_self_dual_condition(r.four_circulant())));
    }
    rec.check(locus, "hermitianSelfDual", "true", yes_no(code.is_hermitian_self_dual()));
    if (!e.has_claim("d")) return;
    const int d = static_cast<int>(e.claim("d"));
    if (n >= 60 && !opt.long_jobs) {
        rec.long_running(locus, "d", std::to_string(d));
        return;
    }
    std::vector<int> weights;
    for (const auto& [key, value] : e.claims)
        if (key.size() > 1 && key[0] == 'A') weights.push_back(std::stoi(key.substr(1)));
    WeightReport wr = code.dimension() <= 12 ? min_weight_exhaustive(code, opt.budget)
                                             : weight_report(code, weights, opt.budget);
    rec.check(locus, "d", std::to_string(d), wr.certified ? std::to_string(wr.min_weight) : "uncertified");
    for (int w : weights) {
        const auto it = wr.counts.find(w);
        rec.check(locus, "A" + std::to_string(w), std::to_string(e.claim("A" + std::to_string(w))),
                  std::to_string(it == wr.counts.end() ? 0 : it->second));
    }
    if (e.table == "T3") rec.check(locus, "extremal", "true", yes_no(wr.min_weight == extremal_bound(n)));
}

inline void reproduce_g(const ReproduceOptions& opt, ClaimRecorder& rec) {
    (void)opt;
    const auto g1 = known_code("G_{91,1}"), g2 = known_code("G_{91,2}"), g100 = known_code("G_{100}");
    const LinearCode c1 = g1.record().build(), c2 = g2.record().build();
    rec.check("G G_{91,1}", "[n,k]", "[91," + std::to_string(g1.claim("k")) + "]",
              "[" + std::to_string(c1.length()) + "," + std::to_string(c1.dimension()) + "]");
    rec.check("G G_{91,2}", "[n,k]", "[91," + std::to_string(g2.claim("k")) + "]",
              "[" + std::to_string(c2.length()) + "," + std::to_string(c2.dimension()) + "]");
    rec.check("G G_{91,1}", "subcodeOfG_{91,2}", "true", yes_no(c1.is_subcode_of(c2)));
    const LinearCode aux = LinearCode::full_space(1);
    const LinearCode g92 = construction_x(c1, c2, aux);
    rec.check("G G_{92}", "[n,k]", "[92,46]",
              "[" + std::to_string(g92.length()) + "," + std::to_string(g92.dimension()) + "]");
    rec.check("G G_{92}", "hermitianSelfDual", "true", yes_no(g92.is_hermitian_self_dual()));
    rec.long_running("G G_{92}", "d", "");
    const LinearCode c100 = g100.record().build();
    rec.check("G G_{100}", "[n,k]", "[100," + std::to_string(g100.claim("k")) + "]",
              "[" + std::to_string(c100.length()) + "," + std::to_string(c100.dimension()) + "]");
    rec.check("G G_{100}", "hermitianSelfDual", "true", yes_no(c100.is_hermitian_self_dual()));
    rec.long_running("G G_{100}", "d", "");
}

inline void reproduce_w56(ClaimRecorder& rec) {
    const GleasonSolution sol = solve_possible_enumerator(56, 16, {"alpha", "beta"});
    for (const auto& row : published_w56()) {
        const ParamPoly& p = sol.weights.at(row.weight);
        std::ostringstream obs, exp;
        obs << p.constant() << " " << p.coeff(0) << " " << p.coeff(1);
        exp << row.constant << " " << row.alpha << " " << row.beta;
        rec.check("W56 i=" + std::to_string(row.weight), "A" + std::to_string(row.weight), exp.str(), obs.str());
    }
    const ParamPoly total = sol.total();
    std::ostringstream obs;
    obs << total.constant() << (total.is_constant() ? "" : " + params");
    rec.check("W56", "sumA", BigInt(BigInt(1) << 56).str(), obs.str());
}

}  // namespace detail

/// Table ids accepted by reproduce(): the code tables plus "G" and "W56".
inline std::vector<std::string> reproducible_tables() {
    std::vector<std::string> ids = known_table_ids();
    ids.push_back("W56");
    return ids;
}

inline RunReport reproduce(const std::string& table, const ReproduceOptions& opt = {}) {
    const auto ids = reproducible_tables();
    if (std::find(ids.begin(), ids.end(), table) == ids.end())
        throw std::invalid_argument("reproduce: unknown table id '" + table + "'");
    detail::Stopwatch clock;
    RunReport report;
    report.command = "reproduce " + table + (opt.long_jobs ? " --long" : "");
    detail::ClaimRecorder rec(report);
    if (table == "G") {
        detail::reproduce_g(opt, rec);
    } else if (table == "W56") {
        detail::reproduce_w56(rec);
    } else {
        for (const auto& e : known_codes(table)) detail::reproduce_code_entry(e, opt, rec);
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

}  // namespace qsd

#endif  // QSD_REPRODUCE_HPP
