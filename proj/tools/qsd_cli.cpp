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

// qsd command-line front end.
//
// Exit status: 0 success, 1 a checked claim failed, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qsd/json_io.hpp"
#include "qsd/qsd.hpp"

namespace {

using qsd::Json;

struct Globals {
    unsigned threads = 0;
    std::string json_path;
    double budget_seconds = 24 * 3600.0;

    qsd::EnumerationBudget budget() const {
        qsd::EnumerationBudget b;
        b.threads = threads;
        b.max_seconds = budget_seconds;
        return b;
    }
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Codes from a file holding either construction records or code records.
std::vector<qsd::LinearCode> load_codes(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> records;
    bool constructions = false;
    while (qsd::detail::next_content_line(in, line)) {
        if (line.rfind("type=", 0) == 0) constructions = true;
        records.push_back(line);
    }
    if (!constructions) {
        std::istringstream again(text);
        return qsd::read_codes(again);
    }
    std::vector<qsd::LinearCode> out;
    for (const auto& r : records) out.push_back(qsd::parse_construction(r).build());
    return out;
}

qsd::LinearCode load_one(const std::string& path) {
    auto codes = load_codes(path);
    if (codes.size() != 1) throw UsageError(path + ": expected exactly one code");
    return codes.front();
}

qsd::Gf4 parse_mu(const std::string& s) {
    if (s.size() != 1 || s == "0") throw UsageError("--mu must be one of 1, w, v");
    return qsd::Gf4::from_char(s[0]);
}

void emit_json(const Globals& g, const Json& j) {
    if (g.json_path.empty()) return;
    std::ofstream out(g.json_path);
    if (!out) throw UsageError("cannot write " + g.json_path);
    out << j.dump(2) << "\n";
}

std::string params_text(const qsd::LinearCode& c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
}

int run_verify(const Globals& g, const std::string& path) {
    qsd::RunReport report;
    report.command = "verify " + path;
    qsd::detail::Stopwatch clock;
    const auto codes = load_codes(path);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const auto& c = codes[i];
        const std::string locus = path + "#" + std::to_string(i + 1);
        const bool sd = c.is_hermitian_self_dual();
        report.claims.push_back({locus, "hermitianSelfDual", "true", sd ? "true" : "false",
                                 sd ? qsd::ClaimStatus::pass : qsd::ClaimStatus::fail, 0});
        const auto wr = qsd::min_weight_info_set(c, g.budget());
        report.claims.push_back({locus, "d", "", wr.certified ? std::to_string(wr.min_weight) : "uncertified",
                                 wr.certified ? qsd::ClaimStatus::pass : qsd::ClaimStatus::fail, wr.elapsed_seconds});
        std::cout << locus << ": " << params_text(c) << " self-dual=" << (sd ? "true" : "false")
                  << " d=" << wr.min_weight << (wr.certified ? "" : " (uncertified)") << "\n";
    }
    report.elapsed_seconds = clock.seconds();
    emit_json(g, qsd::to_json(report));
    return report.ok() ? 0 : 1;
}

int run_minweight(const Globals& g, const std::string& path, bool exhaustive) {
    Json all = Json::array();
    bool ok = true;
    for (const auto& c : load_codes(path)) {
        const auto wr = exhaustive ? qsd::min_weight_exhaustive(c, g.budget()) : qsd::min_weight_info_set(c, g.budget());
        std::cout << params_text(c) << " d=" << wr.min_weight << " certified=" << (wr.certified ? "true" : "false")
                  << " method=" << qsd::to_string(wr.method) << "\n";
        ok = ok && wr.certified;
        all.push_back(qsd::to_json(wr));
    }
    emit_json(g, all);
    return ok ? 0 : 1;
}

std::vector<int> parse_weights(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw UsageError("--weights needs at least one weight");
    return out;
}

int run_count_words(const Globals& g, const std::string& path, const std::string& weights) {
    Json all = Json::array();
    for (const auto& c : load_codes(path)) {
        const auto wr = qsd::weight_report(c, parse_weights(weights), g.budget());
        std::cout << params_text(c) << " d=" << wr.min_weight;
        for (const auto& [w, cnt] : wr.counts)
            if (w > 0) std::cout << " A" << w << "=" << cnt;
        std::cout << "\n";
        all.push_back(qsd::to_json(wr));
    }
    emit_json(g, all);
    return 0;
}

int run_equiv(const Globals& g, const std::string& a, const std::string& b, bool semilinear) {
    qsd::EquivalenceOptions opt;
    opt.budget = g.budget();
    opt.budget.max_seconds = std::min(opt.budget.max_seconds, 3600.0);
    opt.semilinear = semilinear;
    const auto res = qsd::are_equivalent(load_one(a), load_one(b), opt);
    std::cout << qsd::to_string(res.verdict) << "\n";
    Json j{{"verdict", qsd::to_string(res.verdict)}, {"nodes", res.nodes}};
    if (res.map) {
        if (res.conjugated) std::cout << "conjugated\n";
        std::cout << res.map->to_string() << "\n";
        std::vector<std::size_t> one_based;
        for (auto p : res.map->perm) one_based.push_back(p + 1);
        std::string scal;
        for (auto s : res.map->scalars) scal.push_back(s.to_char());
        j["permutation"] = one_based;
        j["scalars"] = scal;
        j["conjugated"] = res.conjugated;
    }
    emit_json(g, j);
    return 0;
}

qsd::JoinDomain parse_domain(const std::string& s) {
    if (s == "orbits") return qsd::JoinDomain::orbits;
    if (s == "leading-one") return qsd::JoinDomain::leading_one;
    if (s == "all") return qsd::JoinDomain::all;
    throw UsageError("--domain must be orbits, leading-one or all");
}

void print_outcome(const qsd::SearchOutcome& o) {
    for (const auto& s : o.log) std::cout << "  " << s.stage << ": " << s.count << " (" << s.seconds << " s)\n";
    std::cout << "classes=" << o.class_count;
    if (o.semilinear_class_count >= 0) std::cout << " semilinearClasses=" << o.semilinear_class_count;
    std::cout << " maxWeightFound=" << o.max_weight_found << " undecided=" << o.undecided_pairs << "\n";
    for (const auto& r : o.representatives) std::cout << r.record.to_string() << " d=" << r.d << "\n";
}

int run_classify(const Globals& g, int n, const std::string& mu, int dmin, const std::string& domain,
                 bool semilinear, bool long_jobs) {
    if (n >= 10 && !long_jobs) throw UsageError("classification at block size 10 or more is long-running; pass --long");
    qsd::ClassifyOptions opt;
    opt.threads = g.threads;
    opt.domain = parse_domain(domain);
    opt.semilinear_counts = semilinear;
    const auto o = qsd::exhaustive_classify(static_cast<std::size_t>(n), parse_mu(mu), dmin, opt);
    print_outcome(o);
    emit_json(g, qsd::to_json(o));
    return o.undecided_pairs ? 1 : 0;
}

int run_search(const Globals& g, int n, const std::string& mu, int dmin, std::uint64_t seed, std::uint64_t trials) {
    qsd::ClassifyOptions opt;
    opt.threads = g.threads;
    const auto o = qsd::random_search(static_cast<std::size_t>(n), parse_mu(mu), dmin, seed, trials, opt);
    for (const auto& s : o.log) std::cout << "  " << s.stage << ": " << s.count << " (" << s.seconds << " s)\n";
    std::cout << "seed=" << seed << " finds=" << o.survivors.size() << "\n";
    for (const auto& r : o.survivors) std::cout << r.record.to_string() << " d=" << r.d << "\n";
    emit_json(g, qsd::to_json(o));
    return 0;
}

int run_gleason(const Globals& g, int n, int d, const std::string& params) {
    std::vector<std::string> names;
    std::stringstream in(params);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) names.push_back(tok);
    const auto sol = qsd::solve_possible_enumerator(n, d, names);
    const std::string csv = sol.to_csv();
    std::cout << csv;
    if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        out << csv;
    }
    return 0;
}

int run_quantum(const Globals& g, const std::string& path) {
    const auto c = load_one(path);
    const auto wr = qsd::min_weight_info_set(c, g.budget());
    const auto q = qsd::quantum_from_self_dual(c, wr);
    std::cout << q.to_string() << "\n" << qsd::to_json(q).dump(2) << "\n";
    emit_json(g, qsd::to_json(q));
    return 0;
}

int run_reproduce(const Globals& g, const std::string& table, bool long_jobs) {
    if (table.empty()) throw UsageError("reproduce needs a table id");
    qsd::ReproduceOptions opt;
    opt.budget = g.budget();
    opt.long_jobs = long_jobs;
    std::vector<std::string> tables;
    if (table == "all")
        tables = qsd::reproducible_tables();
    else
        tables.push_back(table);
    Json all = Json::array();
    bool ok = true;
    for (const auto& t : tables) {
        const auto r = qsd::reproduce(t, opt);
        for (const auto& c : r.claims)
            std::cout << qsd::to_string(c.status) << "  " << c.locus << "  " << c.claim << "  expected=" << c.expected
                      << " observed=" << c.observed << "\n";
        std::cout << t << ": " << r.count(qsd::ClaimStatus::pass) << " passed, " << r.count(qsd::ClaimStatus::fail)
                  << " failed, " << r.count(qsd::ClaimStatus::long_running) << " long-running (" << r.elapsed_seconds
                  << " s)\n";
        ok = ok && r.ok();
        all.push_back(qsd::to_json(r));
    }
    emit_json(g, tables.size() == 1 ? all[0] : all);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian self-dual codes over GF(4) built from four mu-circulant matrices"};
    app.require_subcommand(1);
    Globals g;
    if (const char* env = std::getenv("QSD_BUDGET_SECONDS")) g.budget_seconds = std::atof(env);
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_option("--json", g.json_path, "write the JSON report (CSV for gleason) to this path");
    app.add_option("--budget-seconds", g.budget_seconds, "time budget for enumerations (env QSD_BUDGET_SECONDS)");

    std::string file, file2, weights = "", mu = "1", domain = "orbits", params, table;
    int n = 0, dmin = 0, d = 0;
    std::uint64_t seed = 1, trials = 0;
    bool exhaustive = false, semilinear = false, long_jobs = false;

    auto* verify = app.add_subcommand("verify", "check self-duality and minimum weight of codes in a file");
    verify->add_option("file", file)->required();
    auto* minweight = app.add_subcommand("minweight", "certified minimum weight");
    minweight->add_option("file", file)->required();
    minweight->add_flag("--exhaustive", exhaustive, "enumerate all codewords");
    auto* count = app.add_subcommand("count-words", "exact numbers of codewords of given weights");
    count->add_option("file", file)->required();
    count->add_option("--weights", weights, "comma-separated weights")->required();
    auto* equiv = app.add_subcommand("equiv", "decide monomial equivalence of two codes");
    equiv->add_option("first", file)->required();
    equiv->add_option("second", file2)->required();
    equiv->add_flag("--semilinear", semilinear, "also allow conjugation");
    auto* classify = app.add_subcommand("classify", "exhaustive classification for one block size and mu");
    classify->add_option("--n", n, "block size (code length 4n)")->required();
    classify->add_option("--mu", mu, "1, w or v")->required();
    classify->add_option("--dmin", dmin, "minimum weight threshold")->required();
    classify->add_option("--domain", domain, "orbits, leading-one or all");
    classify->add_flag("--semilinear", semilinear, "also report class counts allowing conjugation");
    classify->add_flag("--long", long_jobs, "allow block sizes 10 and above");
    auto* search = app.add_subcommand("search", "seeded random search");
    search->add_option("--n", n)->required();
    search->add_option("--mu", mu)->required();
    search->add_option("--dmin", dmin)->required();
    search->add_option("--seed", seed);
    search->add_option("--trials", trials, "rows sampled per side")->required();
    auto* gleason = app.add_subcommand("gleason", "possible weight enumerator as CSV");
    gleason->add_option("--n", n)->required();
    gleason->add_option("--d", d)->required();
    gleason->add_option("--params", params, "comma-separated parameter names");
    auto* quantum = app.add_subcommand("quantum", "quantum code parameters of a self-dual code");
    quantum->add_option("--code", file)->required();
    auto* reproduce = app.add_subcommand("reproduce", "rebuild an embedded table and check its claims");
    reproduce->add_option("table", table, "T2 T3 T4 T5 T32-1 T32-2 T32-3 T9 G W56 or all")->required();
    reproduce->add_flag("--long", long_jobs, "include long-running certifications");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*verify) return run_verify(g, file);
        if (*minweight) return run_minweight(g, file, exhaustive);
        if (*count) return run_count_words(g, file, weights);
        if (*equiv) return run_equiv(g, file, file2, semilinear);
        if (*classify) return run_classify(g, n, mu, dmin, domain, semilinear, long_jobs);
        if (*search) return run_search(g, n, mu, dmin, seed, trials);
        if (*gleason) return run_gleason(g, n, d, params);
        if (*quantum) return run_quantum(g, file);
        if (*reproduce) return run_reproduce(g, table, long_jobs);
    } catch (const qsd::InconsistentSystem& e) {
        std::cerr << "inconsistent: " << e.what() << "\n";
        return 1;
    } catch (const qsd::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
