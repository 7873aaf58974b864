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

// Exhaustive and random search over modified four mu-circulant codes.
//
// The self-duality condition A conj(A)^T + B conj(B)^T = I separates into a
// key for each side: gram(A) = A conj(A)^T and I + gram(B). Every row of each
// side is keyed, both lists are sorted, and the matching pairs are merged out
// (a sort-merge join). Survivors are then reduced by the symmetries below,
// filtered by minimum weight and split into monomial equivalence classes.
//
// Symmetries that preserve the code up to monomial equivalence, all of which
// leave gram() unchanged or map it consistently:
//  * A -> a A E^s and B -> b B E^t for nonzero scalars a, b and shifts s, t,
//    independently on the two sides. The generator (I | M) becomes
//    (I | D1 M D2) with block-diagonal monomial D1, D2 built from powers of
//    the unitary shift matrix E.
//  * (A, B) -> (B, A), and conj-transposing either side on its own.
// The row domain can therefore be cut down to one representative per
// scale-shift orbit on each side.

#ifndef QSD_CLASSIFIER_HPP
#define QSD_CLASSIFIER_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsd/constructions.hpp"
#include "qsd/equivalence.hpp"
#include "qsd/gf4.hpp"
#include "qsd/weight_tools.hpp"

namespace qsd {

/// A row of length n <= 24 packed into two bit planes.
struct SmallRow {
    std::uint32_t h = 0, l = 0;

    std::uint64_t key() const { return std::uint64_t{h} << 32 | l; }
    bool is_zero() const { return (h | l) == 0; }
    friend bool operator==(SmallRow, SmallRow) = default;
    friend auto operator<=>(SmallRow a, SmallRow b) { return a.key() <=> b.key(); }
};

/// Arithmetic on first rows of n x n mu-circulants, n <= 24.
class SmallCirculantRing {
   public:
    SmallCirculantRing(std::size_t n, Gf4 mu) : n_(n), mu_(mu), mask_((1u << n) - 1) {
        if (n == 0 || n > 24) throw std::invalid_argument("small circulant rows support 1 <= n <= 24");
        if (mu.is_zero()) throw std::invalid_argument("mu must be nonzero");
    }

    std::size_t size() const { return n_; }
    Gf4 mu() const { return mu_; }
    std::uint64_t domain_size() const { return std::uint64_t{1} << (2 * n_); }

    /// The index-th row in base-4 order (symbol i from bits 2i, 2i+1 of index).
    SmallRow row_at(std::uint64_t index) const {
        SmallRow r;
        for (std::size_t i = 0; i < n_; ++i) {
            const unsigned s = (index >> (2 * i)) & 3;
            r.h |= (s >> 1) << i;
            r.l |= (s & 1) << i;
        }
        return r;
    }

    Gf4 at(SmallRow r, std::size_t i) const {
        return Gf4::from_bits(((r.h >> i) & 1) << 1 | ((r.l >> i) & 1));
    }

    SmallRow scale(SmallRow r, Gf4 s) const {
        std::uint64_t h = r.h, l = r.l;
        planes::scale(h, l, s);
        return {static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(l)};
    }

    /// r * E: shift right by one, the wrapped symbol times mu.
    SmallRow shift(SmallRow r) const {
        const Gf4 wrap = mu_ * at(r, n_ - 1);
        SmallRow out{(r.h << 1) & mask_, (r.l << 1) & mask_};
        out.h |= wrap.bits() >> 1;
        out.l |= wrap.bits() & 1;
        return out;
    }

    SmallRow mul(SmallRow a, SmallRow b) const {
        SmallRow acc;
        for (std::size_t i = 0; i < n_; ++i) {
            const Gf4 s = at(a, i);
            if (!s.is_zero()) {
                const SmallRow t = scale(b, s);
                acc.h ^= t.h;
                acc.l ^= t.l;
            }
            b = shift(b);
        }
        return acc;
    }

    SmallRow conj_transpose(SmallRow r) const {
        SmallRow out;
        auto put = [&](std::size_t i, Gf4 x) {
            out.h |= (x.bits() >> 1) << i;
            out.l |= (x.bits() & 1) << i;
        };
        put(0, at(r, 0).conj());
        for (std::size_t i = 1; i < n_; ++i) put(i, (mu_ * at(r, n_ - i)).conj());
        return out;
    }

    SmallRow gram(SmallRow r) const { return mul(r, conj_transpose(r)); }

    SmallRow identity() const { return {0, 1}; }

    /// Least element (by key) of {a r E^s}.
    SmallRow orbit_min(SmallRow r) const {
        SmallRow best = r, cur = r;
        for (std::size_t s = 0; s < n_; ++s) {
            for (Gf4 a : kNonzero) best = std::min(best, scale(cur, a));
            cur = shift(cur);
        }
        return best;
    }

    bool leading_one(SmallRow r) const {
        const std::uint32_t any = r.h | r.l;
        if (!any) return true;
        const int i = std::countr_zero(any);
        return ((r.h >> i) & 1) == 0;
    }

    Gf4Vector to_vector(SmallRow r) const {
        Gf4Vector v(n_);
        for (std::size_t i = 0; i < n_; ++i) v.set(i, at(r, i));
        return v;
    }

    SmallRow from_vector(const Gf4Vector& v) const {
        if (v.size() != n_) throw std::invalid_argument("row length mismatch");
        SmallRow r;
        for (std::size_t i = 0; i < n_; ++i) {
            r.h |= (v[i].bits() >> 1) << i;
            r.l |= (v[i].bits() & 1) << i;
        }
        return r;
    }

    /// Least image of (a, b) under the pair symmetries, composed with orbit_min on each side.
    std::pair<SmallRow, SmallRow> canonical_pair(SmallRow a, SmallRow b) const {
        const SmallRow as[2] = {orbit_min(a), orbit_min(conj_transpose(a))};
        const SmallRow bs[2] = {orbit_min(b), orbit_min(conj_transpose(b))};
        std::pair<SmallRow, SmallRow> best{as[0], bs[0]};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                best = std::min(best, std::pair{as[i], bs[j]});
                best = std::min(best, std::pair{bs[j], as[i]});
            }
        return best;
    }

   private:
    std::size_t n_;
    Gf4 mu_;
    std::uint32_t mask_;
};

/// Which rows each side of the join ranges over.
enum class JoinDomain {
    all,          // every row on both sides
    leading_one,  // A zero or with leading symbol 1; B unrestricted
    orbits,       // one representative per scale-shift orbit on each side
};

inline const char* to_string(JoinDomain d) {
    switch (d) {
        case JoinDomain::all:
            return "all";
        case JoinDomain::leading_one:
            return "leadingOne";
        default:
            return "orbits";
    }
}

namespace detail {

struct KeyedRow {
    std::uint64_t key;
    SmallRow row;
    friend bool operator<(const KeyedRow& x, const KeyedRow& y) {
        return x.key != y.key ? x.key < y.key : x.row.key() < y.row.key();
    }
};

inline std::vector<KeyedRow> keyed_side(const SmallCirculantRing& ring, const std::vector<SmallRow>& rows,
                                        bool add_identity) {
    std::vector<KeyedRow> out;
    out.reserve(rows.size());
    const SmallRow id = ring.identity();
    for (SmallRow r : rows) {
        SmallRow g = ring.gram(r);
        if (add_identity) g = {g.h ^ id.h, g.l ^ id.l};
        out.push_back({g.key(), r});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Rows of one side of the join for the given domain.
inline std::vector<SmallRow> join_side_rows(const SmallCirculantRing& ring, JoinDomain domain, bool side_a) {
    std::vector<SmallRow> rows;
    for (std::uint64_t x = 0; x < ring.domain_size(); ++x) {
        const SmallRow r = ring.row_at(x);
        switch (domain) {
            case JoinDomain::all:
                rows.push_back(r);
                break;
            case JoinDomain::leading_one:
                if (!side_a || ring.leading_one(r)) rows.push_back(r);
                break;
            case JoinDomain::orbits:
                if (ring.orbit_min(r) == r) rows.push_back(r);
                break;
        }
    }
    return rows;
}

/// Emits every pair (a, b) from the two row lists with gram(a) + gram(b) = I.
/// Returns the number of pairs emitted. Output order is by key, then a, then b.
inline std::uint64_t join_rows(const SmallCirculantRing& ring, const std::vector<SmallRow>& rows_a,
                               const std::vector<SmallRow>& rows_b,
                               const std::function<void(SmallRow, SmallRow)>& emit) {
    const auto ka = detail::keyed_side(ring, rows_a, false);
    const auto kb = detail::keyed_side(ring, rows_b, true);
    std::uint64_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < ka.size() && j < kb.size()) {
        if (ka[i].key < kb[j].key) {
            ++i;
        } else if (kb[j].key < ka[i].key) {
            ++j;
        } else {
            const std::uint64_t key = ka[i].key;
            std::size_t i2 = i, j2 = j;
            while (i2 < ka.size() && ka[i2].key == key) ++i2;
            while (j2 < kb.size() && kb[j2].key == key) ++j2;
            for (std::size_t x = i; x < i2; ++x)
                for (std::size_t y = j; y < j2; ++y) {
                    emit(ka[x].row, kb[y].row);
                    ++count;
                }
            i = i2;
            j = j2;
        }
    }
    return count;
}

/// Meet-in-the-middle enumeration of all (rA, rB) in the domain that satisfy
/// the self-duality condition.
inline std::uint64_t meet_in_middle_join(std::size_t n, Gf4 mu, JoinDomain domain,
                                         const std::function<void(const Gf4Vector&, const Gf4Vector&)>& emit) {
    const SmallCirculantRing ring(n, mu);
    const auto ra = join_side_rows(ring, domain, true);
    const auto rb = join_side_rows(ring, domain, false);
    return join_rows(ring, ra, rb, [&](SmallRow a, SmallRow b) { emit(ring.to_vector(a), ring.to_vector(b)); });
}

struct StageLog {
    std::string stage;
    std::uint64_t count = 0;
    double seconds = 0;
};

struct Survivor {
    ConstructionRecord record;
    int d = 0;
};

struct SearchOutcome {
    std::size_t n = 0;
    Gf4 mu = Gf4::one();
    std::string mode;  // "exhaustive" or "random"
    std::string domain;
    int d_target = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<StageLog> log;
    /// Self-dual codes with d >= d_target, one per symmetry class.
    std::vector<Survivor> survivors;
    /// One survivor per monomial equivalence class, sorted.
    std::vector<Survivor> representatives;
    std::size_t class_count = 0;
    /// Class count when conjugation is also allowed; -1 if not computed.
    long semilinear_class_count = -1;
    std::size_t undecided_pairs = 0;
    /// Largest certified minimum weight among survivors (0 when none).
    int max_weight_found = 0;
    double elapsed_seconds = 0;
};

struct ClassifyOptions {
    JoinDomain domain = JoinDomain::orbits;
    unsigned threads = 0;
    EquivalenceOptions equivalence;
    bool semilinear_counts = false;
    /// Skip the equivalence stage (survivor counts only).
    bool skip_equivalence = false;
};

namespace detail {

/// Collapses joined pairs by symmetry, filters by minimum weight and splits the
/// survivors into equivalence classes.
inline void finish_search(const SmallCirculantRing& ring, std::vector<std::pair<SmallRow, SmallRow>> pairs,
                          const ClassifyOptions& opt, SearchOutcome& out, Stopwatch& clock) {
    auto stage = [&](const char* name, std::uint64_t count) {
        out.log.push_back({name, count, clock.seconds()});
    };
    for (auto& p : pairs) p = ring.canonical_pair(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    stage("symmetryClasses", pairs.size());

    const unsigned workers = opt.threads ? opt.threads : EnumerationBudget{}.worker_count();
    EnumerationBudget budget;
    budget.threads = 1;
    std::vector<int> weight(pairs.size(), 0);
    run_workers(workers, [&](unsigned part, unsigned parts) {
        MinWeightOptions mo;
        mo.budget = budget;
        mo.reject_below = out.d_target;
        for (std::size_t i = part; i < pairs.size(); i += parts) {
            const auto code = build_modified_four_circulant(ring.mu(), ring.to_vector(pairs[i].first),
                                                            ring.to_vector(pairs[i].second))
                                  .code();
            const auto r = search_min_weight(code, mo);
            weight[i] = r.certified ? r.best : 0;
        }
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (weight[i] < out.d_target || weight[i] == 0) continue;
        Survivor s{ConstructionRecord::four_circulant(ring.mu(), ring.to_vector(pairs[i].first),
                                                      ring.to_vector(pairs[i].second)),
                   weight[i]};
        if (!is_self_dual_condition(s.record.mu, s.record.row_a, s.record.row_b))
            throw std::logic_error("classifier: joined pair fails the self-duality condition");
        out.max_weight_found = std::max(out.max_weight_found, s.d);
        out.survivors.push_back(std::move(s));
    }
    stage("weightSurvivors", out.survivors.size());
    if (opt.skip_equivalence || out.survivors.empty()) return;

    std::vector<LinearCode> codes;
    for (const auto& s : out.survivors) codes.push_back(s.record.build());
    EquivalenceOptions eq = opt.equivalence;
    eq.budget.threads = workers;
    const DedupReport dr = dedup_by_equivalence(codes, eq);
    for (auto idx : dr.representatives) out.representatives.push_back(out.survivors[idx]);
    out.class_count = dr.representatives.size();
    out.undecided_pairs = dr.undecided.size();
    stage("equivalenceClasses", out.class_count);
    if (opt.semilinear_counts) {
        eq.semilinear = true;
        out.semilinear_class_count = static_cast<long>(dedup_by_equivalence(codes, eq).representatives.size());
        stage("semilinearClasses", out.semilinear_class_count);
    }
}

}  // namespace detail

/// Complete classification of modified four mu-circulant Hermitian self-dual
/// [4n, 2n, >= d_target] codes with block size n.
inline SearchOutcome exhaustive_classify(std::size_t n, Gf4 mu, int d_target, const ClassifyOptions& opt = {}) {
    if (n > 12) throw std::invalid_argument("exhaustive classification supports block sizes up to 12");
    detail::Stopwatch clock;
    SearchOutcome out;
    out.n = n;
    out.mu = mu;
    out.mode = "exhaustive";
    out.domain = to_string(opt.domain);
    out.d_target = d_target;
    const SmallCirculantRing ring(n, mu);
    const auto ra = join_side_rows(ring, opt.domain, true);
    const auto rb = opt.domain == JoinDomain::leading_one ? join_side_rows(ring, opt.domain, false) : ra;
    out.log.push_back({"rowsA", ra.size(), clock.seconds()});
    out.log.push_back({"rowsB", rb.size(), clock.seconds()});
    std::vector<std::pair<SmallRow, SmallRow>> pairs;
    const auto joined = join_rows(ring, ra, rb, [&](SmallRow a, SmallRow b) { pairs.emplace_back(a, b); });
    out.log.push_back({"selfDualPairs", joined, clock.seconds()});
    detail::finish_search(ring, std::move(pairs), opt, out, clock);
    out.elapsed_seconds = clock.seconds();
    return out;
}

/// Seeded random search: `trials` rows are drawn for each side (A with
/// leading symbol 1), joined on the self-duality keys, and the resulting
/// codes are kept when their minimum weight reaches d_target.
inline SearchOutcome random_search(std::size_t n, Gf4 mu, int d_target, std::uint64_t seed, std::uint64_t trials,
                                   const ClassifyOptions& opt = {}) {
    detail::Stopwatch clock;
    SearchOutcome out;
    out.n = n;
    out.mu = mu;
    out.mode = "random";
    out.domain = "sampled";
    out.d_target = d_target;
    out.seed = seed;
    out.trials = trials;
    if (trials == 0) return out;
    const SmallCirculantRing ring(n, mu);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, ring.domain_size() - 1);
    std::set<SmallRow> sa, sb;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SmallRow a = ring.row_at(pick(rng));
        const std::uint32_t any = a.h | a.l;
        if (any) a = ring.scale(a, ring.at(a, std::countr_zero(any)).inverse());
        sa.insert(a);
        sb.insert(ring.row_at(pick(rng)));
    }
    const std::vector<SmallRow> ra(sa.begin(), sa.end()), rb(sb.begin(), sb.end());
    out.log.push_back({"rowsA", ra.size(), clock.seconds()});
    out.log.push_back({"rowsB", rb.size(), clock.seconds()});
    std::vector<std::pair<SmallRow, SmallRow>> pairs;
    const auto joined = join_rows(ring, ra, rb, [&](SmallRow a, SmallRow b) { pairs.emplace_back(a, b); });
    out.log.push_back({"selfDualPairs", joined, clock.seconds()});
    ClassifyOptions o = opt;
    o.skip_equivalence = true;
    detail::finish_search(ring, std::move(pairs), o, out, clock);
    out.elapsed_seconds = clock.seconds();
    return out;
}

}  // namespace qsd

#endif  // QSD_CLASSIFIER_HPP
