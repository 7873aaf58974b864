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

// Monomial equivalence of codes over GF(4).
//
// Two codes are compared through the set L of their lightest codewords,
// taking weights d, d+1, ... until L spans the code. Any monomial map between
// the codes carries L1 onto L2, and a monomial map carrying a spanning subset
// of L1 into C2 is an equivalence. The search fixes a basis b_1..b_k of C1
// drawn from L1 and assigns images x_i in L2 one row at a time. After row i
// the two partial generators must have the same multiset of projective
// columns; when all k rows are placed the columns are paired up, giving the
// permutation and the scalars, and the map is checked on the codes.

#ifndef QSD_EQUIVALENCE_HPP
#define QSD_EQUIVALENCE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsd/gf4.hpp"
#include "qsd/linear_code.hpp"
#include "qsd/weight_tools.hpp"

namespace qsd {

/// x -> y with y[perm[j]] = scalars[j] * x[j].
struct MonomialMap {
    std::vector<std::size_t> perm;
    std::vector<Gf4> scalars;

    std::size_t size() const { return perm.size(); }

    static MonomialMap identity(std::size_t n) {
        MonomialMap m;
        m.perm.resize(n);
        for (std::size_t i = 0; i < n; ++i) m.perm[i] = i;
        m.scalars.assign(n, Gf4::one());
        return m;
    }

    template <class Rng>
    static MonomialMap random(std::size_t n, Rng& rng) {
        MonomialMap m = identity(n);
        std::shuffle(m.perm.begin(), m.perm.end(), rng);
        std::uniform_int_distribution<int> pick(0, 2);
        for (auto& s : m.scalars) s = kNonzero[pick(rng)];
        return m;
    }

    bool is_valid() const {
        if (perm.size() != scalars.size()) return false;
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (perm[i] >= perm.size() || seen[perm[i]] || scalars[i].is_zero()) return false;
            seen[perm[i]] = true;
        }
        return true;
    }

    Gf4Vector apply(const Gf4Vector& x) const {
        if (x.size() != size()) throw std::invalid_argument("MonomialMap: length mismatch");
        Gf4Vector y(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) y.set(perm[j], scalars[j] * x[j]);
        return y;
    }

    LinearCode apply(const LinearCode& c) const {
        if (c.is_zero_code()) return c;
        std::vector<Gf4Vector> rows;
        for (const auto& r : c.rows()) rows.push_back(apply(r));
        return LinearCode::from_rows(std::move(rows), c.length());
    }

    /// The map "this, then g".
    MonomialMap then(const MonomialMap& g) const {
        MonomialMap h;
        h.perm.resize(size());
        h.scalars.resize(size());
        for (std::size_t j = 0; j < size(); ++j) {
            h.perm[j] = g.perm[perm[j]];
            h.scalars[j] = g.scalars[perm[j]] * scalars[j];
        }
        return h;
    }

    MonomialMap inverse() const {
        MonomialMap m;
        m.perm.resize(size());
        m.scalars.resize(size());
        for (std::size_t j = 0; j < size(); ++j) {
            m.perm[perm[j]] = j;
            m.scalars[perm[j]] = scalars[j].inverse();
        }
        return m;
    }

    /// One-line notation (1-based images), then the scalar string.
    std::string to_string() const {
        std::ostringstream s;
        for (std::size_t j = 0; j < size(); ++j) s << (j ? " " : "") << perm[j] + 1;
        s << "\n";
        for (Gf4 c : scalars) s << c.to_char();
        return s.str();
    }

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

/// Monomial-invariant fingerprint built from the minimum-weight words.
struct InvariantSignature {
    std::size_t n = 0, k = 0;
    int d = 0;
    std::uint64_t a_d = 0, a_d2 = 0;
    /// Sorted, per coordinate: number of minimum-weight lines covering it.
    std::vector<std::uint32_t> coord_profile;
    /// Index s: number of unordered pairs of minimum-weight lines whose supports meet in s coordinates.
    std::vector<std::uint64_t> pair_intersections;

    friend auto operator<=>(const InvariantSignature&, const InvariantSignature&) = default;
};

struct EquivalenceOptions {
    EnumerationBudget budget{.max_seconds = 600.0, .max_window_weight = 64, .threads = 1};
    std::uint64_t max_nodes = 50'000'000;
    /// Also accept maps composed with symbol-wise conjugation.
    bool semilinear = false;
};

/// Everything the search needs about one code; computed once per code.
struct EquivalenceData {
    LinearCode code;
    InvariantSignature signature;
    int span_weight = 0;             // L = nonzero words of weight <= span_weight
    std::vector<Gf4Vector> words;    // L, one normalized representative per line
    std::vector<std::uint64_t> word_class;  // monomial-invariant label per word

    EquivalenceData conj() const {
        EquivalenceData c = *this;
        c.code = code.conj();
        for (auto& w : c.words) w = w.conj().normalized();
        return c;
    }
};

namespace detail {

using Support = std::array<std::uint64_t, 4>;

inline Support support_of(const Gf4Vector& x) {
    Support s{};
    for (std::size_t i = 0; i < x.num_words(); ++i) s[i] = x.hi()[i] | x.lo()[i];
    return s;
}

inline int meet(const Support& a, const Support& b) {
    return std::popcount(a[0] & b[0]) + std::popcount(a[1] & b[1]) + std::popcount(a[2] & b[2]) +
           std::popcount(a[3] & b[3]);
}

inline std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFF;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::size_t rank_of(std::vector<Gf4Vector> rows, std::size_t n) { return reduce_to_rref(rows, n).size(); }

}  // namespace detail

/// Computes the signature and the spanning light-word set of a code.
inline EquivalenceData prepare_equivalence(const LinearCode& code, const EnumerationBudget& budget = {}) {
    const std::size_t n = code.length(), k = code.dimension();
    if (n > 256) throw std::invalid_argument("equivalence: lengths above 256 are not supported");
    if (k == 0 || k > 32) throw std::invalid_argument("equivalence: dimension must be in [1, 32]");
    EquivalenceData e;
    e.code = code;
    auto& sig = e.signature;
    sig.n = n;
    sig.k = k;
    const WeightReport wr = min_weight_info_set(code, budget);
    if (!wr.certified) throw BudgetExceeded("equivalence: minimum weight not certified within budget");
    sig.d = wr.min_weight;
    int w = sig.d;
    e.words = light_words(code, sig.d, w, budget);
    const std::size_t min_lines = e.words.size();
    while (detail::rank_of(e.words, n) < k) {
        ++w;
        e.words = light_words(code, sig.d, w, budget);
    }
    e.span_weight = w;
    sig.a_d = 3 * min_lines;
    sig.a_d2 = count_words(code, {std::min<int>(sig.d + 2, static_cast<int>(n))}, budget).begin()->second;

    const std::size_t m = e.words.size();
    std::vector<detail::Support> supp(m);
    std::vector<int> wt(m);
    for (std::size_t i = 0; i < m; ++i) {
        supp[i] = detail::support_of(e.words[i]);
        wt[i] = static_cast<int>(e.words[i].weight());
    }
    sig.coord_profile.assign(n, 0);
    sig.pair_intersections.assign(n + 1, 0);
    const int span = w - sig.d + 1;
    std::vector<std::vector<std::uint32_t>> hist(m, std::vector<std::uint32_t>(span * (n + 1), 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (wt[i] == sig.d)
            for (std::size_t c = 0; c < n; ++c)
                if (!e.words[i][c].is_zero()) ++sig.coord_profile[c];
        for (std::size_t j = i + 1; j < m; ++j) {
            const int s = detail::meet(supp[i], supp[j]);
            if (wt[i] == sig.d && wt[j] == sig.d) ++sig.pair_intersections[s];
            ++hist[i][(wt[j] - sig.d) * (n + 1) + s];
            ++hist[j][(wt[i] - sig.d) * (n + 1) + s];
        }
    }
    std::sort(sig.coord_profile.begin(), sig.coord_profile.end());
    e.word_class.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t h = detail::fnv_mix(1469598103934665603ULL, static_cast<std::uint64_t>(wt[i]));
        for (auto v : hist[i]) h = detail::fnv_mix(h, v);
        e.word_class[i] = h;
    }
    return e;
}

inline InvariantSignature signature(const LinearCode& code, const EnumerationBudget& budget = {}) {
    return prepare_equivalence(code, budget).signature;
}

enum class EquivalenceVerdict { equivalent, inequivalent, undecided };

inline const char* to_string(EquivalenceVerdict v) {
    switch (v) {
        case EquivalenceVerdict::equivalent:
            return "equivalent";
        case EquivalenceVerdict::inequivalent:
            return "inequivalent";
        default:
            return "undecided";
    }
}

struct EquivalenceResult {
    EquivalenceVerdict verdict = EquivalenceVerdict::undecided;
    /// Maps the first code (conjugated first when `conjugated`) onto the second.
    std::optional<MonomialMap> map;
    bool conjugated = false;
    std::uint64_t nodes = 0;
};

namespace detail {

class MonomialSearch {
   public:
    MonomialSearch(const EquivalenceData& a, const EquivalenceData& b, const EquivalenceOptions& opt)
        : a_(a), b_(b), opt_(opt), n_(a.code.length()), k_(a.code.dimension()) {}

    EquivalenceResult run() {
        EquivalenceResult res;
        if (a_.words.size() != b_.words.size() || a_.span_weight != b_.span_weight) {
            res.verdict = EquivalenceVerdict::inequivalent;
            return res;
        }
        for (std::size_t i = 0; i < b_.words.size(); ++i) by_class_[b_.word_class[i]].push_back(i);
        std::map<std::uint64_t, std::size_t> count_a;
        for (auto c : a_.word_class) ++count_a[c];
        for (const auto& [c, cnt] : count_a) {
            auto it = by_class_.find(c);
            if (it == by_class_.end() || it->second.size() != cnt) {
                res.verdict = EquivalenceVerdict::inequivalent;
                return res;
            }
        }
        choose_basis(count_a);
        for (std::size_t i = 0; i < b_.words.size(); ++i) supp_b_.push_back(support_of(b_.words[i]));
        for (auto idx : basis_) supp_basis_.push_back(support_of(a_.words[idx]));
        // Columns of the basis generator of the first code, bit i = row i.
        col_a_h_.assign(n_, 0);
        col_a_l_.assign(n_, 0);
        for (std::size_t i = 0; i < k_; ++i) {
            const Gf4Vector& r = a_.words[basis_[i]];
            for (std::size_t j = 0; j < n_; ++j) {
                const unsigned s = r[j].bits();
                col_a_h_[j] |= std::uint64_t{s >> 1} << i;
                col_a_l_[j] |= std::uint64_t{s & 1} << i;
            }
        }
        targets_.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) targets_[i] = column_profile(col_a_h_, col_a_l_, i + 1);
        col_b_h_.assign(n_, 0);
        col_b_l_.assign(n_, 0);
        chosen_.assign(k_, 0);
        scalar_.assign(k_, Gf4::one());
        const bool found = dfs(0);
        res.nodes = nodes_;
        if (found) {
            res.verdict = EquivalenceVerdict::equivalent;
            res.map = map_;
        } else {
            res.verdict = aborted_ ? EquivalenceVerdict::undecided : EquivalenceVerdict::inequivalent;
        }
        return res;
    }

   private:
    static std::uint64_t normalize_column(std::uint64_t h, std::uint64_t l) {
        const std::uint64_t any = h | l;
        if (!any) return 0;
        const int i = std::countr_zero(any);
        const Gf4 s = Gf4::from_bits(static_cast<unsigned>(((h >> i) & 1) << 1 | ((l >> i) & 1)));
        planes::scale(h, l, s.inverse());
        return h << 32 | l;
    }

    std::vector<std::uint64_t> column_profile(const std::vector<std::uint64_t>& h, const std::vector<std::uint64_t>& l,
                                              std::size_t rows) const {
        const std::uint64_t mask = rows >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
        std::vector<std::uint64_t> p(n_);
        for (std::size_t j = 0; j < n_; ++j) p[j] = normalize_column(h[j] & mask, l[j] & mask);
        std::sort(p.begin(), p.end());
        return p;
    }

    void choose_basis(const std::map<std::uint64_t, std::size_t>& count_a) {
        // Rarest word classes first; among those prefer words overlapping the span so far.
        std::vector<std::size_t> order(a_.words.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return count_a.at(a_.word_class[x]) < count_a.at(a_.word_class[y]);
        });
        std::vector<Gf4Vector> span;
        Support covered{};
        std::vector<bool> used(a_.words.size(), false);
        while (basis_.size() < k_) {
            std::size_t best = SIZE_MAX;
            int best_overlap = -1;
            std::size_t best_rarity = SIZE_MAX;
            for (std::size_t idx : order) {
                if (used[idx]) continue;
                const std::size_t rarity = count_a.at(a_.word_class[idx]);
                if (best != SIZE_MAX && rarity > best_rarity) break;
                const int overlap = meet(covered, support_of(a_.words[idx]));
                if (overlap <= best_overlap) continue;
                std::vector<Gf4Vector> trial = span;
                trial.push_back(a_.words[idx]);
                if (rank_of(trial, n_) == span.size()) {
                    used[idx] = true;
                    continue;
                }
                best = idx;
                best_overlap = overlap;
                best_rarity = rarity;
            }
            if (best == SIZE_MAX) throw std::logic_error("equivalence: light words do not span the code");
            used[best] = true;
            span.push_back(a_.words[best]);
            basis_.push_back(best);
            const Support s = support_of(a_.words[best]);
            for (int i = 0; i < 4; ++i) covered[i] |= s[i];
        }
    }

    bool out_of_budget() {
        if (++nodes_ > opt_.max_nodes) aborted_ = true;
        if ((nodes_ & 0xFFF) == 0 && clock_.seconds() > opt_.budget.max_seconds) aborted_ = true;
        return aborted_;
    }

    void place(std::size_t level, std::size_t word, Gf4 s) {
        const Gf4Vector& x = b_.words[word];
        for (std::size_t j = 0; j < n_; ++j) {
            const unsigned v = (s * x[j]).bits();
            col_b_h_[j] = (col_b_h_[j] & ~(std::uint64_t{1} << level)) | std::uint64_t{v >> 1} << level;
            col_b_l_[j] = (col_b_l_[j] & ~(std::uint64_t{1} << level)) | std::uint64_t{v & 1} << level;
        }
    }

    bool dfs(std::size_t level) {
        if (level == k_) return finish();
        const auto& cands = by_class_.at(a_.word_class[basis_[level]]);
        for (std::size_t cand : cands) {
            bool ok = true;
            for (std::size_t j = 0; j < level && ok; ++j)
                ok = chosen_[j] != cand && meet(supp_b_[cand], supp_b_[chosen_[j]]) ==
                                               meet(supp_basis_[level], supp_basis_[j]);
            if (!ok) continue;
            for (int si = 0; si < (level == 0 ? 1 : 3); ++si) {
                if (out_of_budget()) return false;
                place(level, cand, kNonzero[si]);
                if (column_profile(col_b_h_, col_b_l_, level + 1) != targets_[level]) continue;
                chosen_[level] = cand;
                scalar_[level] = kNonzero[si];
                if (dfs(level + 1)) return true;
                if (aborted_) return false;
            }
        }
        return false;
    }

    bool finish() {
        // Pair columns with equal normalized value: column j of the first
        // generator times s_j equals column t of the second.
        std::map<std::uint64_t, std::vector<std::size_t>> free_b;
        for (std::size_t t = n_; t-- > 0;) free_b[normalize_column(col_b_h_[t], col_b_l_[t])].push_back(t);
        MonomialMap m = MonomialMap::identity(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            auto& bucket = free_b[normalize_column(col_a_h_[j], col_a_l_[j])];
            if (bucket.empty()) return false;
            const std::size_t t = bucket.back();
            bucket.pop_back();
            m.perm[j] = t;
            const std::uint64_t any = col_a_h_[j] | col_a_l_[j];
            if (any) {
                const int i = std::countr_zero(any);
                const Gf4 va = Gf4::from_bits(static_cast<unsigned>(((col_a_h_[j] >> i) & 1) << 1 | ((col_a_l_[j] >> i) & 1)));
                const Gf4 vb = Gf4::from_bits(static_cast<unsigned>(((col_b_h_[t] >> i) & 1) << 1 | ((col_b_l_[t] >> i) & 1)));
                m.scalars[j] = vb * va.inverse();
            }
        }
        if (!(m.apply(a_.code) == b_.code)) return false;
        map_ = std::move(m);
        return true;
    }

    const EquivalenceData& a_;
    const EquivalenceData& b_;
    const EquivalenceOptions& opt_;
    std::size_t n_, k_;
    Stopwatch clock_;
    std::map<std::uint64_t, std::vector<std::size_t>> by_class_;
    std::vector<std::size_t> basis_;
    std::vector<Support> supp_b_, supp_basis_;
    std::vector<std::uint64_t> col_a_h_, col_a_l_, col_b_h_, col_b_l_;
    std::vector<std::vector<std::uint64_t>> targets_;
    std::vector<std::size_t> chosen_;
    std::vector<Gf4> scalar_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    MonomialMap map_;
};

inline void verify_map(const LinearCode& from, const LinearCode& to, const MonomialMap& m) {
    if (!m.is_valid() || !(m.apply(from) == to))
        throw std::logic_error("equivalence: produced map fails verification");
}

}  // namespace detail

inline EquivalenceResult are_equivalent(const EquivalenceData& a, const EquivalenceData& b,
                                        const EquivalenceOptions& opt = {}) {
    EquivalenceResult res;
    if (a.code.length() != b.code.length() || a.code.dimension() != b.code.dimension()) {
        res.verdict = EquivalenceVerdict::inequivalent;
        return res;
    }
    if (a.signature == b.signature) {
        res = detail::MonomialSearch(a, b, opt).run();
        if (res.map) detail::verify_map(a.code, b.code, *res.map);
    } else {
        res.verdict = EquivalenceVerdict::inequivalent;
    }
    if (res.verdict != EquivalenceVerdict::equivalent && opt.semilinear) {
        const EquivalenceData ac = a.conj();
        if (ac.signature == b.signature) {
            EquivalenceResult r2 = detail::MonomialSearch(ac, b, opt).run();
            r2.nodes += res.nodes;
            if (r2.map) {
                detail::verify_map(ac.code, b.code, *r2.map);
                r2.conjugated = true;
                return r2;
            }
            if (r2.verdict == EquivalenceVerdict::undecided) res.verdict = EquivalenceVerdict::undecided;
            res.nodes = r2.nodes;
        }
    }
    return res;
}

inline EquivalenceResult are_equivalent(const LinearCode& a, const LinearCode& b, const EquivalenceOptions& opt = {}) {
    if (a.length() != b.length() || a.dimension() != b.dimension()) return {EquivalenceVerdict::inequivalent, {}, false, 0};
    return are_equivalent(prepare_equivalence(a, opt.budget), prepare_equivalence(b, opt.budget), opt);
}

struct DedupReport {
    /// Class index of every input code.
    std::vector<std::size_t> class_of;
    /// Index into the input of each class representative.
    std::vector<std::size_t> representatives;
    /// Input index pairs whose comparison ran out of budget.
    std::vector<std::pair<std::size_t, std::size_t>> undecided;
};

/// Partitions codes into equivalence classes: bucket by signature, then compare
/// against one member of every class in the bucket. Each class is represented
/// by its member with the lexicographically least reduced generator.
inline DedupReport dedup_by_equivalence(const std::vector<LinearCode>& codes, const EquivalenceOptions& opt = {}) {
    DedupReport rep;
    const std::size_t m = codes.size();
    rep.class_of.assign(m, SIZE_MAX);
    std::vector<std::optional<EquivalenceData>> data(m);
    detail::run_workers(std::min<unsigned>(opt.budget.worker_count(), std::max<std::size_t>(m, 1)),
                        [&](unsigned part, unsigned parts) {
                            EnumerationBudget b = opt.budget;
                            b.threads = 1;
                            for (std::size_t i = part; i < m; i += parts) data[i] = prepare_equivalence(codes[i], b);
                        });
    std::map<InvariantSignature, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < m; ++i) buckets[data[i]->signature].push_back(i);
    std::vector<std::vector<std::size_t>> classes;
    for (const auto& [sig, members] : buckets) {
        std::vector<std::size_t> local;  // class ids created in this bucket
        for (std::size_t i : members) {
            bool placed = false;
            std::vector<std::size_t> pending;
            for (std::size_t cls : local) {
                const std::size_t r = classes[cls].front();
                const auto res = are_equivalent(*data[r], *data[i], opt);
                if (res.verdict == EquivalenceVerdict::equivalent) {
                    classes[cls].push_back(i);
                    rep.class_of[i] = cls;
                    placed = true;
                    break;
                }
                if (res.verdict == EquivalenceVerdict::undecided) pending.push_back(r);
            }
            if (placed) continue;
            for (std::size_t r : pending) rep.undecided.emplace_back(r, i);
            rep.class_of[i] = classes.size();
            local.push_back(classes.size());
            classes.push_back({i});
        }
    }
    // Order classes by their least member text so the output does not depend on input order.
    std::vector<std::pair<std::string, std::size_t>> keyed;
    std::vector<std::size_t> least;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::size_t best = classes[c].front();
        std::string best_text = to_code_text(codes[best]);
        for (std::size_t i : classes[c]) {
            std::string t = to_code_text(codes[i]);
            if (t < best_text) best_text = std::move(t), best = i;
        }
        keyed.emplace_back(std::move(best_text), c);
        least.push_back(best);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> renumber(classes.size());
    for (std::size_t pos = 0; pos < keyed.size(); ++pos) {
        renumber[keyed[pos].second] = pos;
        rep.representatives.push_back(least[keyed[pos].second]);
    }
    for (auto& c : rep.class_of) c = renumber[c];
    return rep;
}

}  // namespace qsd

#endif  // QSD_EQUIVALENCE_HPP
