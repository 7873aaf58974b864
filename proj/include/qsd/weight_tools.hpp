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

// Minimum weight and weight counting for linear codes over GF(4).
//
// Two engines are provided:
//
//  * an exhaustive walk over all 4^k codewords in Gray-code order (one
//    bit-plane XOR and one popcount per codeword), which yields the full
//    weight distribution;
//
//  * an information-set enumerator in the Brouwer-Zimmermann style. The
//    coordinates are split into disjoint information sets S_0, S_1, ...; for
//    each set the generator is brought to systematic form on that set and all
//    codewords whose restriction to the set has weight <= p are visited. Once
//    every set has been processed up to p, every codeword not yet visited has
//    weight >= sum_j (p + 1 - defect_j), which certifies the minimum weight.
//
// Codewords are visited projectively: the information vector always has its
// first nonzero coefficient equal to 1, so each line {x, wx, vx} is seen once
// per information set. Exact counts multiply by 3.

#ifndef QSD_WEIGHT_TOOLS_HPP
#define QSD_WEIGHT_TOOLS_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qsd/gf4.hpp"
#include "qsd/linear_code.hpp"

namespace qsd {

class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct EnumerationBudget {
    double max_seconds = 24 * 3600.0;
    /// Cap on the information-window weight p.
    int max_window_weight = 64;
    /// Worker threads; 0 means one per available core.
    unsigned threads = 0;

    unsigned worker_count() const {
        if (threads) return threads;
        const unsigned h = std::thread::hardware_concurrency();
        return h ? h : 1;
    }
};

enum class WeightMethod { exhaustive, info_set };

inline const char* to_string(WeightMethod m) { return m == WeightMethod::exhaustive ? "exhaustive" : "infoSet"; }

struct WeightReport {
    std::size_t n = 0;
    std::size_t k = 0;
    int min_weight = 0;
    /// Proven lower bound on the minimum weight; equals min_weight when certified.
    int lower_bound = 0;
    WeightMethod method = WeightMethod::info_set;
    bool certified = false;
    /// Exact A_i for the weights that were requested (all weights for exhaustive runs).
    std::map<int, std::uint64_t> counts;
    double elapsed_seconds = 0;
    Gf4Vector witness;
};

/// 2 floor(n/6) + 2, the upper bound on the minimum weight of a Hermitian self-dual code.
inline int extremal_bound(int n) {
    if (n < 2 || n % 2) throw std::invalid_argument("extremal_bound: length must be even and >= 2");
    return 2 * (n / 6) + 2;
}

namespace detail {

class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

template <std::size_t W>
struct Packed {
    std::array<std::uint64_t, W> h{}, l{};

    friend Packed operator^(const Packed& a, const Packed& b) {
        Packed r;
        for (std::size_t i = 0; i < W; ++i) {
            r.h[i] = a.h[i] ^ b.h[i];
            r.l[i] = a.l[i] ^ b.l[i];
        }
        return r;
    }
};

template <std::size_t W>
inline int weight(const Packed<W>& p) {
    int w = 0;
    for (std::size_t i = 0; i < W; ++i) w += std::popcount(p.h[i] | p.l[i]);
    return w;
}

template <std::size_t W>
inline int masked_weight(const Packed<W>& p, const std::array<std::uint64_t, W>& mask) {
    int w = 0;
    for (std::size_t i = 0; i < W; ++i) w += std::popcount((p.h[i] | p.l[i]) & mask[i]);
    return w;
}

template <std::size_t W>
inline Packed<W> pack(const Gf4Vector& v) {
    Packed<W> p;
    for (std::size_t i = 0; i < W && i < v.num_words(); ++i) {
        p.h[i] = v.hi()[i];
        p.l[i] = v.lo()[i];
    }
    return p;
}

template <std::size_t W>
inline Gf4Vector unpack(const Packed<W>& p, std::size_t n) {
    return Gf4Vector::from_planes(n, p.h, p.l);
}

/// Calls f(std::integral_constant<size_t, W>) for the smallest supported W >= words.
template <class F>
decltype(auto) dispatch_words(std::size_t n, F&& f) {
    const std::size_t words = Gf4Vector::words_for(n);
    switch (words) {
        case 0:
        case 1:
            return f(std::integral_constant<std::size_t, 1>{});
        case 2:
            return f(std::integral_constant<std::size_t, 2>{});
        case 3:
        case 4:
            return f(std::integral_constant<std::size_t, 4>{});
        default:
            throw std::invalid_argument("weight enumeration supports lengths up to 256");
    }
}

template <class Fn>
void run_workers(unsigned workers, Fn&& fn) {
    if (workers <= 1) {
        fn(0u, 1u);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            try {
                fn(t, workers);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Generator rows together with their w- and v-multiples, laid out as mult[3*i + c].
template <std::size_t W>
std::vector<Packed<W>> scaled_rows(const std::vector<Gf4Vector>& rows) {
    std::vector<Packed<W>> m;
    m.reserve(3 * rows.size());
    for (const auto& r : rows)
        for (Gf4 s : kNonzero) m.push_back(pack<W>(r.scaled(s)));
    return m;
}

template <std::size_t W, class Visit>
bool enumerate_tail(const Packed<W>* mult, std::size_t k, std::size_t start, int t, const Packed<W>& cur,
                    Visit& visit) {
    if (t == 1) {
        for (std::size_t i = start; i < k; ++i) {
            const Packed<W>* m = mult + 3 * i;
            if (!visit(cur ^ m[0]) || !visit(cur ^ m[1]) || !visit(cur ^ m[2])) return false;
        }
        return true;
    }
    for (std::size_t i = start; i + t <= k; ++i) {
        const Packed<W>* m = mult + 3 * i;
        for (int c = 0; c < 3; ++c)
            if (!enumerate_tail<W>(mult, k, i + 1, t - 1, cur ^ m[c], visit)) return false;
    }
    return true;
}

/// Visits u*G for every u of weight exactly t whose first nonzero entry is 1.
/// Work is split by the position of that leading entry (lead % parts == part).
/// `visit` returns false to abort; the function then returns false.
template <std::size_t W, class Visit>
bool enumerate_projective(const std::vector<Packed<W>>& mult, int t, unsigned part, unsigned parts,
                          Visit& visit) {
    const std::size_t k = mult.size() / 3;
    if (t < 1 || static_cast<std::size_t>(t) > k) return true;
    for (std::size_t lead = 0; lead + t <= k; ++lead) {
        if (lead % parts != part) continue;
        const Packed<W>& cur = mult[3 * lead];
        if (t == 1) {
            if (!visit(cur)) return false;
        } else if (!enumerate_tail<W>(mult.data(), k, lead + 1, t - 1, cur, visit)) {
            return false;
        }
    }
    return true;
}

inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 v = 1;
    for (std::uint64_t i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// One member of a chain of disjoint information sets.
struct InfoSet {
    /// Coordinates of the set; row i of `rows` is 1 at columns[i] and 0 at the other columns.
    std::vector<std::size_t> columns;
    /// k generator rows; rows rank..k-1 vanish on `columns`.
    std::vector<Gf4Vector> rows;
    std::size_t rank = 0;

    std::size_t defect() const { return rows.size() - rank; }
};

/// Splits the coordinates greedily into disjoint information sets by repeated
/// Gaussian elimination on the columns not yet used.
inline std::vector<InfoSet> disjoint_info_sets(const LinearCode& code) {
    std::vector<InfoSet> sets;
    const std::size_t n = code.length(), k = code.dimension();
    if (k == 0) return sets;
    std::vector<bool> used(n, false);
    std::vector<Gf4Vector> rows = code.rows();
    while (true) {
        std::size_t rank = 0;
        std::vector<std::size_t> cols;
        for (std::size_t col = 0; col < n && rank < k; ++col) {
            if (used[col]) continue;
            std::size_t r = rank;
            while (r < k && rows[r][col].is_zero()) ++r;
            if (r == k) continue;
            std::swap(rows[r], rows[rank]);
            const Gf4 p = rows[rank][col];
            if (p != Gf4::one()) rows[rank] = rows[rank].scaled(p.inverse());
            for (std::size_t i = 0; i < k; ++i)
                if (i != rank && !rows[i][col].is_zero()) rows[i].add_scaled(rows[rank], rows[i][col]);
            cols.push_back(col);
            ++rank;
        }
        if (rank == 0) break;
        for (auto c : cols) used[c] = true;
        sets.push_back(InfoSet{cols, rows, rank});
    }
    return sets;
}

/// Full weight distribution by walking all 4^k codewords.
/// Throws BudgetExceeded when the time budget runs out.
inline WeightReport min_weight_exhaustive(const LinearCode& code, const EnumerationBudget& budget = {}) {
    detail::Stopwatch clock;
    WeightReport rep;
    rep.n = code.length();
    rep.k = code.dimension();
    rep.method = WeightMethod::exhaustive;
    const std::size_t k = code.dimension();
    if (2 * k > 62) throw BudgetExceeded("exhaustive enumeration needs k <= 31");
    std::vector<std::uint64_t> hist = detail::dispatch_words(code.length(), [&](auto wc) {
        constexpr std::size_t W = decltype(wc)::value;
        using P = detail::Packed<W>;
        std::vector<P> gens;
        for (const auto& r : code.rows()) {
            gens.push_back(detail::pack<W>(r));
            gens.push_back(detail::pack<W>(r.scaled(Gf4::omega())));
        }
        const std::size_t bits = gens.size();
        // Chunks of at most 2^20 words keep the deadline check responsive.
        const std::size_t low = std::min<std::size_t>(bits, 20);
        const std::size_t top = bits - low;
        const std::uint64_t chunks = std::uint64_t{1} << top;
        const std::uint64_t steps = std::uint64_t{1} << low;
        const unsigned workers = budget.worker_count();
        std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(code.length() + 1, 0));
        std::atomic<bool> timed_out{false};
        detail::run_workers(workers, [&](unsigned part, unsigned parts) {
            auto& h = partial[part];
            for (std::uint64_t chunk = part; chunk < chunks; chunk += parts) {
                if (timed_out.load(std::memory_order_relaxed)) return;
                if (clock.seconds() > budget.max_seconds) {
                    timed_out = true;
                    return;
                }
                P cur;
                for (std::size_t b = 0; b < top; ++b)
                    if (chunk >> b & 1) cur = cur ^ gens[low + b];
                ++h[detail::weight(cur)];
                for (std::uint64_t i = 1; i < steps; ++i) {
                    cur = cur ^ gens[std::countr_zero(i)];
                    ++h[detail::weight(cur)];
                }
            }
        });
        if (timed_out) throw BudgetExceeded("exhaustive enumeration exceeded its time budget");
        std::vector<std::uint64_t> total(code.length() + 1, 0);
        for (const auto& h : partial)
            for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
        return total;
    });
    rep.min_weight = 0;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i]) rep.counts[static_cast<int>(i)] = hist[i];
        if (i > 0 && hist[i] && rep.min_weight == 0) rep.min_weight = static_cast<int>(i);
    }
    rep.lower_bound = rep.min_weight;
    rep.certified = true;
    if (rep.min_weight > 0) {
        // Recover one witness of minimum weight cheaply.
        for (const auto& r : code.rows())
            if (static_cast<int>(r.weight()) == rep.min_weight) rep.witness = r;
    }
    rep.elapsed_seconds = clock.seconds();
    return rep;
}

struct MinWeightOptions {
    EnumerationBudget budget;
    /// Stop as soon as a nonzero codeword of weight < reject_below is seen.
    int reject_below = 0;
    /// Stop as soon as the proven lower bound reaches accept_at.
    int accept_at = INT_MAX;
};

struct MinWeightOutcome {
    int best = INT_MAX;  // lightest nonzero codeword seen
    int lower_bound = 0;
    bool certified = false;  // lower_bound >= best
    bool timed_out = false;
    int window = 0;  // largest information-window weight fully processed on every set
    Gf4Vector witness;
};

namespace detail {

template <std::size_t W>
MinWeightOutcome search_min_weight_impl(const LinearCode& code, const std::vector<InfoSet>& sets,
                                        const MinWeightOptions& opt) {
    Stopwatch clock;
    MinWeightOutcome out;
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    if (k == 0) {
        out.best = 0;
        out.certified = true;
        return out;
    }
    std::vector<std::vector<Packed<W>>> mults;
    for (const auto& s : sets) mults.push_back(scaled_rows<W>(s.rows));
    Packed<W> best_word;

    auto bound = [&](int t, std::size_t upto) {
        int lb = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const int done = i <= upto ? t : t - 1;  // window fully enumerated on set i
            lb += std::max(0, done + 1 - static_cast<int>(sets[i].defect()));
        }
        return lb;
    };
    out.lower_bound = bound(0, SIZE_MAX);
    if (sets.size() == 1 && sets[0].rank == k && out.lower_bound < 1) out.lower_bound = 1;
    const unsigned workers = opt.budget.worker_count();
    const int tmax = std::min<int>(static_cast<int>(k), opt.budget.max_window_weight);
    for (int t = 1; t <= tmax; ++t) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            const int defect = static_cast<int>(sets[j].defect());
            const bool gains = t + 1 - defect > 0;
            const bool last_full = j == 0 && t == static_cast<int>(k);
            if (!gains && !last_full) continue;
            std::vector<int> best(workers, out.best);
            std::vector<Packed<W>> bw(workers);
            std::atomic<bool> stop{false};
            std::atomic<bool> timed_out{false};
            run_workers(workers, [&](unsigned part, unsigned parts) {
                int local = best[part];
                std::uint64_t tick = 0;
                auto visit = [&](const Packed<W>& x) {
                    const int w = weight(x);
                    if (w < local) {
                        local = w;
                        bw[part] = x;
                        if (w < opt.reject_below) {
                            stop = true;
                            return false;
                        }
                    }
                    if ((++tick & 0xFFFFF) == 0) {
                        if (stop.load(std::memory_order_relaxed)) return false;
                        if (clock.seconds() > opt.budget.max_seconds) {
                            timed_out = true;
                            stop = true;
                            return false;
                        }
                    }
                    return true;
                };
                enumerate_projective<W>(mults[j], t, part, parts, visit);
                best[part] = local;
            });
            for (unsigned p = 0; p < workers; ++p)
                if (best[p] < out.best) {
                    out.best = best[p];
                    best_word = bw[p];
                }
            if (timed_out) {
                out.timed_out = true;
                out.witness = unpack<W>(best_word, n);
                return out;
            }
            if (stop) {  // rejected
                out.witness = unpack<W>(best_word, n);
                return out;
            }
            out.lower_bound = std::max(out.lower_bound, bound(t, j));
            if (last_full && sets[0].rank == k) out.lower_bound = std::max(out.lower_bound, out.best);
            if (out.lower_bound >= out.best || out.lower_bound >= opt.accept_at) {
                out.certified = out.lower_bound >= out.best;
                if (out.certified) out.lower_bound = out.best;
                out.window = j + 1 == sets.size() ? t : t - 1;
                out.witness = unpack<W>(best_word, n);
                return out;
            }
        }
        out.window = t;
    }
    out.witness = unpack<W>(best_word, n);
    out.timed_out = tmax < static_cast<int>(k);
    return out;
}

}  // namespace detail

/// Brouwer-Zimmermann style minimum-weight search with early exits.
inline MinWeightOutcome search_min_weight(const LinearCode& code, const MinWeightOptions& opt = {}) {
    const auto sets = disjoint_info_sets(code);
    return detail::dispatch_words(code.length(), [&](auto wc) {
        return detail::search_min_weight_impl<decltype(wc)::value>(code, sets, opt);
    });
}

/// Certified minimum weight by information-set enumeration. If the budget
/// runs out the report carries the best weight seen with certified = false.
inline WeightReport min_weight_info_set(const LinearCode& code, const EnumerationBudget& budget = {}) {
    detail::Stopwatch clock;
    MinWeightOptions opt;
    opt.budget = budget;
    const auto o = search_min_weight(code, opt);
    WeightReport rep;
    rep.n = code.length();
    rep.k = code.dimension();
    rep.method = WeightMethod::info_set;
    rep.min_weight = o.best == INT_MAX ? 0 : o.best;
    rep.lower_bound = o.lower_bound;
    rep.certified = o.certified;
    rep.witness = o.witness;
    rep.counts[0] = 1;
    rep.elapsed_seconds = clock.seconds();
    return rep;
}

namespace detail {

/// Visits every projective class of nonzero codewords of weight <= wmax exactly
/// once, as visit(part, word, weight). Uses only full-rank information sets;
/// a word is attributed to the first set on which its restriction is light.
template <std::size_t W, class MakeVisitor>
void for_each_light_word(const LinearCode& code, int wmax, const EnumerationBudget& budget,
                         MakeVisitor&& make_visitor) {
    Stopwatch clock;
    std::vector<InfoSet> full;
    for (auto& s : disjoint_info_sets(code))
        if (s.defect() == 0) full.push_back(std::move(s));
    if (full.empty() || wmax < 1) return;
    const int k = static_cast<int>(code.dimension());
    const int m = static_cast<int>(full.size());
    // sum_j (p_j + 1) > wmax guarantees that every word of weight <= wmax is caught.
    std::vector<int> p(m);
    const int need = wmax + 1;
    for (int j = 0; j < m; ++j) p[j] = std::min(k, need / m + (j < need % m ? 1 : 0) - 1);
    if (p[0] > budget.max_window_weight) throw BudgetExceeded("information window exceeds max_window_weight");
    std::vector<std::array<std::uint64_t, W>> masks(m);
    for (int j = 0; j < m; ++j) {
        masks[j].fill(0);
        for (auto c : full[j].columns) masks[j][c >> 6] |= std::uint64_t{1} << (c & 63);
    }
    const unsigned workers = budget.worker_count();
    for (int j = 0; j < m; ++j) {
        const auto mult = scaled_rows<W>(full[j].rows);
        for (int t = 1; t <= p[j]; ++t) {
            std::atomic<bool> timed_out{false};
            run_workers(workers, [&](unsigned part, unsigned parts) {
                auto&& sink = make_visitor(part);
                std::uint64_t tick = 0;
                auto visit = [&](const Packed<W>& x) {
                    const int w = weight(x);
                    if (w <= wmax) {
                        bool earlier = false;
                        for (int i = 0; i < j && !earlier; ++i) earlier = masked_weight(x, masks[i]) <= p[i];
                        if (!earlier) sink(x, w);
                    }
                    if ((++tick & 0xFFFFFF) == 0 && clock.seconds() > budget.max_seconds) {
                        timed_out = true;
                        return false;
                    }
                    return true;
                };
                enumerate_projective<W>(mult, t, part, parts, visit);
            });
            if (timed_out) throw BudgetExceeded("word counting exceeded its time budget");
        }
    }
}

}  // namespace detail

/// Exact A_w for each requested weight w.
inline std::map<int, std::uint64_t> count_words(const LinearCode& code, const std::vector<int>& weights,
                                                const EnumerationBudget& budget = {}) {
    std::map<int, std::uint64_t> out;
    int wmax = 0;
    for (int w : weights) {
        if (w < 0 || static_cast<std::size_t>(w) > code.length())
            throw std::invalid_argument("count_words: weight out of range");
        out[w] = w == 0 ? 1 : 0;
        wmax = std::max(wmax, w);
    }
    if (wmax == 0 || code.dimension() == 0) return out;
    const unsigned workers = budget.worker_count();
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(wmax + 1, 0));
    detail::dispatch_words(code.length(), [&](auto wc) {
        constexpr std::size_t W = decltype(wc)::value;
        detail::for_each_light_word<W>(code, wmax, budget, [&](unsigned part) {
            auto* h = partial[part].data();
            return [h](const detail::Packed<W>&, int w) { ++h[w]; };
        });
    });
    for (auto& [w, cnt] : out) {
        if (w == 0) continue;
        std::uint64_t s = 0;
        for (const auto& h : partial) s += h[w];
        cnt = 3 * s;
    }
    return out;
}

/// All codewords of weight in [wmin, wmax], each scaled so its first nonzero
/// symbol is 1, sorted. The full set of words is the returned set times {1, w, v}.
inline std::vector<Gf4Vector> light_words(const LinearCode& code, int wmin, int wmax,
                                          const EnumerationBudget& budget = {}) {
    const unsigned workers = budget.worker_count();
    std::vector<std::vector<Gf4Vector>> partial(workers);
    detail::dispatch_words(code.length(), [&](auto wc) {
        constexpr std::size_t W = decltype(wc)::value;
        detail::for_each_light_word<W>(code, wmax, budget, [&](unsigned part) {
            auto* out = &partial[part];
            const std::size_t n = code.length();
            return [out, n, wmin](const auto& x, int w) {
                if (w >= wmin) out->push_back(detail::unpack(x, n).normalized());
            };
        });
    });
    std::vector<Gf4Vector> all;
    for (auto& p : partial) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end());
    return all;
}

/// Minimum weight (certified) together with exact counts at the requested weights.
inline WeightReport weight_report(const LinearCode& code, const std::vector<int>& weights,
                                  const EnumerationBudget& budget = {}) {
    detail::Stopwatch clock;
    WeightReport rep = min_weight_info_set(code, budget);
    if (!weights.empty()) {
        auto c = count_words(code, weights, budget);
        rep.counts.insert(c.begin(), c.end());
    }
    rep.elapsed_seconds = clock.seconds();
    return rep;
}

}  // namespace qsd

#endif  // QSD_WEIGHT_TOOLS_HPP
