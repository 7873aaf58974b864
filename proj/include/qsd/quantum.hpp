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

// Additive codes over GF(4), the trace inner product and quantum code
// parameters.
//
// With x = x_h w + x_l written bitwise, x * y = sum_i (x_i conj(y_i) + conj(x_i) y_i)
// equals the symplectic form x_h . y_l + x_l . y_h over GF(2). An additive
// code is a GF(2)-subspace of GF(4)^n, handled here through its 2n-bit
// vectors.

#ifndef QSD_QUANTUM_HPP
#define QSD_QUANTUM_HPP

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsd/gf4.hpp"
#include "qsd/linear_code.hpp"
#include "qsd/weight_tools.hpp"

namespace qsd {

/// sum_i (x_i y_i^2 + x_i^2 y_i); always 0 or 1.
inline Gf4 trace_inner(const Gf4Vector& x, const Gf4Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("trace_inner: length mismatch");
    unsigned parity = 0;
    for (std::size_t i = 0; i < x.num_words(); ++i)
        parity ^= std::popcount((x.hi()[i] & y.lo()[i]) ^ (x.lo()[i] & y.hi()[i])) & 1;
    return parity ? Gf4::one() : Gf4::zero();
}

/// A GF(2)-linear code in GF(4)^n given by a GF(2) basis.
class AdditiveCode {
   public:
    AdditiveCode(std::size_t n, std::vector<Gf4Vector> generators) : n_(n) {
        for (const auto& g : generators)
            if (g.size() != n) throw std::invalid_argument("additive code: generator length mismatch");
        basis_ = reduce(std::move(generators));
    }

    /// The additive view of a linear code: every generator g contributes g and w g.
    static AdditiveCode from_linear(const LinearCode& c) {
        std::vector<Gf4Vector> gens;
        for (const auto& r : c.rows()) {
            gens.push_back(r);
            gens.push_back(r.scaled(Gf4::omega()));
        }
        return AdditiveCode(c.length(), std::move(gens));
    }

    std::size_t length() const { return n_; }
    /// GF(2) dimension; the code has 2^dimension() elements.
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Gf4Vector>& basis() const { return basis_; }

    bool contains(const Gf4Vector& x) const {
        std::vector<Gf4Vector> t = basis_;
        t.push_back(x);
        return reduce(std::move(t)).size() == basis_.size();
    }

    bool is_self_orthogonal() const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j)
                if (!trace_inner(basis_[i], basis_[j]).is_zero()) return false;
        return true;
    }

    /// C* = {x : x * c = 0 for all c in C}.
    AdditiveCode trace_dual() const {
        // Solve the GF(2) system <c, x> = 0 over the 2n unknown bits (h_0..h_{n-1}, l_0..l_{n-1}).
        const std::size_t m = 2 * n_;
        std::vector<std::vector<std::uint8_t>> rows;
        for (const auto& c : basis_) {
            std::vector<std::uint8_t> r(m, 0);
            for (std::size_t i = 0; i < n_; ++i) {
                const unsigned s = c[i].bits();
                r[i] = s & 1;         // c_l pairs with x_h
                r[n_ + i] = s >> 1;   // c_h pairs with x_l
            }
            rows.push_back(std::move(r));
        }
        std::vector<std::size_t> pivots;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
            std::size_t p = rank;
            while (p < rows.size() && !rows[p][col]) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[rank]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != rank && rows[i][col])
                    for (std::size_t k = 0; k < m; ++k) rows[i][k] ^= rows[rank][k];
            pivots.push_back(col);
            ++rank;
        }
        std::vector<bool> is_pivot(m, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<Gf4Vector> gens;
        for (std::size_t f = 0; f < m; ++f) {
            if (is_pivot[f]) continue;
            std::vector<std::uint8_t> x(m, 0);
            x[f] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][f];
            Gf4Vector v(n_);
            for (std::size_t i = 0; i < n_; ++i) v.set(i, Gf4::from_bits(static_cast<unsigned>(x[i] << 1 | x[n_ + i])));
            gens.push_back(std::move(v));
        }
        return AdditiveCode(n_, std::move(gens));
    }

   private:
    /// GF(2) row reduction of vectors viewed as 2n-bit strings; returns an independent spanning set.
    std::vector<Gf4Vector> reduce(std::vector<Gf4Vector> v) const {
        std::vector<Gf4Vector> out;
        std::vector<std::size_t> piv;  // bit index: plane * n + coordinate
        auto bit = [&](const Gf4Vector& x, std::size_t b) {
            const unsigned s = x[b % n_].bits();
            return b < n_ ? (s >> 1) & 1 : s & 1;
        };
        for (auto& x : v) {
            for (std::size_t i = 0; i < out.size(); ++i)
                if (bit(x, piv[i])) x += out[i];
            if (x.is_zero()) continue;
            std::size_t b = 0;
            while (!bit(x, b)) ++b;
            for (std::size_t i = 0; i < out.size(); ++i)
                if (bit(out[i], b)) out[i] += x;
            out.push_back(x);
            piv.push_back(b);
        }
        return out;
    }

    std::size_t n_;
    std::vector<Gf4Vector> basis_;
};

/// True iff the additive view of c equals its trace dual.
inline bool is_trace_self_dual(const LinearCode& c) {
    const AdditiveCode a = AdditiveCode::from_linear(c);
    return a.dimension() == c.length() && a.is_self_orthogonal();
}

struct QuantumParams {
    std::size_t n = 0;
    std::size_t k = 0;
    int d = 0;
    std::string source;

    std::string to_string() const {
        return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]";
    }
};

/// [[n, 0, d]] from a Hermitian self-dual code with certified minimum weight d.
inline QuantumParams quantum_from_self_dual(const LinearCode& c, const WeightReport& report) {
    if (!c.is_hermitian_self_dual()) throw std::invalid_argument("quantum: code is not Hermitian self-dual");
    if (!report.certified) throw std::invalid_argument("quantum: minimum weight is not certified");
    if (report.n != c.length() || report.k != c.dimension())
        throw std::invalid_argument("quantum: weight report does not belong to this code");
    if (!is_trace_self_dual(c)) throw std::logic_error("quantum: self-dual code fails the trace self-duality check");
    QuantumParams q;
    q.n = c.length();
    q.k = 0;
    q.d = report.min_weight;
    q.source = "Hermitian self-dual [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "," +
               std::to_string(report.min_weight) + "] code; additive self-dual (n,2^n) view; k = 0 rule; d " +
               (report.method == WeightMethod::exhaustive ? "by exhaustive enumeration" : "by information sets");
    return q;
}

/// Parameters of the stabilizer code of a trace self-orthogonal additive code,
/// by enumerating its trace dual. For k = 0 the distance is the minimum weight
/// of the code itself; otherwise it is the least weight in C* outside C.
/// Limited to trace duals with at most 2^24 elements.
inline QuantumParams quantum_from_self_orthogonal(const AdditiveCode& c) {
    if (!c.is_self_orthogonal()) throw std::invalid_argument("quantum: code is not trace self-orthogonal");
    const std::size_t n = c.length();
    const AdditiveCode dual = c.trace_dual();
    if (dual.dimension() > 24) throw std::invalid_argument("quantum: trace dual too large to enumerate");
    QuantumParams q;
    q.n = n;
    q.k = n - c.dimension();
    const bool k_zero = c.dimension() == n;
    int best = INT_MAX;
    const auto& g = dual.basis();
    Gf4Vector cur(n);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << g.size()); ++i) {
        cur += g[std::countr_zero(i)];
        const int w = static_cast<int>(cur.weight());
        if (w >= best || w == 0) continue;
        if (k_zero || !c.contains(cur)) best = w;
    }
    q.d = best == INT_MAX ? 0 : best;
    q.source = k_zero ? "additive self-dual code; minimum weight" : "additive self-orthogonal code; weight of C* \\ C";
    return q;
}

}  // namespace qsd

#endif  // QSD_QUANTUM_HPP
