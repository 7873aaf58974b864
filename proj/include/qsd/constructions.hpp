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

// Code constructions: modified four mu-circulant codes, cyclic codes,
// Construction X and double circulant codes, plus the one-line
// construction record format used by the CLI and the embedded datasets.

#ifndef QSD_CONSTRUCTIONS_HPP
#define QSD_CONSTRUCTIONS_HPP

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsd/circulant.hpp"
#include "qsd/gf4.hpp"
#include "qsd/linear_code.hpp"

namespace qsd {

// ---------------------------------------------------------------------------
// Polynomials over GF(4), dense, lowest degree first.

using Gf4Poly = std::vector<Gf4>;

inline void poly_trim(Gf4Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Degree of p, or -1 for the zero polynomial.
inline int poly_degree(Gf4Poly p) {
    poly_trim(p);
    return static_cast<int>(p.size()) - 1;
}

inline Gf4Poly poly_from_string(std::string_view s) {
    Gf4Poly p;
    for (char c : s) p.push_back(Gf4::from_char(c));
    return p;
}

inline std::string poly_to_string(const Gf4Poly& p) {
    std::string s;
    for (Gf4 c : p) s.push_back(c.to_char());
    return s;
}

/// Remainder of a modulo b.
inline Gf4Poly poly_mod(Gf4Poly a, Gf4Poly b) {
    poly_trim(a);
    poly_trim(b);
    if (b.empty()) throw std::invalid_argument("poly_mod: division by zero polynomial");
    const Gf4 lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const Gf4 f = a.back() * lead_inv;
        const std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] += f * b[i];
        poly_trim(a);
    }
    return a;
}

inline bool poly_divides(const Gf4Poly& d, const Gf4Poly& a) { return poly_degree(poly_mod(a, d)) < 0; }

/// x^n - 1.
inline Gf4Poly x_pow_minus_one(std::size_t n) {
    Gf4Poly p(n + 1);
    p[0] = Gf4::one();
    p[n] = Gf4::one();
    return p;
}

// ---------------------------------------------------------------------------
// Modified four mu-circulant codes.

/// The [4n, 2n] code with generator (I_2n | M), M = [[A, B], [conj(B)^T, conj(A)^T]].
struct ModifiedFourCirculantCode {
    Gf4 mu = Gf4::one();
    Gf4Vector row_a;
    Gf4Vector row_b;

    std::size_t block_size() const { return row_a.size(); }
    std::size_t length() const { return 4 * row_a.size(); }
    CirculantSpec a() const { return CirculantSpec(mu, row_a); }
    CirculantSpec b() const { return CirculantSpec(mu, row_b); }

    /// The 2n x 2n right half of the generator.
    Gf4Matrix block_matrix() const {
        const Gf4Matrix ma = materialize(a()), mb = materialize(b());
        const Gf4Matrix mbt = materialize(circ_conj_transpose(b()));
        const Gf4Matrix mat = materialize(circ_conj_transpose(a()));
        return ma.hstack(mb).vstack(mbt.hstack(mat));
    }

    Gf4Matrix generator() const { return Gf4Matrix::identity(2 * block_size()).hstack(block_matrix()); }
    LinearCode code() const { return LinearCode::from_generator(generator()); }

    friend bool operator==(const ModifiedFourCirculantCode&, const ModifiedFourCirculantCode&) = default;
};

inline ModifiedFourCirculantCode build_modified_four_circulant(Gf4 mu, const Gf4Vector& row_a,
                                                               const Gf4Vector& row_b) {
    if (mu.is_zero()) throw std::invalid_argument("modified four circulant: mu must be nonzero");
    if (row_a.size() != row_b.size() || row_a.size() == 0)
        throw std::invalid_argument("modified four circulant: rows must be nonempty and of equal length");
    return ModifiedFourCirculantCode{mu, row_a, row_b};
}

/// First row of A conj(A)^T, computed on first rows only.
inline Gf4Vector gram_row(Gf4 mu, const Gf4Vector& row) {
    const CirculantSpec a(mu, row);
    return circ_mul(a, circ_conj_transpose(a)).row;
}

/// A conj(A)^T + B conj(B)^T = I, which makes the code Hermitian self-dual.
inline bool is_self_dual_condition(Gf4 mu, const Gf4Vector& row_a, const Gf4Vector& row_b) {
    if (row_a.size() != row_b.size() || row_a.size() == 0)
        throw std::invalid_argument("self-dual condition: rows must be nonempty and of equal length");
    Gf4Vector s = gram_row(mu, row_a) + gram_row(mu, row_b);
    return s == identity_circulant(row_a.size(), mu).row;
}

inline bool is_self_dual_condition(const ModifiedFourCirculantCode& c) {
    return is_self_dual_condition(c.mu, c.row_a, c.row_b);
}

/// The pairs (wA, wB), (vA, vB), (B, A), (conj(A)^T, conj(B)^T) and (A, conj(B)^T);
/// each gives an equivalent code when the input is self-dual.
inline std::vector<ModifiedFourCirculantCode> equivalence_variants(const ModifiedFourCirculantCode& c) {
    const Gf4Vector at = circ_conj_transpose(c.a()).row;
    const Gf4Vector bt = circ_conj_transpose(c.b()).row;
    return {
        {c.mu, c.row_a.scaled(Gf4::omega()), c.row_b.scaled(Gf4::omega())},
        {c.mu, c.row_a.scaled(Gf4::omega_bar()), c.row_b.scaled(Gf4::omega_bar())},
        {c.mu, c.row_b, c.row_a},
        {c.mu, at, bt},
        {c.mu, c.row_a, bt},
    };
}

/// Scales both rows so that the first nonzero symbol of row_a is 1.
/// Leaves the pair unchanged when row_a is zero.
inline std::pair<Gf4Vector, Gf4Vector> canonicalize_leading_one(const Gf4Vector& row_a, const Gf4Vector& row_b) {
    const std::size_t i = row_a.first_nonzero();
    if (i >= row_a.size()) return {row_a, row_b};
    const Gf4 s = row_a[i].inverse();
    return {row_a.scaled(s), row_b.scaled(s)};
}

// ---------------------------------------------------------------------------
// Cyclic, Construction X, double circulant.

/// Cyclic code of length n generated by g, a divisor of x^n - 1.
inline LinearCode build_cyclic(std::size_t n, Gf4Poly g) {
    poly_trim(g);
    const int deg = poly_degree(g);
    if (deg < 0 || static_cast<std::size_t>(deg) >= n)
        throw std::invalid_argument("cyclic code: generator degree must lie in [0, n)");
    if (!poly_divides(g, x_pow_minus_one(n)))
        throw std::invalid_argument("cyclic code: generator does not divide x^n - 1");
    std::vector<Gf4Vector> rows;
    for (std::size_t s = 0; s + deg < n; ++s) {
        Gf4Vector r(n);
        for (int i = 0; i <= deg; ++i) r.set(s + i, g[i]);
        rows.push_back(std::move(r));
    }
    return LinearCode::from_rows(std::move(rows), n);
}

/// Construction X for c1 inside c2: rows of c1 are extended by zeros and
/// representatives of a basis of c2/c1 are extended by the rows of aux.
inline LinearCode construction_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& aux) {
    if (c1.length() != c2.length()) throw std::invalid_argument("construction X: c1 and c2 differ in length");
    if (!c1.is_subcode_of(c2)) throw std::invalid_argument("construction X: c1 is not a subcode of c2");
    if (aux.dimension() != c2.dimension() - c1.dimension())
        throw std::invalid_argument("construction X: aux dimension must equal dim(c2) - dim(c1)");
    const std::size_t n = c1.length(), m = aux.length(), total = n + m;
    auto extend = [&](const Gf4Vector& x, const Gf4Vector* tail) {
        Gf4Vector y(total);
        for (std::size_t i = 0; i < n; ++i) y.set(i, x[i]);
        if (tail)
            for (std::size_t i = 0; i < m; ++i) y.set(n + i, (*tail)[i]);
        return y;
    };
    std::vector<Gf4Vector> rows;
    for (const auto& r : c1.rows()) rows.push_back(extend(r, nullptr));
    // Coset representatives: rows of c2 that stay independent modulo c1.
    std::vector<Gf4Vector> span = c1.rows();
    std::size_t next_aux = 0;
    for (const auto& r : c2.rows()) {
        if (next_aux == aux.dimension()) break;
        std::vector<Gf4Vector> trial = span;
        trial.push_back(r);
        if (reduce_to_rref(trial, n).size() == span.size()) continue;
        span.push_back(r);
        rows.push_back(extend(r, &aux.rows()[next_aux++]));
    }
    if (rows.empty()) return LinearCode::zero(total);
    return LinearCode::from_rows(std::move(rows), total);
}

/// The [2n, n] code with generator (I_n | R), R the circulant with the given first row.
inline LinearCode build_double_circulant(const Gf4Vector& row) {
    const Gf4Matrix r = materialize(CirculantSpec(Gf4::one(), row));
    return LinearCode::from_generator(Gf4Matrix::identity(row.size()).hstack(r));
}

// ---------------------------------------------------------------------------
// Construction records:
//   type=m4c mu=<s> rA=<symbols> rB=<symbols>
//   type=cyclic n=<n> g=<symbols, lowest degree first>
//   type=dcirc row=<symbols>

struct ConstructionRecord {
    enum class Kind { four_circulant, cyclic, double_circulant };
    Kind kind = Kind::four_circulant;
    Gf4 mu = Gf4::one();
    Gf4Vector row_a, row_b;  // four_circulant
    std::size_t n = 0;       // cyclic
    Gf4Poly g;               // cyclic
    Gf4Vector row;           // double_circulant

    LinearCode build() const {
        switch (kind) {
            case Kind::four_circulant:
                return build_modified_four_circulant(mu, row_a, row_b).code();
            case Kind::cyclic:
                return build_cyclic(n, g);
            case Kind::double_circulant:
                return build_double_circulant(row);
        }
        throw std::logic_error("unknown construction kind");
    }

    ModifiedFourCirculantCode four_circulant() const {
        if (kind != Kind::four_circulant) throw std::logic_error("record is not a four-circulant construction");
        return build_modified_four_circulant(mu, row_a, row_b);
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::four_circulant:
                return std::string("type=m4c mu=") + mu.to_char() + " rA=" + row_a.to_string() +
                       " rB=" + row_b.to_string();
            case Kind::cyclic:
                return "type=cyclic n=" + std::to_string(n) + " g=" + poly_to_string(g);
            case Kind::double_circulant:
                return "type=dcirc row=" + row.to_string();
        }
        throw std::logic_error("unknown construction kind");
    }

    static ConstructionRecord four_circulant(Gf4 mu, Gf4Vector a, Gf4Vector b) {
        ConstructionRecord r;
        r.kind = Kind::four_circulant;
        r.mu = mu;
        r.row_a = std::move(a);
        r.row_b = std::move(b);
        return r;
    }

    friend bool operator==(const ConstructionRecord&, const ConstructionRecord&) = default;
};

/// Parses one record. Unknown keys are rejected.
inline ConstructionRecord parse_construction(const std::string& line) {
    std::istringstream in(line);
    std::string tok, type;
    std::vector<std::pair<std::string, std::string>> kv;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw std::runtime_error("construction record: bad token '" + tok + "'");
        kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    auto get = [&](const std::string& key) -> const std::string& {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        throw std::runtime_error("construction record: missing '" + key + "'");
    };
    auto expect_keys = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : kv) {
            bool ok = false;
            for (const char* key : keys) ok = ok || k == key;
            if (!ok) throw std::runtime_error("construction record: unexpected key '" + k + "'");
        }
    };
    type = get("type");
    ConstructionRecord r;
    if (type == "m4c") {
        expect_keys({"type", "mu", "rA", "rB"});
        const std::string& mu = get("mu");
        if (mu.size() != 1) throw std::runtime_error("construction record: mu must be one symbol");
        r = ConstructionRecord::four_circulant(Gf4::from_char(mu[0]), Gf4Vector::from_string(get("rA")),
                                               Gf4Vector::from_string(get("rB")));
        build_modified_four_circulant(r.mu, r.row_a, r.row_b);
    } else if (type == "cyclic") {
        expect_keys({"type", "n", "g"});
        r.kind = ConstructionRecord::Kind::cyclic;
        r.n = std::stoul(get("n"));
        r.g = poly_from_string(get("g"));
    } else if (type == "dcirc") {
        expect_keys({"type", "row"});
        r.kind = ConstructionRecord::Kind::double_circulant;
        r.row = Gf4Vector::from_string(get("row"));
        if (r.row.size() == 0) throw std::runtime_error("construction record: empty row");
    } else {
        throw std::runtime_error("construction record: unknown type '" + type + "'");
    }
    return r;
}

}  // namespace qsd

#endif  // QSD_CONSTRUCTIONS_HPP
