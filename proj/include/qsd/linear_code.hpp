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

#ifndef QSD_LINEAR_CODE_HPP
#define QSD_LINEAR_CODE_HPP

#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsd/gf4.hpp"

namespace qsd {

/// Brings `rows` to reduced row-echelon form in place (pivots scaled to 1,
/// leftmost pivots first) and drops zero rows. Returns the pivot columns.
inline std::vector<std::size_t> reduce_to_rref(std::vector<Gf4Vector>& rows, std::size_t n) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t r = rank;
        while (r < rows.size() && rows[r][col].is_zero()) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[rank]);
        const Gf4 p = rows[rank][col];
        if (p != Gf4::one()) rows[rank] = rows[rank].scaled(p.inverse());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            const Gf4 s = rows[i][col];
            if (!s.is_zero()) rows[i].add_scaled(rows[rank], s);
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

/// A linear code over GF(4), stored by its reduced row-echelon generator.
///
/// Two codes compare equal iff their reduced generators are equal. The zero
/// code (k = 0) is representable so that duals of full spaces are defined.
class LinearCode {
   public:
    LinearCode() = default;

    static LinearCode from_generator(const Gf4Matrix& g) {
        if (g.rows() == 0 || g.is_zero()) throw std::invalid_argument("LinearCode: zero generator matrix");
        return from_rows(g.row_vectors(), g.cols());
    }

    static LinearCode from_rows(std::vector<Gf4Vector> rows, std::size_t n) {
        for (const auto& r : rows)
            if (r.size() != n) throw std::invalid_argument("LinearCode: row length mismatch");
        LinearCode c;
        c.n_ = n;
        c.pivots_ = reduce_to_rref(rows, n);
        c.rows_ = std::move(rows);
        return c;
    }

    static LinearCode zero(std::size_t n) {
        LinearCode c;
        c.n_ = n;
        return c;
    }

    static LinearCode full_space(std::size_t n) { return from_generator(Gf4Matrix::identity(n)); }

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return rows_.size(); }
    bool is_zero_code() const { return rows_.empty(); }
    const std::vector<Gf4Vector>& rows() const { return rows_; }
    Gf4Matrix generator() const { return Gf4Matrix(rows_, n_); }
    /// Pivot columns of the reduced generator; an information set.
    const std::vector<std::size_t>& info_set() const { return pivots_; }

    /// Reduces x against the generator; the result is zero iff x is a codeword.
    Gf4Vector residue(Gf4Vector x) const {
        if (x.size() != n_) throw std::invalid_argument("LinearCode: vector length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Gf4 s = x[pivots_[i]];
            if (!s.is_zero()) x.add_scaled(rows_[i], s);
        }
        return x;
    }

    bool contains(const Gf4Vector& x) const { return residue(x).is_zero(); }

    bool is_subcode_of(const LinearCode& other) const {
        if (other.n_ != n_) return false;
        for (const auto& r : rows_)
            if (!other.contains(r)) return false;
        return true;
    }

    /// Coefficients u with u * G = x for a codeword x (read off at the pivots).
    std::vector<Gf4> coordinates(const Gf4Vector& x) const {
        std::vector<Gf4> u(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) u[i] = x[pivots_[i]];
        return u;
    }

    Gf4Vector encode(std::span<const Gf4> u) const {
        if (u.size() != rows_.size()) throw std::invalid_argument("encode: message length mismatch");
        Gf4Vector x(n_);
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!u[i].is_zero()) x.add_scaled(rows_[i], u[i]);
        return x;
    }

    /// C^{perp_H} = {x : <x, y>_H = 0 for all y in C}. Computed as the
    /// conjugate of the Euclidean dual.
    LinearCode hermitian_dual() const {
        std::vector<bool> is_pivot(n_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<Gf4Vector> dual;
        for (std::size_t j = 0; j < n_; ++j) {
            if (is_pivot[j]) continue;
            Gf4Vector h(n_);
            h.set(j, Gf4::one());
            for (std::size_t i = 0; i < rows_.size(); ++i) h.set(pivots_[i], rows_[i][j]);  // -x = x
            dual.push_back(h.conj());
        }
        if (dual.empty()) return zero(n_);
        return from_rows(std::move(dual), n_);
    }

    bool is_hermitian_self_orthogonal() const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = i; j < rows_.size(); ++j)
                if (!hermitian_inner(rows_[i], rows_[j]).is_zero()) return false;
        return true;
    }

    /// C = C^{perp_H}, decided as self-orthogonality plus 2k = n.
    bool is_hermitian_self_dual() const {
        return !rows_.empty() && 2 * rows_.size() == n_ && is_hermitian_self_orthogonal();
    }

    /// Symbol-wise conjugate code (the Frobenius image).
    LinearCode conj() const {
        std::vector<Gf4Vector> r;
        for (const auto& x : rows_) r.push_back(x.conj());
        if (r.empty()) return zero(n_);
        return from_rows(std::move(r), n_);
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

   private:
    std::size_t n_ = 0;
    std::vector<Gf4Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// For a generator (I_n | M), M conj(M)^T = I_n implies Hermitian self-duality.
inline bool identity_criterion(const Gf4Matrix& m) {
    return m.rows() == m.cols() && m * m.conj_transpose() == Gf4Matrix::identity(m.rows());
}

// Code file format: a header line `n=<n> k=<k>` followed by k rows over {0,1,w,v}.

inline void write_code(std::ostream& out, const LinearCode& c) {
    out << "n=" << c.length() << " k=" << c.dimension() << "\n";
    for (const auto& r : c.rows()) out << r.to_string() << "\n";
}

inline std::string to_code_text(const LinearCode& c) {
    std::ostringstream s;
    write_code(s, c);
    return s.str();
}

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        return true;
    }
    return false;
}

}  // namespace detail

/// Reads every code record from `in`.
inline std::vector<LinearCode> read_codes(std::istream& in) {
    std::vector<LinearCode> out;
    std::string line;
    while (detail::next_content_line(in, line)) {
        std::size_t n = 0, k = 0;
        if (std::sscanf(line.c_str(), "n=%zu k=%zu", &n, &k) != 2)
            throw std::runtime_error("code file: expected header 'n=<n> k=<k>', got '" + line + "'");
        std::vector<Gf4Vector> rows;
        for (std::size_t i = 0; i < k; ++i) {
            if (!detail::next_content_line(in, line)) throw std::runtime_error("code file: truncated record");
            auto r = Gf4Vector::from_string(line);
            if (r.size() != n) throw std::runtime_error("code file: row has wrong length");
            rows.push_back(std::move(r));
        }
        LinearCode c = k == 0 ? LinearCode::zero(n) : LinearCode::from_rows(std::move(rows), n);
        if (c.dimension() != k) throw std::runtime_error("code file: rows are linearly dependent");
        out.push_back(std::move(c));
    }
    return out;
}

inline LinearCode parse_code(const std::string& text) {
    std::istringstream in(text);
    auto codes = read_codes(in);
    if (codes.size() != 1) throw std::runtime_error("expected exactly one code record");
    return codes.front();
}

}  // namespace qsd

#endif  // QSD_LINEAR_CODE_HPP
