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

#ifndef QSD_CIRCULANT_HPP
#define QSD_CIRCULANT_HPP

#include <stdexcept>

#include "qsd/gf4.hpp"

namespace qsd {

/// A mu-circulant matrix given by mu and its first row.
///
/// Row i+1 is row i shifted right by one position, the symbol that wraps
/// around to column 0 being multiplied by mu. Equivalently the matrix is
/// sum_i r_i E^i where E is the shift matrix with mu in its bottom-left corner.
struct CirculantSpec {
    Gf4 mu = Gf4::one();
    Gf4Vector row;

    CirculantSpec() = default;
    CirculantSpec(Gf4 mu_, Gf4Vector row_) : mu(mu_), row(std::move(row_)) {
        if (mu.is_zero()) throw std::invalid_argument("mu-circulant: mu must be nonzero");
        if (row.size() == 0) throw std::invalid_argument("mu-circulant: empty first row");
    }

    std::size_t size() const { return row.size(); }

    friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

/// Returns r * E, i.e. the next row of the mu-circulant matrix whose current row is r.
inline Gf4Vector shift_row(const Gf4Vector& r, Gf4 mu) {
    const std::size_t n = r.size();
    Gf4Vector out(n);
    out.set(0, mu * r[n - 1]);
    for (std::size_t i = 1; i < n; ++i) out.set(i, r[i - 1]);
    return out;
}

inline Gf4Vector shift_row(Gf4Vector r, Gf4 mu, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) r = shift_row(r, mu);
    return r;
}

inline Gf4Matrix materialize(const CirculantSpec& c) {
    const std::size_t n = c.size();
    std::vector<Gf4Vector> rows;
    rows.reserve(n);
    rows.push_back(c.row);
    for (std::size_t i = 1; i < n; ++i) rows.push_back(shift_row(rows.back(), c.mu));
    return Gf4Matrix(std::move(rows), n);
}

/// E_n(mu).
inline Gf4Matrix shift_matrix(std::size_t n, Gf4 mu) {
    Gf4Vector r(n);
    if (n == 1) {
        r.set(0, mu);
    } else {
        r.set(1, Gf4::one());
    }
    return materialize(CirculantSpec(mu, r));
}

inline CirculantSpec identity_circulant(std::size_t n, Gf4 mu) {
    Gf4Vector r(n);
    r.set(0, Gf4::one());
    return CirculantSpec(mu, r);
}

/// First row of the product AB of two mu-circulants: sum_i a_i * (row i of B).
inline CirculantSpec circ_mul(const CirculantSpec& a, const CirculantSpec& b) {
    if (a.size() != b.size() || a.mu != b.mu)
        throw std::invalid_argument("circ_mul: operands differ in size or mu");
    const std::size_t n = a.size();
    Gf4Vector acc(n);
    Gf4Vector brow = b.row;
    for (std::size_t i = 0; i < n; ++i) {
        const Gf4 s = a.row[i];
        if (!s.is_zero()) acc.add_scaled(brow, s);
        if (i + 1 < n) brow = shift_row(brow, b.mu);
    }
    return CirculantSpec(a.mu, acc);
}

inline CirculantSpec circ_add(const CirculantSpec& a, const CirculantSpec& b) {
    if (a.size() != b.size() || a.mu != b.mu)
        throw std::invalid_argument("circ_add: operands differ in size or mu");
    return CirculantSpec(a.mu, a.row + b.row);
}

/// First row of conj(A)^T: (r_0^2, (mu r_{n-1})^2, ..., (mu r_1)^2).
inline CirculantSpec circ_conj_transpose(const CirculantSpec& a) {
    const std::size_t n = a.size();
    Gf4Vector r(n);
    r.set(0, a.row[0].conj());
    for (std::size_t i = 1; i < n; ++i) r.set(i, (a.mu * a.row[n - i]).conj());
    return CirculantSpec(a.mu, r);
}

/// A E^s, whose first row is the first row of A shifted s times.
inline CirculantSpec circ_shift(const CirculantSpec& a, std::size_t s) {
    return CirculantSpec(a.mu, shift_row(a.row, a.mu, s));
}

}  // namespace qsd

#endif  // QSD_CIRCULANT_HPP
