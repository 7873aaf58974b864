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

#ifndef QSD_GF4_HPP
#define QSD_GF4_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsd {

/// An element of the field with four elements {0, 1, w, v}, v = w^2 = w + 1.
///
/// Stored as two bits (hi, lo) holding the coordinates of the element in the
/// polynomial basis {w, 1}: 0 -> 00, 1 -> 01, w -> 10, v -> 11. Addition is
/// XOR of the encodings.
class Gf4 {
   public:
    constexpr Gf4() = default;

    static constexpr Gf4 from_bits(unsigned bits) {
        Gf4 x;
        x.bits_ = static_cast<std::uint8_t>(bits & 3u);
        return x;
    }
    static constexpr Gf4 zero() { return from_bits(0); }
    static constexpr Gf4 one() { return from_bits(1); }
    static constexpr Gf4 omega() { return from_bits(2); }
    static constexpr Gf4 omega_bar() { return from_bits(3); }

    /// Parses one of the characters `0`, `1`, `w`, `v`.
    static Gf4 from_char(char c) {
        switch (c) {
            case '0':
                return zero();
            case '1':
                return one();
            case 'w':
                return omega();
            case 'v':
                return omega_bar();
            default:
                throw std::invalid_argument(std::string("not a GF(4) symbol: '") + c + "'");
        }
    }

    constexpr char to_char() const { return "01wv"[bits_]; }
    constexpr unsigned bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    /// Frobenius conjugation x -> x^2. Fixes 0 and 1, swaps w and v.
    constexpr Gf4 conj() const { return from_bits(bits_ ^ (bits_ >> 1)); }

    constexpr Gf4 inverse() const {
        if (bits_ == 0) throw std::domain_error("inverse of zero in GF(4)");
        // x^-1 = x^2 on the multiplicative group of order 3.
        return conj();
    }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return from_bits(a.bits_ ^ b.bits_); }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        const unsigned ah = a.bits_ >> 1, al = a.bits_ & 1u;
        const unsigned bh = b.bits_ >> 1, bl = b.bits_ & 1u;
        const unsigned hi = (ah & bh) ^ (ah & bl) ^ (al & bh);
        const unsigned lo = (ah & bh) ^ (al & bl);
        return from_bits((hi << 1) | lo);
    }
    Gf4& operator+=(Gf4 o) { return *this = *this + o; }
    Gf4& operator*=(Gf4 o) { return *this = *this * o; }

    friend constexpr bool operator==(Gf4, Gf4) = default;
    /// Total order 0 < 1 < w < v, used for lexicographic canonical forms.
    friend constexpr auto operator<=>(Gf4 a, Gf4 b) { return a.bits_ <=> b.bits_; }

   private:
    std::uint8_t bits_ = 0;
};

/// The three nonzero elements, in the order 1, w, v.
inline constexpr Gf4 kNonzero[3] = {Gf4::one(), Gf4::omega(), Gf4::omega_bar()};

namespace planes {

// Bit-plane kernels. A symbol vector is a pair of words (hi, lo); each kernel
// acts on 64 symbols at once.

inline void scale(std::uint64_t& hi, std::uint64_t& lo, Gf4 s) {
    const std::uint64_t h = hi, l = lo;
    switch (s.bits()) {
        case 0:
            hi = lo = 0;
            break;
        case 1:
            break;
        case 2:  // w * (h w + l) = h w^2 + l w = (h ^ l) w + h
            hi = h ^ l;
            lo = h;
            break;
        default:  // v = w^2
            hi = l;
            lo = h ^ l;
            break;
    }
}

inline void mul(std::uint64_t ah, std::uint64_t al, std::uint64_t bh, std::uint64_t bl, std::uint64_t& hi,
                std::uint64_t& lo) {
    hi = (ah & bh) ^ (ah & bl) ^ (al & bh);
    lo = (ah & bh) ^ (al & bl);
}

}  // namespace planes

/// A vector over GF(4) stored as two word-packed bit planes.
///
/// Symbols beyond size() in the last word are always zero.
class Gf4Vector {
   public:
    Gf4Vector() = default;
    explicit Gf4Vector(std::size_t n) : n_(n), hi_(words_for(n), 0), lo_(words_for(n), 0) {}

    static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

    static Gf4Vector from_string(std::string_view s) {
        Gf4Vector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) v.set(i, Gf4::from_char(s[i]));
        return v;
    }

    static Gf4Vector from_symbols(std::span<const Gf4> symbols) {
        Gf4Vector v(symbols.size());
        for (std::size_t i = 0; i < symbols.size(); ++i) v.set(i, symbols[i]);
        return v;
    }

    static Gf4Vector from_planes(std::size_t n, std::span<const std::uint64_t> hi,
                                 std::span<const std::uint64_t> lo) {
        Gf4Vector v(n);
        for (std::size_t w = 0; w < v.hi_.size(); ++w) {
            v.hi_[w] = w < hi.size() ? hi[w] : 0;
            v.lo_[w] = w < lo.size() ? lo[w] : 0;
        }
        v.mask_tail();
        return v;
    }

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return hi_.size(); }

    Gf4 operator[](std::size_t i) const {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        const std::size_t w = i >> 6;
        return Gf4::from_bits(((hi_[w] & bit) ? 2u : 0u) | ((lo_[w] & bit) ? 1u : 0u));
    }

    void set(std::size_t i, Gf4 x) {
        if (i >= n_) throw std::out_of_range("Gf4Vector::set index out of range");
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        const std::size_t w = i >> 6;
        hi_[w] = (x.bits() & 2u) ? (hi_[w] | bit) : (hi_[w] & ~bit);
        lo_[w] = (x.bits() & 1u) ? (lo_[w] | bit) : (lo_[w] & ~bit);
    }

    std::span<const std::uint64_t> hi() const { return hi_; }
    std::span<const std::uint64_t> lo() const { return lo_; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::size_t i = 0; i < hi_.size(); ++i) w += std::popcount(hi_[i] | lo_[i]);
        return w;
    }

    bool is_zero() const {
        for (std::size_t i = 0; i < hi_.size(); ++i)
            if (hi_[i] | lo_[i]) return false;
        return true;
    }

    /// Index of the first nonzero symbol, or size() for the zero vector.
    std::size_t first_nonzero() const {
        for (std::size_t i = 0; i < hi_.size(); ++i) {
            const std::uint64_t s = hi_[i] | lo_[i];
            if (s) return i * 64 + static_cast<std::size_t>(std::countr_zero(s));
        }
        return n_;
    }

    Gf4Vector& operator+=(const Gf4Vector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < hi_.size(); ++i) {
            hi_[i] ^= o.hi_[i];
            lo_[i] ^= o.lo_[i];
        }
        return *this;
    }
    friend Gf4Vector operator+(Gf4Vector a, const Gf4Vector& b) { return a += b; }

    /// this += s * o
    void add_scaled(const Gf4Vector& o, Gf4 s) {
        check_same_size(o);
        for (std::size_t i = 0; i < hi_.size(); ++i) {
            std::uint64_t h = o.hi_[i], l = o.lo_[i];
            planes::scale(h, l, s);
            hi_[i] ^= h;
            lo_[i] ^= l;
        }
    }

    Gf4Vector scaled(Gf4 s) const {
        Gf4Vector r = *this;
        for (std::size_t i = 0; i < hi_.size(); ++i) planes::scale(r.hi_[i], r.lo_[i], s);
        return r;
    }

    /// Symbol-wise conjugate (x_i^2).
    Gf4Vector conj() const {
        Gf4Vector r = *this;
        for (std::size_t i = 0; i < hi_.size(); ++i) r.lo_[i] ^= r.hi_[i];
        return r;
    }

    /// Scales so that the first nonzero symbol is 1. The zero vector is returned unchanged.
    Gf4Vector normalized() const {
        const std::size_t f = first_nonzero();
        if (f == n_) return *this;
        return scaled((*this)[f].inverse());
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) s[i] = (*this)[i].to_char();
        return s;
    }

    friend bool operator==(const Gf4Vector& a, const Gf4Vector& b) {
        return a.n_ == b.n_ && a.hi_ == b.hi_ && a.lo_ == b.lo_;
    }

    /// Lexicographic symbol order (0 < 1 < w < v), shorter vectors first.
    friend std::strong_ordering operator<=>(const Gf4Vector& a, const Gf4Vector& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        for (std::size_t i = 0; i < a.n_; ++i) {
            if (auto c = a[i] <=> b[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
        for (std::size_t i = 0; i < hi_.size(); ++i) {
            h = (h ^ hi_[i]) * 0x100000001b3ull;
            h = (h ^ lo_[i]) * 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

   private:
    void check_same_size(const Gf4Vector& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Gf4Vector length mismatch");
    }
    void mask_tail() {
        if (n_ % 64 && !hi_.empty()) {
            const std::uint64_t m = (std::uint64_t{1} << (n_ % 64)) - 1;
            hi_.back() &= m;
            lo_.back() &= m;
        }
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> hi_, lo_;
};

namespace detail {

inline Gf4 sum_products(const Gf4Vector& x, const Gf4Vector& y, bool conjugate_y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner product length mismatch");
    unsigned ph = 0, pl = 0;
    const auto xh = x.hi(), xl = x.lo(), yh = y.hi(), yl = y.lo();
    for (std::size_t i = 0; i < xh.size(); ++i) {
        const std::uint64_t bh = yh[i];
        const std::uint64_t bl = conjugate_y ? (yl[i] ^ yh[i]) : yl[i];
        std::uint64_t h, l;
        planes::mul(xh[i], xl[i], bh, bl, h, l);
        ph ^= static_cast<unsigned>(std::popcount(h)) & 1u;
        pl ^= static_cast<unsigned>(std::popcount(l)) & 1u;
    }
    return Gf4::from_bits((ph << 1) | pl);
}

}  // namespace detail

/// <x, y>_H = sum x_i y_i^2.
inline Gf4 hermitian_inner(const Gf4Vector& x, const Gf4Vector& y) { return detail::sum_products(x, y, true); }

/// Euclidean form sum x_i y_i.
inline Gf4 euclidean_inner(const Gf4Vector& x, const Gf4Vector& y) { return detail::sum_products(x, y, false); }

/// Dense matrix over GF(4) stored as packed rows.
class Gf4Matrix {
   public:
    Gf4Matrix() = default;
    Gf4Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf4Vector(cols)) {}
    explicit Gf4Matrix(std::vector<Gf4Vector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
        for (const auto& r : rows_)
            if (r.size() != cols_) throw std::invalid_argument("Gf4Matrix: ragged rows");
    }
    static Gf4Matrix from_rows(std::vector<Gf4Vector> rows) {
        if (rows.empty()) throw std::invalid_argument("Gf4Matrix::from_rows: no rows");
        const std::size_t c = rows.front().size();
        return Gf4Matrix(std::move(rows), c);
    }
    static Gf4Matrix identity(std::size_t n) {
        Gf4Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, Gf4::one());
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    Gf4 at(std::size_t i, std::size_t j) const { return rows_.at(i)[j]; }
    void set(std::size_t i, std::size_t j, Gf4 x) { rows_.at(i).set(j, x); }
    const Gf4Vector& row(std::size_t i) const { return rows_.at(i); }
    Gf4Vector& row(std::size_t i) { return rows_.at(i); }
    const std::vector<Gf4Vector>& row_vectors() const { return rows_; }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.is_zero()) return false;
        return true;
    }

    friend Gf4Matrix operator*(const Gf4Matrix& a, const Gf4Matrix& b) {
        if (a.cols_ != b.rows()) throw std::invalid_argument("Gf4Matrix product: dimension mismatch");
        Gf4Matrix c(a.rows(), b.cols_);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const Gf4 s = a.rows_[i][j];
                if (!s.is_zero()) c.rows_[i].add_scaled(b.rows_[j], s);
            }
        return c;
    }

    friend Gf4Matrix operator+(const Gf4Matrix& a, const Gf4Matrix& b) {
        if (a.rows() != b.rows() || a.cols_ != b.cols_)
            throw std::invalid_argument("Gf4Matrix sum: dimension mismatch");
        Gf4Matrix c = a;
        for (std::size_t i = 0; i < a.rows(); ++i) c.rows_[i] += b.rows_[i];
        return c;
    }

    Gf4Matrix transpose() const {
        Gf4Matrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.rows_[j].set(i, rows_[i][j]);
        return t;
    }

    /// The matrix (a_ji^2).
    Gf4Matrix conj_transpose() const {
        Gf4Matrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.rows_[j].set(i, rows_[i][j].conj());
        return t;
    }

    /// [this | other]
    Gf4Matrix hstack(const Gf4Matrix& other) const {
        if (rows() != other.rows()) throw std::invalid_argument("hstack: row count mismatch");
        Gf4Matrix m(rows(), cols_ + other.cols_);
        for (std::size_t i = 0; i < rows(); ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m.rows_[i].set(j, rows_[i][j]);
            for (std::size_t j = 0; j < other.cols_; ++j) m.rows_[i].set(cols_ + j, other.rows_[i][j]);
        }
        return m;
    }

    /// [this ; other]
    Gf4Matrix vstack(const Gf4Matrix& other) const {
        if (cols_ != other.cols_) throw std::invalid_argument("vstack: column count mismatch");
        std::vector<Gf4Vector> r = rows_;
        r.insert(r.end(), other.rows_.begin(), other.rows_.end());
        return Gf4Matrix(std::move(r), cols_);
    }

    friend bool operator==(const Gf4Matrix& a, const Gf4Matrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

   private:
    std::size_t cols_ = 0;
    std::vector<Gf4Vector> rows_;
};

}  // namespace qsd

template <>
struct std::hash<qsd::Gf4Vector> {
    std::size_t operator()(const qsd::Gf4Vector& v) const noexcept { return v.hash(); }
};

#endif  // QSD_GF4_HPP
