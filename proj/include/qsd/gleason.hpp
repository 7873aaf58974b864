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

// Possible weight enumerators of Hermitian self-dual codes over GF(4).
//
// The enumerator of such a code of length n is
//   W(y) = sum_{j=0}^{floor(n/6)} a_j (1 + 3y^2)^{n/2 - 3j} (y^2 (1 - y^2)^2)^j.
// The j-th basis polynomial starts at y^{2j} with coefficient 1, so fixing
// A_0, A_2, ..., A_{2m} (m = floor(n/6)) gives a unit lower-triangular system
// for the a_j. Unknown counts A_d, A_{d+2}, ... are carried as free
// parameters, and every A_i comes out as an exact affine form in them.

#ifndef QSD_GLEASON_HPP
#define QSD_GLEASON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsd {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// c + sum_p coeff[p] * param_p with exact rational coefficients.
class ParamPoly {
   public:
    ParamPoly() = default;
    explicit ParamPoly(std::size_t params, BigRational c = 0) : constant_(std::move(c)), coeffs_(params, 0) {}

    static ParamPoly parameter(std::size_t params, std::size_t index) {
        ParamPoly p(params);
        p.coeffs_.at(index) = 1;
        return p;
    }

    std::size_t num_params() const { return coeffs_.size(); }
    const BigRational& constant() const { return constant_; }
    const BigRational& coeff(std::size_t i) const { return coeffs_.at(i); }

    bool is_integral() const {
        if (denominator(constant_) != 1) return false;
        for (const auto& c : coeffs_)
            if (denominator(c) != 1) return false;
        return true;
    }

    bool is_constant() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    BigRational evaluate(const std::vector<BigRational>& values) const {
        if (values.size() != coeffs_.size()) throw std::invalid_argument("ParamPoly: wrong number of values");
        BigRational v = constant_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * values[i];
        return v;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        check(o);
        constant_ += o.constant_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        check(o);
        constant_ -= o.constant_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const BigRational& s, ParamPoly p) {
        p.constant_ *= s;
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
    }

    /// e.g. "113963850 - 78 alpha - 15 beta".
    std::string to_string(const std::vector<std::string>& names) const {
        if (names.size() != coeffs_.size()) throw std::invalid_argument("ParamPoly: wrong number of names");
        std::ostringstream s;
        bool first = true;
        if (constant_ != 0 || is_constant()) {
            s << constant_;
            first = false;
        }
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigRational& c = coeffs_[i];
            if (c == 0) continue;
            const BigRational mag = c < 0 ? BigRational(-c) : c;
            if (first) {
                if (c < 0) s << "-";
            } else {
                s << (c < 0 ? " - " : " + ");
            }
            if (mag != 1) s << mag << " ";
            s << names[i];
            first = false;
        }
        return s.str();
    }

   private:
    void check(const ParamPoly& o) const {
        if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("ParamPoly: parameter count mismatch");
    }

    BigRational constant_ = 0;
    std::vector<BigRational> coeffs_;
};

/// Coefficients (index = power of y) of (1 + 3y^2)^{n/2 - 3j} (y^2 (1 - y^2)^2)^j.
inline std::vector<BigInt> expand_basis(int n, int j) {
    if (n < 0 || n % 2) throw std::invalid_argument("expand_basis: n must be even and nonnegative");
    if (j < 0 || j > n / 6) throw std::invalid_argument("expand_basis: j out of range");
    auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0)
                for (std::size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
        return c;
    };
    std::vector<BigInt> p{1};
    const std::vector<BigInt> f{1, 0, 3};               // 1 + 3y^2
    const std::vector<BigInt> g{0, 0, 1, 0, -2, 0, 1};  // y^2 (1 - y^2)^2
    for (int i = 0; i < n / 2 - 3 * j; ++i) p = mul(p, f);
    for (int i = 0; i < j; ++i) p = mul(p, g);
    p.resize(n + 1, 0);
    return p;
}

/// Thrown when no enumerator of the requested shape exists.
class InconsistentSystem : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct GleasonSolution {
    int n = 0;
    int d = 0;
    std::vector<std::string> params;
    /// a_0 .. a_{floor(n/6)}.
    std::vector<ParamPoly> a;
    /// A_0 .. A_n; odd entries are zero.
    std::vector<ParamPoly> weights;

    ParamPoly total() const {
        ParamPoly s(params.size());
        for (const auto& w : weights) s += w;
        return s;
    }

    /// CSV rows "weight,constant,<one column per parameter>" for the nonzero A_i.
    std::string to_csv() const {
        std::ostringstream s;
        s << "weight,constant";
        for (const auto& p : params) s << "," << p;
        s << "\n";
        for (std::size_t i = 0; i < weights.size(); ++i) {
            const ParamPoly& w = weights[i];
            if (w == ParamPoly(params.size())) continue;
            s << i << "," << w.constant();
            for (std::size_t p = 0; p < params.size(); ++p) s << "," << w.coeff(p);
            s << "\n";
        }
        return s.str();
    }
};

/// Number of free parameters, floor(n/6) + 1 - d/2 (negative when d is above the bound).
inline int gleason_free_parameters(int n, int d) { return n / 6 + 1 - d / 2; }

/// Solves for the possible enumerator with A_0 = 1, A_i = 0 for 0 < i < d and
/// the parameters standing for A_d, A_{d+2}, ... in order.
inline GleasonSolution solve_possible_enumerator(int n, int d, const std::vector<std::string>& params) {
    if (n < 2 || n % 2) throw std::invalid_argument("gleason: n must be even and >= 2");
    if (d < 2 || d % 2) throw std::invalid_argument("gleason: d must be even and >= 2");
    const int m = n / 6;
    const int free = gleason_free_parameters(n, d);
    if (free >= 0 && static_cast<int>(params.size()) != free)
        throw std::invalid_argument("gleason: expected " + std::to_string(free) + " parameter names");
    if (free < 0 && !params.empty()) throw std::invalid_argument("gleason: no parameters are free for this d");
    const std::size_t np = params.size();

    std::vector<std::vector<BigInt>> basis;
    for (int j = 0; j <= m; ++j) basis.push_back(expand_basis(n, j));

    // Prescribed A_{2i}, i = 0..m.
    std::vector<ParamPoly> target;
    for (int i = 0; i <= m; ++i) {
        if (i == 0)
            target.emplace_back(np, 1);
        else if (2 * i < d)
            target.emplace_back(np, 0);
        else
            target.push_back(ParamPoly::parameter(np, static_cast<std::size_t>(i - d / 2)));
    }
    // Forward substitution: A_{2i} = sum_{j <= i} a_j basis[j][2i], basis[i][2i] = 1.
    GleasonSolution sol;
    sol.n = n;
    sol.d = d;
    sol.params = params;
    for (int i = 0; i <= m; ++i) {
        ParamPoly r = target[i];
        for (int j = 0; j < i; ++j) r -= BigRational(basis[j][2 * i]) * sol.a[j];
        if (basis[i][2 * i] != 1) throw std::logic_error("gleason: basis is not unit lower triangular");
        sol.a.push_back(std::move(r));
    }
    sol.weights.assign(n + 1, ParamPoly(np));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j)
            if (basis[j][i] != 0) sol.weights[i] += BigRational(basis[j][i]) * sol.a[j];
    for (int i = 1; i < d && i <= n; ++i)
        if (!(sol.weights[i] == ParamPoly(np)))
            throw InconsistentSystem("gleason: no enumerator with minimum weight " + std::to_string(d) +
                                     " exists at length " + std::to_string(n));
    for (int i = 1; i <= n; i += 2)
        if (!(sol.weights[i] == ParamPoly(np))) throw std::logic_error("gleason: odd weight coefficient");
    for (const auto& w : sol.weights)
        if (!w.is_integral()) throw std::logic_error("gleason: non-integral weight coefficient");
    return sol;
}

struct BoundCheck {
    int bound = 0;
    bool within = false;
    bool extremal = false;
};

/// Compares d against 2 floor(n/6) + 2.
inline BoundCheck check_bound(int n, int d) {
    if (n < 2 || n % 2) throw std::invalid_argument("check_bound: n must be even and >= 2");
    BoundCheck b;
    b.bound = 2 * (n / 6) + 2;
    b.within = d <= b.bound;
    b.extremal = d == b.bound;
    return b;
}

}  // namespace qsd

#endif  // QSD_GLEASON_HPP
