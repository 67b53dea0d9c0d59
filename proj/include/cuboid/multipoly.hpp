/*
   Copyright 2026 The cuboid-quintic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CUBOID_MULTIPOLY_HPP
#define CUBOID_MULTIPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuboid/exact.hpp"

namespace cuboid {

/// The global symbol list. Monomials compare lexicographically in this order,
/// so term iteration (and therefore every rendering) is deterministic.
enum class Var : std::uint8_t { p, q, t, r, u, s, x, y, U, V, tau, w };

inline constexpr std::size_t kVarCount = 12;

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "p", "q", "t", "r", "u", "s", "x", "y", "U", "V", "tau", "w"};

inline constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }
inline constexpr std::string_view name_of(Var v) { return kVarNames[index_of(v)]; }

inline Var var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (kVarNames[i] == name) return static_cast<Var>(i);
    }
    throw std::domain_error("unknown variable: " + std::string(name));
}

/// Thrown by divexact when the divisor does not divide the dividend.
class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sparse multivariate polynomial over Rational.
///
/// Each value carries the set of variables it was declared over; arithmetic
/// takes the union, so operands are aligned by name automatically. Stored
/// terms never have zero coefficients, and terms iterate in descending lex
/// order (leading term first).
class MultiPoly {
public:
    using Monomial = std::array<std::uint16_t, kVarCount>;
    using Terms = std::map<Monomial, Rational, std::greater<>>;
    using VarMask = std::uint16_t;

    MultiPoly() = default;
    MultiPoly(Rational c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
    }
    MultiPoly(long long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(int c) : MultiPoly(Rational(c)) {}        // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Var v) {
        MultiPoly f;
        Monomial m{};
        m[index_of(v)] = 1;
        f.terms_.emplace(m, Rational(1));
        f.vars_ = bit(v);
        return f;
    }

    /// c * prod(v^e) over the given (variable, exponent) pairs.
    static MultiPoly term(Rational c, std::initializer_list<std::pair<Var, unsigned>> powers) {
        MultiPoly f;
        Monomial m{};
        for (auto [v, e] : powers) {
            m[index_of(v)] = static_cast<std::uint16_t>(m[index_of(v)] + e);
            f.vars_ |= bit(v);
        }
        if (!c.is_zero()) f.terms_.emplace(m, std::move(c));
        return f;
    }

    /// c * m, declaring every variable that occurs in m.
    static MultiPoly monomial(Rational c, const Monomial& m) {
        MultiPoly f;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (m[i] != 0) f.vars_ |= static_cast<VarMask>(1u << i);
        }
        if (!c.is_zero()) f.terms_.emplace(m, std::move(c));
        return f;
    }

    /// sum_k coeffs[k] * v^k
    static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& coeffs) {
        MultiPoly f;
        f.declare(v);
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            f = f * variable(v) + coeffs[k];
        }
        return f;
    }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    VarMask variables() const noexcept { return vars_; }
    bool declares(Var v) const noexcept { return (vars_ & bit(v)) != 0; }
    MultiPoly& declare(Var v) {
        vars_ |= bit(v);
        return *this;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
    }
    Rational constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned degree(Var v) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[index_of(v)]);
        return d;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) {
            unsigned s = 0;
            for (auto e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    /// Leading coefficient in the global lex order. Zero for the zero polynomial.
    Rational leading_coefficient() const {
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Coefficients of f as a polynomial in v, ascending degree. Each
    /// coefficient keeps the remaining declared variables.
    std::vector<MultiPoly> coefficients_in(Var v) const {
        std::vector<MultiPoly> out(degree(v) + 1);
        const auto rest = static_cast<VarMask>(vars_ & ~bit(v));
        for (auto& c : out) c.vars_ = rest;
        for (const auto& [m, c] : terms_) {
            Monomial k = m;
            const auto e = k[index_of(v)];
            k[index_of(v)] = 0;
            out[e].terms_.emplace(k, c);
        }
        return out;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        vars_ |= o.vars_;
        for (const auto& [m, c] : o.terms_) accumulate(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        vars_ |= o.vars_;
        for (const auto& [m, c] : o.terms_) accumulate(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        r.vars_ = a.vars_ | b.vars_;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (std::size_t i = 0; i < kVarCount; ++i)
                    m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
                r.accumulate(m, ca * cb);
            }
        }
        return r;
    }

    MultiPoly scaled(const Rational& k) const {
        if (k.is_zero()) {
            MultiPoly z;
            z.vars_ = vars_;
            return z;
        }
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c *= k;
        return r;
    }

    /// Equality of term maps; the declared variable sets are not compared.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Canonical rendering: terms in global monomial order, "coef*x^e*y^f".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c.sign() < 0;
            if (first) {
                if (negative) os << '-';
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            const Rational mag = negative ? -c : c;
            std::string mono;
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += kVarNames[i];
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) {
                os << mag.str();
            } else if (mag == Rational(1)) {
                os << mono;
            } else {
                os << mag.str() << '*' << mono;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << f.str(); }

private:
    static constexpr VarMask bit(Var v) { return static_cast<VarMask>(1u << index_of(v)); }

    void accumulate(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    VarMask vars_ = 0;
    Terms terms_;

    friend MultiPoly reverse_exponents(const MultiPoly&, std::initializer_list<std::pair<Var, unsigned>>);
};

inline MultiPoly var(Var v) { return MultiPoly::variable(v); }

/// f^e by repeated squaring. Negative exponents are a domain error.
inline MultiPoly pow(const MultiPoly& f, int e) {
    if (e < 0) throw std::domain_error("polynomial power with negative exponent");
    MultiPoly result(1);
    MultiPoly base = f;
    auto n = static_cast<unsigned>(e);
    while (n != 0) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    // Keep the declared variables even for e = 0.
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (f.declares(static_cast<Var>(i))) result.declare(static_cast<Var>(i));
    }
    return result;
}

/// Replace every occurrence of v in f by g, fully expanded (Horner in v).
inline MultiPoly substitute(const MultiPoly& f, Var v, const MultiPoly& g) {
    if (!f.declares(v)) throw std::domain_error("substitute: variable not in polynomial: " + std::string(name_of(v)));
    const auto coeffs = f.coefficients_in(v);
    MultiPoly result;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        result = result * g + coeffs[k];
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const auto w = static_cast<Var>(i);
        if (w != v && f.declares(w)) result.declare(w);
        if (g.declares(w)) result.declare(w);
    }
    return result;
}

using Assignment = std::map<Var, Rational>;

/// Exact value of f at a point. Every declared variable must be assigned.
inline Rational eval(const MultiPoly& f, const Assignment& at) {
    std::array<std::vector<Rational>, kVarCount> powers;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const auto v = static_cast<Var>(i);
        if (!f.declares(v)) continue;
        auto it = at.find(v);
        if (it == at.end()) throw std::domain_error("eval: missing value for variable " + std::string(name_of(v)));
        const unsigned d = f.degree(v);
        powers[i].reserve(d + 1);
        powers[i].emplace_back(1);
        for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * it->second);
    }
    Rational total;
    for (const auto& [m, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (m[i] != 0) term *= powers[i][m[i]];
        }
        total += term;
    }
    return total;
}

/// s^a * y^b * f(1/s, 1/y): each listed variable's exponent e becomes
/// (cap - e). Caps must be at least the degree in that variable.
inline MultiPoly reverse_exponents(const MultiPoly& f, std::initializer_list<std::pair<Var, unsigned>> caps) {
    MultiPoly r;
    r.vars_ = f.vars_;
    for (const auto& [m, c] : f.terms_) {
        MultiPoly::Monomial k = m;
        for (auto [v, cap] : caps) {
            if (k[index_of(v)] > cap) throw std::domain_error("reverse_exponents: cap below degree");
            k[index_of(v)] = static_cast<std::uint16_t>(cap - k[index_of(v)]);
        }
        r.terms_.emplace(k, c);
    }
    return r;
}

/// Exact quotient h with f = g*h. Throws NotDivisible otherwise.
inline MultiPoly divexact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("divexact by the zero polynomial");
    const auto& [lead_m, lead_c] = *g.terms().begin();
    MultiPoly quotient;
    MultiPoly rem = f;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        MultiPoly::Monomial qm;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (rm[i] < lead_m[i]) throw NotDivisible("not divisible: " + f.str() + " by " + g.str());
            qm[i] = static_cast<std::uint16_t>(rm[i] - lead_m[i]);
        }
        const MultiPoly step = MultiPoly::monomial(rc / lead_c, qm);
        quotient += step;
        rem -= step * g;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const auto v = static_cast<Var>(i);
        if (f.declares(v)) quotient.declare(v);
    }
    return quotient;
}

/// Positive rational c with f / c having coprime integer coefficients.
inline Rational content(const MultiPoly& f) {
    if (f.is_zero()) return Rational(0);
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = den_lcm / gcd(den_lcm, c.den()) * c.den();
    }
    return Rational(boost::multiprecision::abs(num_gcd), den_lcm);
}

}  // namespace cuboid

#endif  // CUBOID_MULTIPOLY_HPP
