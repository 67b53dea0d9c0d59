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

#ifndef CUBOID_UNIPOLY_HPP
#define CUBOID_UNIPOLY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/exact.hpp"
#include "cuboid/multipoly.hpp"

namespace cuboid {

/// Dense univariate polynomial with Integer coefficients, ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPolyZ {
public:
    UniPolyZ() = default;
    explicit UniPolyZ(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// Integer polynomial from a univariate MultiPoly in v. Throws if a
    /// coefficient is not an integer or another variable occurs.
    static UniPolyZ from_multipoly(const MultiPoly& f, Var v) {
        std::vector<Integer> c(f.degree(v) + 1);
        for (const auto& [m, k] : f.terms()) {
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (i != index_of(v) && m[i] != 0)
                    throw std::domain_error("from_multipoly: polynomial is not univariate");
            }
            if (!k.is_integer()) throw std::domain_error("from_multipoly: non-integer coefficient " + k.str());
            c[m[index_of(v)]] = k.num();
        }
        return UniPolyZ(std::move(c));
    }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const Integer& coefficient(std::size_t k) const {
        static const Integer zero = 0;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const Integer& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Integer operator()(const Integer& at) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }
    Rational operator()(const Rational& at) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Rational(*it);
        return acc;
    }

    MultiPoly to_multipoly(Var v) const {
        MultiPoly f;
        f.declare(v);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!coeffs_[k].is_zero())
                f += MultiPoly::term(Rational(coeffs_[k]), {{v, static_cast<unsigned>(k)}});
        }
        return f;
    }

    std::string str(Var v = Var::x) const { return to_multipoly(v).str(); }

    friend bool operator==(const UniPolyZ&, const UniPolyZ&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// numerator / denominator, both univariate in one variable. The common
/// rational content of the two parts is divided out and the denominator's
/// leading coefficient is positive.
class RationalFunction {
public:
    RationalFunction(MultiPoly numerator, MultiPoly denominator, Var v)
        : num_(std::move(numerator)), den_(std::move(denominator)), var_(v) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        num_.declare(v);
        den_.declare(v);
        normalize();
    }

    const MultiPoly& numerator() const noexcept { return num_; }
    const MultiPoly& denominator() const noexcept { return den_; }
    Var variable() const noexcept { return var_; }

    Rational numerator_at(const Rational& at) const { return eval(num_, {{var_, at}}); }
    Rational denominator_at(const Rational& at) const { return eval(den_, {{var_, at}}); }

    /// Value at a point, or nullopt where the denominator vanishes.
    std::optional<Rational> operator()(const Rational& at) const {
        Rational d = denominator_at(at);
        if (d.is_zero()) return std::nullopt;
        return numerator_at(at) / d;
    }

    /// Limit as the variable goes to infinity; nullopt when it diverges.
    std::optional<Rational> limit_at_infinity() const {
        const unsigned dn = num_.degree(var_);
        const unsigned dd = den_.degree(var_);
        if (num_.is_zero() || dn < dd) return Rational(0);
        if (dn > dd) return std::nullopt;
        return num_.coefficients_in(var_)[dn].constant_value() / den_.coefficients_in(var_)[dd].constant_value();
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_, a.var_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, a.var_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const Rational& c) {
        return {a.num_ - a.den_.scaled(c), a.den_, a.var_};
    }

    /// a/b == c/d checked as the polynomial identity a*d == c*b.
    friend bool cross_equal(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    void normalize() {
        Rational g = num_.is_zero() ? content(den_) : gcd_content(content(num_), content(den_));
        if (den_.leading_coefficient().sign() < 0) g = -g;
        if (g != Rational(1)) {
            const Rational inv = Rational(1) / g;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
            num_.declare(var_);
            den_.declare(var_);
        }
    }

    static Rational gcd_content(const Rational& a, const Rational& b) {
        // gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d)
        return Rational(gcd(a.num() * b.den(), b.num() * a.den()), a.den() * b.den());
    }

    MultiPoly num_;
    MultiPoly den_;
    Var var_;
};

}  // namespace cuboid

#endif  // CUBOID_UNIPOLY_HPP
