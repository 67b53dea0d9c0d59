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

#ifndef CUBOID_EXACT_HPP
#define CUBOID_EXACT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cuboid {

/// Arbitrary-precision signed integer. Never overflows.
using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer ipow(const Integer& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline std::string to_string(const Integer& n) { return n.str(); }

inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("bad integer literal: " + std::string(text));
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9')
            throw std::invalid_argument("bad integer literal: " + std::string(text));
    }
    Integer v(std::string(text.substr(i)));
    return text[0] == '-' ? Integer(-v) : v;
}

/// Result of an integer square root: floor(sqrt(n)) and whether it is exact.
struct IsqrtResult {
    Integer root;
    bool exact = false;
};

/// Floor square root by Newton iteration with a final correction step.
/// Throws std::domain_error for negative input.
inline IsqrtResult isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of a negative integer");
    if (n < 2) return {n, true};

    // Start above the root: 2^ceil(bits/2) > sqrt(n).
    const auto bits = boost::multiprecision::msb(n) + 1;
    Integer x = Integer(1) << ((bits + 1) / 2);
    while (true) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    const bool exact = (x * x == n);
    return {std::move(x), exact};
}

/// Normalized fraction num/den with den > 0 and gcd(|num|, den) = 1.
/// Zero is 0/1, so equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
    Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_integer(text));
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Canonical "num/den" text, den omitted when 1.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return Rational(Integer(a.num_ + b.num_));
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return Rational(Integer(a.num_ - b.num_));
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return Rational(Integer(a.num_ * b.num_));
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const Integer lhs = a.num_ * b.den_;
        const Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ == 1) return;
        Integer g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

/// Negative exponents invert; 0^-k is a domain error.
inline Rational pow(const Rational& base, int exp) {
    const auto e = static_cast<unsigned>(exp < 0 ? -exp : exp);
    Rational r(ipow(base.num(), e), ipow(base.den(), e));
    return exp < 0 ? Rational(1) / r : r;
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact square root of a rational, if it has one.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    auto n = isqrt(q.num());
    if (!n.exact) return std::nullopt;
    auto d = isqrt(q.den());
    if (!d.exact) return std::nullopt;
    return Rational(std::move(n.root), std::move(d.root));
}

/// True iff q = c^2 for some rational c.
inline bool is_square_rational(const Rational& q) { return rational_sqrt(q).has_value(); }

}  // namespace cuboid

#endif  // CUBOID_EXACT_HPP
