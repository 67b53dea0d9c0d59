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

#ifndef CUBOID_FAMILY_HPP
#define CUBOID_FAMILY_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuboid/check.hpp"
#include "cuboid/curve.hpp"
#include "cuboid/exact.hpp"
#include "cuboid/multipoly.hpp"
#include "cuboid/parallel.hpp"
#include "cuboid/resultant.hpp"
#include "cuboid/unipoly.hpp"

namespace cuboid {

/// Positive integer parameters of the second cuboid polynomial. The
/// excluded case p == q is constructible for control runs.
struct CuboidParams {
    Integer p;
    Integer q;

    static CuboidParams make(Integer p, Integer q) {
        if (p <= 0 || q <= 0) throw std::domain_error("cuboid parameters must be positive");
        return {std::move(p), std::move(q)};
    }

    bool coprime() const { return gcd(p, q) == 1; }
    bool excluded() const { return p == q; }
    Rational s() const { return Rational(p * p, q * q); }
};

namespace detail {

template <class R>
R power(const R& base, unsigned e) {
    R acc(1);
    for (unsigned k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

}  // namespace detail

/// Coefficients of Q_{p,q}(t): element k multiplies t^(2k).
template <class R>
std::array<R, 6> qpq_coefficients(const R& p, const R& q) {
    using detail::power;
    const R p2 = p * p;
    const R q2 = q * q;
    std::array<R, 6> c;
    c[5] = R(1);
    c[4] = (R(2) * q2 + p2) * (R(3) * q2 - R(2) * p2);
    c[3] = power(q, 8) + R(10) * p2 * power(q, 6) + R(4) * power(p, 4) * power(q, 4) -
           R(14) * power(p, 6) * q2 + power(p, 8);
    c[2] = R(0) - p2 * q2 *
                      (power(q, 8) - R(14) * p2 * power(q, 6) + R(4) * power(p, 4) * power(q, 4) +
                       R(10) * power(p, 6) * q2 + power(p, 8));
    c[1] = R(0) - power(p, 6) * power(q, 6) * (q2 + R(2) * p2) * (R(0) - R(2) * q2 + R(3) * p2);
    c[0] = R(0) - power(p, 10) * power(q, 10);
    return c;
}

/// Coefficients of the normalized Q_r(u): element k multiplies u^(2k).
template <class R>
std::array<R, 6> qr_coefficients(const R& r) {
    using detail::power;
    const R r2 = r * r;
    std::array<R, 6> c;
    c[5] = R(1);
    c[4] = (R(2) + r2) * (R(3) - R(2) * r2);
    c[3] = R(1) + R(10) * r2 + R(4) * power(r, 4) - R(14) * power(r, 6) + power(r, 8);
    c[2] = R(0) - r2 * (R(1) - R(14) * r2 + R(4) * power(r, 4) + R(10) * power(r, 6) + power(r, 8));
    c[1] = R(0) - power(r, 6) * (R(1) + R(2) * r2) * (R(0) - R(2) + R(3) * r2);
    c[0] = R(0) - power(r, 10);
    return c;
}

/// Coefficients of the monic quintic P_s(x): element k multiplies x^k.
template <class R>
std::array<R, 6> ps_coefficients(const R& s) {
    using detail::power;
    std::array<R, 6> c;
    c[5] = R(1);
    c[4] = (R(2) + s) * (R(3) - R(2) * s);
    c[3] = R(1) + R(10) * s + R(4) * power(s, 2) - R(14) * power(s, 3) + power(s, 4);
    c[2] = R(0) - s * (R(1) - R(14) * s + R(4) * power(s, 2) + R(10) * power(s, 3) + power(s, 4));
    c[1] = R(0) - power(s, 3) * (R(1) + R(2) * s) * (R(0) - R(2) + R(3) * s);
    c[0] = R(0) - power(s, 5);
    return c;
}

/// Q_{p,q}(t) as an even monic degree-10 integer polynomial.
inline UniPolyZ build_Qpq(const CuboidParams& params) {
    const auto c = qpq_coefficients<Integer>(params.p, params.q);
    std::vector<Integer> dense(11);
    for (std::size_t k = 0; k < 6; ++k) dense[2 * k] = c[k];
    return UniPolyZ(std::move(dense));
}

/// Q_{p,q}(t) with p, q symbolic.
inline MultiPoly build_Qpq_symbolic() {
    const auto c = qpq_coefficients<MultiPoly>(var(Var::p), var(Var::q));
    std::vector<MultiPoly> dense(11);
    for (std::size_t k = 0; k < 6; ++k) dense[2 * k] = c[k];
    return MultiPoly::from_coefficients(Var::t, dense);
}

/// Q_r(u) with r symbolic.
inline MultiPoly build_Qr_symbolic() {
    const auto c = qr_coefficients<MultiPoly>(var(Var::r));
    std::vector<MultiPoly> dense(11);
    for (std::size_t k = 0; k < 6; ++k) dense[2 * k] = c[k];
    return MultiPoly::from_coefficients(Var::u, dense).declare(Var::r);
}

/// P_s(x) with s symbolic.
inline MultiPoly build_Ps_symbolic() {
    const auto c = ps_coefficients<MultiPoly>(var(Var::s));
    return MultiPoly::from_coefficients(Var::x, {c.begin(), c.end()});
}

/// P_s(x) for a concrete s, univariate in x.
inline MultiPoly build_Ps(const Rational& s) {
    const auto c = ps_coefficients<Rational>(s);
    std::vector<MultiPoly> coeffs(c.begin(), c.end());
    return MultiPoly::from_coefficients(Var::x, coeffs);
}

/// F(s, y), the root equation of P_s after x = s*y and division by s^3.
inline MultiPoly build_F() {
    const MultiPoly s = var(Var::s);
    const MultiPoly y = var(Var::y);
    const auto S = [&](unsigned e) { return pow(s, static_cast<int>(e)); };
    const auto Y = [&](unsigned e) { return pow(y, static_cast<int>(e)); };
    return S(2) * Y(5) + (S(3).scaled(-2) - S(2) + s.scaled(6)) * Y(4) +
           (S(4) - S(3).scaled(14) + S(2).scaled(4) + s.scaled(10) + MultiPoly(1)) * Y(3) +
           (-S(4) - S(3).scaled(10) - S(2).scaled(4) + s.scaled(14) - MultiPoly(1)) * Y(2) +
           (S(3).scaled(-6) + S(2) + s.scaled(2)) * y - S(2);
}

/// G(U, V), the plane curve of inversion invariants U = s + 1/s, V = y + 1/y.
inline MultiPoly build_G() {
    const MultiPoly U = var(Var::U);
    const MultiPoly V = var(Var::V);
    const auto P = [&](const MultiPoly& b, int e) { return pow(b, e); };
    return P(V, 5) + (U.scaled(4) - MultiPoly(2)) * P(V, 4) +
           (P(U, 2).scaled(-10) - U.scaled(8) + MultiPoly(64)) * P(V, 3) +
           (P(U, 3).scaled(4) - P(U, 2).scaled(108) + MultiPoly(384)) * P(V, 2) +
           (P(U, 4) - P(U, 3).scaled(8) - P(U, 2).scaled(192) + MultiPoly(768)) * V +
           (P(U, 4).scaled(-2) - P(U, 2).scaled(128) + MultiPoly(512));
}

/// Integer polynomial in tau from ascending coefficients.
inline MultiPoly tau_poly(std::initializer_list<long long> ascending) {
    std::vector<MultiPoly> c;
    for (auto k : ascending) c.emplace_back(k);
    return MultiPoly::from_coefficients(Var::tau, c);
}

struct UVParam {
    RationalFunction U;
    RationalFunction V;
};

/// The rational parametrization of G = 0 by the slope tau of lines through (2, -2).
inline UVParam build_UV_param() {
    const MultiPoly tau = var(Var::tau);
    const MultiPoly sq = pow(tau - MultiPoly(1), 2);
    const MultiPoly quad = tau_poly({1, 6, 1});
    return UVParam{
        RationalFunction(tau_poly({2, 9, 16, 30, 6, 1}).scaled(2), tau * sq * quad, Var::tau),
        RationalFunction(tau_poly({1, 4, 22, 36, 1}).scaled(2), sq * quad, Var::tau),
    };
}

/// The cofactor of (U-2)^4 in G(U, tau(U-2)-2).
inline MultiPoly line_cofactor() {
    return var(Var::U) * tau_poly({0, 1, 4, -10, 4, 1}) - tau_poly({4, 18, 32, 60, 12, 2});
}

// ---------------------------------------------------------------------------
// Identity suite

enum class IdentityName {
    NORMALIZATION,
    EVEN_TO_QUINTIC,
    SCALED_ROOT,
    INVERSION,
    RESULTANT_IS_G_SQUARED,
    LINE_FACTORIZATION,
    PARAM_ON_G,
    U_DISC,
    V_DISC,
    F_FACTORIZATION_OF_C,
};

inline constexpr std::array<IdentityName, 10> kAllIdentities = {
    IdentityName::NORMALIZATION,      IdentityName::EVEN_TO_QUINTIC,        IdentityName::SCALED_ROOT,
    IdentityName::INVERSION,          IdentityName::RESULTANT_IS_G_SQUARED, IdentityName::LINE_FACTORIZATION,
    IdentityName::PARAM_ON_G,         IdentityName::U_DISC,                 IdentityName::V_DISC,
    IdentityName::F_FACTORIZATION_OF_C,
};

inline std::string_view to_string(IdentityName n) {
    switch (n) {
        case IdentityName::NORMALIZATION: return "NORMALIZATION";
        case IdentityName::EVEN_TO_QUINTIC: return "EVEN_TO_QUINTIC";
        case IdentityName::SCALED_ROOT: return "SCALED_ROOT";
        case IdentityName::INVERSION: return "INVERSION";
        case IdentityName::RESULTANT_IS_G_SQUARED: return "RESULTANT_IS_G_SQUARED";
        case IdentityName::LINE_FACTORIZATION: return "LINE_FACTORIZATION";
        case IdentityName::PARAM_ON_G: return "PARAM_ON_G";
        case IdentityName::U_DISC: return "U_DISC";
        case IdentityName::V_DISC: return "V_DISC";
        case IdentityName::F_FACTORIZATION_OF_C: return "F_FACTORIZATION_OF_C";
    }
    return "?";
}

inline std::string_view citation(IdentityName n) {
    switch (n) {
        case IdentityName::NORMALIZATION: return "weighted normalization: Q_{p,q}(t) = q^20 * Q_r(t/q^2), r = p/q";
        case IdentityName::EVEN_TO_QUINTIC: return "associated quintic: Q_r(u) = P_s(u^2), s = r^2";
        case IdentityName::SCALED_ROOT: return "scaled root equation: P_s(s*y) = s^3 * F(s,y)";
        case IdentityName::INVERSION: return "inversion symmetry: F(1/s,1/y) = -F(s,y) / (s^4*y^5)";
        case IdentityName::RESULTANT_IS_G_SQUARED:
            return "double resultant: Res_y(Res_s(F, s^2-U*s+1), y^2-V*y+1) = G(U,V)^2";
        case IdentityName::LINE_FACTORIZATION:
            return "lines through (2,-2): G(U, tau*(U-2)-2) = (U-2)^4 * (linear in U)";
        case IdentityName::PARAM_ON_G: return "rational parametrization (U(tau), V(tau)) of G = 0";
        case IdentityName::U_DISC:
            return "U(tau)^2 - 4 = 16(tau+1)^5(tau^4+20tau^3+6tau^2+4tau+1) / (tau^2(tau-1)^4(tau^2+6tau+1)^2)";
        case IdentityName::V_DISC:
            return "V(tau)^2 - 4 = 256 tau^2(tau+1)(tau^4+20tau^3+6tau^2+4tau+1) / ((tau-1)^4(tau^2+6tau+1)^2)";
        case IdentityName::F_FACTORIZATION_OF_C: return "curve C: t^5+21t^4+26t^3+10t^2+5t+1 = (t+1)(t^4+20t^3+6t^2+4t+1)";
    }
    return "";
}

/// Both elimination stages, by the norm route and by the Sylvester oracle.
struct DoubleResultant {
    MultiPoly stage1;            // Res_s(quad_s, F) by the norm route, in (y, U)
    MultiPoly stage2;            // Res_y(quad_y, stage1) by the norm route, in (U, V)
    MultiPoly stage1_sylvester;  // same quantities by Sylvester determinants,
    MultiPoly stage2_sylvester;  // taken as Res(f, quad) and sign-normalized
};

inline DoubleResultant double_resultant(bool with_oracle = true) {
    const MultiPoly F = build_F();
    const MultiPoly U = var(Var::U);
    const MultiPoly V = var(Var::V);
    DoubleResultant out;
    out.stage1 = quadratic_norm_resultant(F, Var::s, U);
    out.stage2 = quadratic_norm_resultant(out.stage1, Var::y, V);
    if (with_oracle) {
        const MultiPoly qs = trace_quadratic(Var::s, U);
        const MultiPoly qy = trace_quadratic(Var::y, V);
        out.stage1_sylvester = sylvester_resultant(F, qs, Var::s).scaled(swap_sign(F, qs, Var::s));
        out.stage2_sylvester =
            sylvester_resultant(out.stage1, qy, Var::y).scaled(swap_sign(out.stage1, qy, Var::y));
    }
    return out;
}

namespace detail {

inline CheckResult make_check(IdentityName n, bool ok, std::string witness) {
    return CheckResult{std::string(to_string(n)), ok ? Status::pass : Status::fail, std::string(citation(n)),
                       std::move(witness)};
}

inline CheckResult compare_sides(IdentityName n, const MultiPoly& lhs, const MultiPoly& rhs) {
    const MultiPoly diff = lhs - rhs;
    if (diff.is_zero()) return make_check(n, true, "lhs = rhs = " + lhs.str());
    return make_check(n, false, "lhs = " + lhs.str() + "; rhs = " + rhs.str() + "; difference = " + diff.str());
}

/// Numerator of G(a/d, b/d) * d^deg(G) for a common denominator d.
inline MultiPoly homogenized(const MultiPoly& g, const MultiPoly& a, const MultiPoly& b, const MultiPoly& d) {
    const unsigned total = g.total_degree();
    MultiPoly out;
    for (const auto& [m, c] : g.terms()) {
        const unsigned i = m[index_of(Var::U)];
        const unsigned j = m[index_of(Var::V)];
        out += pow(a, static_cast<int>(i)) * pow(b, static_cast<int>(j)) *
               pow(d, static_cast<int>(total - i - j)).scaled(c);
    }
    return out;
}

inline CheckResult check_normalization() {
    const MultiPoly q = var(Var::q);
    const MultiPoly lhs = substitute(build_Qpq_symbolic(), Var::t, q * q * var(Var::u));
    // q^20 * Q_r(u) with r = p/q: c * r^i * u^j -> c * p^i * q^(20-i) * u^j.
    const MultiPoly qr = build_Qr_symbolic();
    MultiPoly rhs;
    for (const auto& [m, c] : qr.terms()) {
        const unsigned i = m[index_of(Var::r)];
        const unsigned j = m[index_of(Var::u)];
        if (i > 20) return make_check(IdentityName::NORMALIZATION, false, "r-degree exceeds weight 20");
        rhs += MultiPoly::term(c, {{Var::p, i}, {Var::q, 20 - i}, {Var::u, j}});
    }
    return compare_sides(IdentityName::NORMALIZATION, lhs, rhs);
}

inline CheckResult check_even_to_quintic() {
    const MultiPoly lhs = build_Qr_symbolic();
    const MultiPoly u = var(Var::u);
    const MultiPoly r = var(Var::r);
    const MultiPoly rhs = substitute(substitute(build_Ps_symbolic(), Var::x, u * u), Var::s, r * r);
    return compare_sides(IdentityName::EVEN_TO_QUINTIC, lhs, rhs);
}

inline CheckResult check_scaled_root() {
    const MultiPoly s = var(Var::s);
    const MultiPoly lhs = substitute(build_Ps_symbolic(), Var::x, s * var(Var::y));
    const MultiPoly rhs = pow(s, 3) * build_F();
    return compare_sides(IdentityName::SCALED_ROOT, lhs, rhs);
}

inline CheckResult check_inversion() {
    const MultiPoly F = build_F();
    if (F.degree(Var::s) != 4 || F.degree(Var::y) != 5)
        return make_check(IdentityName::INVERSION, false, "unexpected bidegree of F");
    const MultiPoly reversed = reverse_exponents(F, {{Var::s, 4}, {Var::y, 5}});
    const MultiPoly sum = reversed + F;
    if (sum.is_zero())
        return make_check(IdentityName::INVERSION, true,
                          "s^4*y^5*F(1/s,1/y) = " + reversed.str() + " = -F; F = " + F.str());
    return make_check(IdentityName::INVERSION, false, "s^4*y^5*F(1/s,1/y) + F = " + sum.str());
}

inline CheckResult check_resultant_is_g_squared() {
    const DoubleResultant dr = double_resultant(true);
    const MultiPoly G = build_G();
    const MultiPoly G2 = G * G;
    const Rational unit = dr.stage2.leading_coefficient() / G2.leading_coefficient();
    const bool proportional = !unit.is_zero() && dr.stage2 == G2.scaled(unit);
    const bool oracle1 = dr.stage1 == dr.stage1_sylvester;
    const bool oracle2 = dr.stage2 == dr.stage2_sylvester;
    std::string w = "unit constant = " + unit.str() + (proportional ? "" : " (NOT proportional)") +
                    "; G = " + G.str() + "; double resultant = " + dr.stage2.str() +
                    "; sylvester oracle stage 1: " + (oracle1 ? "agrees" : "DISAGREES") +
                    "; sylvester oracle stage 2: " + (oracle2 ? "agrees" : "DISAGREES");
    return make_check(IdentityName::RESULTANT_IS_G_SQUARED, proportional && oracle1 && oracle2, std::move(w));
}

inline CheckResult check_line_factorization() {
    const MultiPoly U = var(Var::U);
    const MultiPoly line = var(Var::tau) * (U - MultiPoly(2)) - MultiPoly(2);
    const MultiPoly restricted = substitute(build_G(), Var::V, line);
    const MultiPoly expected = line_cofactor();
    try {
        const MultiPoly cofactor = divexact(restricted, pow(U - MultiPoly(2), 4));
        const MultiPoly diff = cofactor - expected;
        if (diff.is_zero())
            return make_check(IdentityName::LINE_FACTORIZATION, true,
                              "G(U, tau*(U-2)-2) = (U-2)^4 * (" + cofactor.str() + ")");
        return make_check(IdentityName::LINE_FACTORIZATION, false,
                          "cofactor = " + cofactor.str() + "; expected = " + expected.str());
    } catch (const NotDivisible&) {
        return make_check(IdentityName::LINE_FACTORIZATION, false,
                          "(U-2)^4 does not divide G(U, tau*(U-2)-2) = " + restricted.str());
    }
}

inline CheckResult check_param_on_g() {
    const UVParam uv = build_UV_param();
    const MultiPoly& nu = uv.U.numerator();
    const MultiPoly& du = uv.U.denominator();
    const MultiPoly& nv = uv.V.numerator();
    const MultiPoly& dv = uv.V.denominator();
    const MultiPoly on_g = homogenized(build_G(), nu * dv, nv * du, du * dv);
    // V = tau*(U - 2) - 2, cross-multiplied.
    const MultiPoly tau = var(Var::tau);
    const MultiPoly line = nv * du - (tau * (nu - du.scaled(2)) - du.scaled(2)) * dv;
    const bool ok = on_g.is_zero() && line.is_zero();
    std::string w = "U = " + uv.U.str() + "; V = " + uv.V.str() + "; numerator of G(U,V): " + on_g.str() +
                    "; V - (tau*(U-2)-2) numerator: " + line.str();
    return make_check(IdentityName::PARAM_ON_G, ok, std::move(w));
}

inline CheckResult check_disc(IdentityName name) {
    const UVParam uv = build_UV_param();
    const MultiPoly tau = var(Var::tau);
    const MultiPoly quartic = tau_poly({1, 4, 6, 20, 1});
    const MultiPoly quad = tau_poly({1, 6, 1});
    const MultiPoly tm1 = tau - MultiPoly(1);
    const MultiPoly tp1 = tau + MultiPoly(1);
    const bool is_u = name == IdentityName::U_DISC;
    const RationalFunction& f = is_u ? uv.U : uv.V;
    const RationalFunction lhs = f * f - Rational(4);
    const RationalFunction rhs =
        is_u ? RationalFunction(pow(tp1, 5) * quartic.scaled(16), pow(tau, 2) * pow(tm1, 4) * pow(quad, 2), Var::tau)
             : RationalFunction(pow(tau, 2) * tp1 * quartic.scaled(256), pow(tm1, 4) * pow(quad, 2), Var::tau);
    const bool ok = cross_equal(lhs, rhs);
    return make_check(name, ok, "lhs = " + lhs.str() + "; rhs = " + rhs.str() +
                                    (ok ? "; cross-multiplied numerators agree" : "; cross-multiplication differs"));
}

}  // namespace detail

/// Performs one identity as an exact polynomial equality.
inline CheckResult verify_identity(IdentityName name) {
    switch (name) {
        case IdentityName::NORMALIZATION: return detail::check_normalization();
        case IdentityName::EVEN_TO_QUINTIC: return detail::check_even_to_quintic();
        case IdentityName::SCALED_ROOT: return detail::check_scaled_root();
        case IdentityName::INVERSION: return detail::check_inversion();
        case IdentityName::RESULTANT_IS_G_SQUARED: return detail::check_resultant_is_g_squared();
        case IdentityName::LINE_FACTORIZATION: return detail::check_line_factorization();
        case IdentityName::PARAM_ON_G: return detail::check_param_on_g();
        case IdentityName::U_DISC:
        case IdentityName::V_DISC: return detail::check_disc(name);
        case IdentityName::F_FACTORIZATION_OF_C: return curve::check_f_factorization();
    }
    throw std::logic_error("unknown identity");
}

/// All ten identities, in declaration order regardless of thread count.
inline std::vector<CheckResult> verify_all_identities(unsigned threads = 1) {
    std::vector<CheckResult> out(kAllIdentities.size());
    parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = verify_identity(kAllIdentities[i]); });
    return out;
}

// ---------------------------------------------------------------------------
// Lifting U back to s and the case analysis over C(Q)

/// Rational roots of s^2 - U*s + 1, ascending.
inline std::vector<Rational> solve_s_from_U(const Rational& U) {
    const Rational disc = U * U - Rational(4);
    const auto root = rational_sqrt(disc);
    if (!root) return {};
    if (root->is_zero()) return {U / Rational(2)};
    std::vector<Rational> out{(U - *root) / Rational(2), (U + *root) / Rational(2)};
    std::sort(out.begin(), out.end());
    return out;
}

struct LemmaCase {
    std::string tau;                 // "inf" or the rational value
    bool pole = false;               // U has a pole here
    std::optional<Rational> U;       // value (or limit at infinity)
    std::optional<Rational> numerator;
    std::optional<Rational> denominator;
    std::vector<Rational> s_solutions;
    std::vector<Rational> admissible;  // positive solutions
    std::string note;
};

/// Evaluates U at the tau-coordinate of every point of C(Q) and solves for s.
inline std::vector<LemmaCase> lemma_noadmissible_cases(const std::vector<curve::CurvePoint>& points) {
    const UVParam uv = build_UV_param();
    std::vector<Rational> taus;
    bool has_infinity = false;
    for (const auto& pt : points) {
        if (pt.infinity) {
            has_infinity = true;
        } else if (std::find(taus.begin(), taus.end(), pt.t) == taus.end()) {
            taus.push_back(pt.t);
        }
    }
    std::sort(taus.begin(), taus.end());

    auto solve = [](LemmaCase& c) {
        c.s_solutions = solve_s_from_U(*c.U);
        for (const auto& s : c.s_solutions)
            if (s.sign() > 0) c.admissible.push_back(s);
    };

    std::vector<LemmaCase> cases;
    if (has_infinity) {
        LemmaCase c;
        c.tau = "inf";
        c.U = uv.U.limit_at_infinity();
        if (!c.U) {
            c.pole = true;
            c.note = "U diverges at infinity";
        } else {
            solve(c);
            c.note = "limit of U by leading coefficients";
        }
        cases.push_back(std::move(c));
    }
    for (const auto& tau : taus) {
        LemmaCase c;
        c.tau = tau.str();
        c.numerator = uv.U.numerator_at(tau);
        c.denominator = uv.U.denominator_at(tau);
        if (c.denominator->is_zero()) {
            c.pole = true;
            c.note = c.numerator->is_zero() ? "0/0: indeterminate" : "pole of U: no finite nonzero s";
        } else {
            c.U = *c.numerator / *c.denominator;
            solve(c);
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

/// Mechanized case analysis: over the points of C(Q), the only positive
/// rational s with s + 1/s = U(tau) is s = 1 (the excluded case p = q).
inline CheckResult lemma_noadmissible_report(const std::vector<curve::CurvePoint>& points) {
    const auto cases = lemma_noadmissible_cases(points);

    struct Expected {
        std::string tau;
        bool pole;
        std::optional<Rational> U;
        std::optional<Rational> numerator;
        std::vector<Rational> solutions;
    };
    const std::vector<Expected> table = {
        {"inf", false, Rational(2), std::nullopt, {Rational(1)}},
        {"-1", false, Rational(-2), Rational(-32), {Rational(-1)}},
        {"0", true, std::nullopt, Rational(4), {}},
        {"1", true, std::nullopt, Rational(128), {}},
    };

    CheckResult r;
    r.check = "LEMMA_NO_ADMISSIBLE_S";
    r.citation = "case analysis over C(Q): tau in {inf, -1, 0, 1}; only positive rational s is 1";

    std::string w;
    std::string offending;
    std::vector<Rational> admissible;
    for (const auto& c : cases) {
        w += (w.empty() ? "" : "; ") + std::string("tau=") + c.tau + ": ";
        if (c.pole) {
            w += "pole, numerator " + (c.numerator ? c.numerator->str() : "?");
        } else {
            w += "U=" + c.U->str();
            if (c.numerator) w += " (" + c.numerator->str() + "/" + c.denominator->str() + ")";
            w += ", s in {";
            for (std::size_t i = 0; i < c.s_solutions.size(); ++i) w += (i ? ", " : "") + c.s_solutions[i].str();
            w += "}";
        }
        for (const auto& s : c.admissible)
            if (std::find(admissible.begin(), admissible.end(), s) == admissible.end()) admissible.push_back(s);

        auto it = std::find_if(table.begin(), table.end(), [&](const Expected& e) { return e.tau == c.tau; });
        if (it == table.end()) {
            offending += " unexpected tau=" + c.tau;
            continue;
        }
        const bool numerator_ok = !it->numerator || (c.numerator && *c.numerator == *it->numerator);
        if (c.pole != it->pole || c.U != it->U || !numerator_ok || c.s_solutions != it->solutions)
            offending += " tau=" + c.tau;
    }
    if (cases.size() != table.size()) offending += " case count " + std::to_string(cases.size());

    const bool only_one = admissible.size() == 1 && admissible.front() == Rational(1);
    if (!only_one) offending += " admissible set differs from {1}";
    if (offending.empty()) {
        r.status = Status::pass;
        r.witness = w + "; only admissible s is 1 (excluded case p = q); s = -1 rejected as non-positive";
    } else {
        r.status = Status::fail;
        r.witness = w + "; deviation:" + offending;
    }
    return r;
}

inline CheckResult lemma_noadmissible_report() {
    return lemma_noadmissible_report(curve::chabauty_certificate().claimed_points);
}

}  // namespace cuboid

#endif  // CUBOID_FAMILY_HPP
