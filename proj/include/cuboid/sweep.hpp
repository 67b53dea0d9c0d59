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

#ifndef CUBOID_SWEEP_HPP
#define CUBOID_SWEEP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuboid/check.hpp"
#include "cuboid/exact.hpp"
#include "cuboid/family.hpp"
#include "cuboid/multipoly.hpp"
#include "cuboid/parallel.hpp"
#include "cuboid/unipoly.hpp"

namespace cuboid {

/// Prime factorization as (prime, exponent) pairs, ascending primes.
using Factorization = std::vector<std::pair<Integer, unsigned>>;

/// Trial division. Intended for the smooth constants met here; cost grows
/// with the square root of the largest prime factor.
inline Factorization factor_integer(Integer n) {
    if (n < 0) n = -n;
    if (n.is_zero()) throw std::domain_error("factor_integer(0)");
    Factorization out;
    for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e != 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline Factorization merge_factorizations(const Factorization& a, const Factorization& b) {
    std::map<Integer, unsigned> m;
    for (const auto& [prime, e] : a) m[prime] += e;
    for (const auto& [prime, e] : b) m[prime] += e;
    return {m.begin(), m.end()};
}

/// Positive divisors of the number with the given factorization, ascending.
inline std::vector<Integer> divisors(const Factorization& f) {
    std::vector<Integer> out{1};
    for (const auto& [prime, e] : f) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline std::vector<Integer> roots_among(const UniPolyZ& f, const std::vector<Integer>& candidates) {
    std::vector<Integer> roots;
    for (const auto& d : candidates) {
        if (f(d).is_zero()) roots.push_back(d);
        const Integer neg = -d;
        if (f(neg).is_zero()) roots.push_back(neg);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline UniPolyZ drop_zero_roots(const UniPolyZ& f, bool& had_zero) {
    const auto& c = f.coefficients();
    std::size_t k = 0;
    while (k < c.size() && c[k].is_zero()) ++k;
    had_zero = k > 0;
    return UniPolyZ(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

inline void require_monic(const UniPolyZ& f) {
    if (!f.is_monic()) throw std::domain_error("integer_roots_monic: polynomial is not monic");
}

}  // namespace detail

/// Integer roots of a monic integer polynomial: every rational root is an
/// integer dividing the constant term. A zero constant term contributes the
/// root 0 and the search continues on f / X^k.
inline std::vector<Integer> integer_roots_monic(const UniPolyZ& f) {
    detail::require_monic(f);
    bool had_zero = false;
    const UniPolyZ g = detail::drop_zero_roots(f, had_zero);
    std::vector<Integer> roots;
    if (g.degree() > 0) roots = detail::roots_among(g, divisors(factor_integer(g.coefficient(0))));
    if (had_zero) roots.insert(std::upper_bound(roots.begin(), roots.end(), Integer(0)), Integer(0));
    return roots;
}

/// Same, with the positive divisors of |f(0)| supplied by the caller.
/// f(0) must be nonzero.
inline std::vector<Integer> integer_roots_monic(const UniPolyZ& f, const std::vector<Integer>& candidate_divisors) {
    detail::require_monic(f);
    if (f.coefficient(0).is_zero()) return integer_roots_monic(f);
    return detail::roots_among(f, candidate_divisors);
}

/// The cleared quintic q^20 * P_s(X / q^4), s = (p/q)^2, with integer coefficients.
inline UniPolyZ clear_to_integer_quintic(const CuboidParams& params) {
    const auto c = ps_coefficients<Rational>(params.s());
    std::vector<Integer> out(6);
    for (unsigned k = 0; k <= 5; ++k) {
        const Rational v = c[k] * Rational(ipow(params.q, 20 - 4 * k));
        if (!v.is_integer()) throw std::logic_error("cleared quintic has a non-integer coefficient: " + v.str());
        out[k] = v.num();
    }
    return UniPolyZ(std::move(out));
}

/// Substituting X = t^2 into the cleared quintic; must equal Q_{p,q}(t).
inline UniPolyZ compose_with_square(const UniPolyZ& f) {
    std::vector<Integer> out(2 * f.coefficients().size());
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) out[2 * k] = f.coefficients()[k];
    return UniPolyZ(std::move(out));
}

/// |p^10 q^10| divisors, from the factorizations of p and q.
inline std::vector<Integer> constant_term_divisors(const CuboidParams& params) {
    Factorization f = merge_factorizations(factor_integer(params.p), factor_integer(params.q));
    for (auto& [prime, e] : f) e *= 10;
    return divisors(f);
}

/// All rational roots of P_s for s = (p/q)^2, as X0 / q^4 over the integer
/// roots X0 of the cleared monic quintic. Complete by monicity.
inline std::vector<Rational> rational_roots_Ps(const CuboidParams& params) {
    const UniPolyZ cleared = clear_to_integer_quintic(params);
    const Integer q4 = ipow(params.q, 4);
    std::vector<Rational> out;
    for (const auto& x0 : integer_roots_monic(cleared, constant_term_divisors(params)))
        out.emplace_back(x0, q4);
    std::sort(out.begin(), out.end());
    return out;
}

struct Violation {
    Integer p;
    Integer q;
    std::string kind;  // "P_s root", "Q_pq root", "composition", "bridge"
    std::string root;
};

struct ControlCase {
    Integer p = 1;
    Integer q = 1;
    std::vector<Rational> ps_roots;     // every rational root of P_1
    std::vector<Integer> qpq_roots;     // integer roots of Q_{1,1}
    std::string even_factor;            // t^2 - q^4 x0 for x0 = -1
    bool division_ok = false;           // exact division by every t^2 - q^4 x0
    std::string quotient;
    bool bridge_ok = false;
    bool ok = false;
};

struct SweepReport {
    long long bound = 0;
    std::size_t pairs_checked = 0;
    std::vector<Violation> violations;
    ControlCase control_case;

    bool confirmed() const { return violations.empty() && control_case.ok; }
};

/// Root correspondence on the excluded case p = q = 1. P_1 = (x - 1)(x + 1)^4, so
/// the root -1 must be found, and Q_{1,1}(t) must be divisible by
/// t^2 - q^4 * x0 for each rational root x0 (t^2 + 1 for x0 = -1).
inline ControlCase run_control_case() {
    ControlCase cc;
    const auto params = CuboidParams::make(1, 1);
    cc.ps_roots = rational_roots_Ps(params);
    if (std::find(cc.ps_roots.begin(), cc.ps_roots.end(), Rational(-1)) == cc.ps_roots.end()) return cc;

    const UniPolyZ qpq = build_Qpq(params);
    const MultiPoly qpq_t = qpq.to_multipoly(Var::t);
    const MultiPoly t = var(Var::t);
    const Rational q4(ipow(params.q, 4));
    cc.division_ok = true;
    for (const auto& x0 : cc.ps_roots) {
        const MultiPoly factor = t * t - MultiPoly(x0 * q4);
        try {
            const MultiPoly quotient = divexact(qpq_t, factor);
            if (x0 == Rational(-1)) {
                cc.even_factor = factor.str();
                cc.quotient = quotient.str();
            }
        } catch (const NotDivisible&) {
            cc.division_ok = false;
        }
    }

    cc.qpq_roots = integer_roots_monic(qpq);
    cc.bridge_ok = true;
    for (const auto& t0 : cc.qpq_roots) {
        const Rational u0(t0, params.q * params.q);
        if (std::find(cc.ps_roots.begin(), cc.ps_roots.end(), u0 * u0) == cc.ps_roots.end()) cc.bridge_ok = false;
    }
    cc.ok = cc.division_ok && cc.bridge_ok;
    return cc;
}

namespace detail {

inline std::vector<Violation> check_pair(const CuboidParams& params) {
    std::vector<Violation> out;
    const UniPolyZ qpq = build_Qpq(params);
    const UniPolyZ cleared = clear_to_integer_quintic(params);
    if (compose_with_square(cleared) != qpq)
        out.push_back({params.p, params.q, "composition", cleared.str(Var::x)});

    const auto divs = constant_term_divisors(params);
    const Integer q4 = ipow(params.q, 4);
    std::vector<Rational> ps_roots;
    for (const auto& x0 : integer_roots_monic(cleared, divs)) {
        ps_roots.emplace_back(x0, q4);
        out.push_back({params.p, params.q, "P_s root", Rational(x0, q4).str()});
    }
    for (const auto& t0 : integer_roots_monic(qpq, divs)) {
        out.push_back({params.p, params.q, "Q_pq root", t0.str()});
        const Rational u0(t0, params.q * params.q);
        if (std::find(ps_roots.begin(), ps_roots.end(), u0 * u0) == ps_roots.end())
            out.push_back({params.p, params.q, "bridge", t0.str()});
    }
    return out;
}

}  // namespace detail

/// Checks every coprime ordered pair 1 <= p, q <= bound with p != q.
inline SweepReport sweep(long long bound, unsigned threads = 1) {
    if (bound < 2) throw std::domain_error("sweep bound must be at least 2");
    std::vector<CuboidParams> pairs;
    for (long long p = 1; p <= bound; ++p) {
        for (long long q = 1; q <= bound; ++q) {
            if (p != q && std::gcd(p, q) == 1) pairs.push_back(CuboidParams::make(p, q));
        }
    }
    std::vector<std::vector<Violation>> found(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) { found[i] = detail::check_pair(pairs[i]); });

    SweepReport report;
    report.bound = bound;
    report.pairs_checked = pairs.size();
    for (auto& v : found) report.violations.insert(report.violations.end(), v.begin(), v.end());
    report.control_case = run_control_case();
    return report;
}

inline nlohmann::ordered_json to_json(const SweepReport& r) {
    auto violations = nlohmann::ordered_json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"p", v.p.str()}, {"q", v.q.str()}, {"kind", v.kind}, {"root", v.root}});
    auto roots = nlohmann::ordered_json::array();
    for (const auto& x : r.control_case.ps_roots) roots.push_back(x.str());
    auto qroots = nlohmann::ordered_json::array();
    for (const auto& x : r.control_case.qpq_roots) qroots.push_back(x.str());
    nlohmann::ordered_json control{{"p", r.control_case.p.str()},
                                   {"q", r.control_case.q.str()},
                                   {"s", "1"},
                                   {"excluded_case", true},
                                   {"ps_roots", roots},
                                   {"even_factor", r.control_case.even_factor},
                                   {"division_ok", r.control_case.division_ok},
                                   {"quotient", r.control_case.quotient},
                                   {"qpq_integer_roots", qroots},
                                   {"bridge_ok", r.control_case.bridge_ok},
                                   {"ok", r.control_case.ok}};
    return nlohmann::ordered_json{{"bound", r.bound},
                                  {"pairs_checked", r.pairs_checked},
                                  {"violations", violations},
                                  {"control_case", control}};
}

inline CheckResult sweep_check(const SweepReport& r) {
    CheckResult c;
    c.check = "THEOREM_SWEEP";
    c.citation = "for coprime p != q > 0, P_s (s = (p/q)^2) and Q_{p,q}(t) have no rational root";
    c.status = r.confirmed() ? Status::pass : Status::fail;
    std::string roots;
    for (const auto& x : r.control_case.ps_roots) roots += (roots.empty() ? "" : ", ") + x.str();
    c.witness = "bound=" + std::to_string(r.bound) + " pairs_checked=" + std::to_string(r.pairs_checked) +
                " violations=" + std::to_string(r.violations.size()) + "; control (1,1): P_1 roots {" + roots +
                "}, Q_{1,1} / (" + r.control_case.even_factor + ") " +
                (r.control_case.division_ok ? "exact" : "FAILED") + ", bridge " +
                (r.control_case.bridge_ok ? "holds" : "FAILED");
    for (const auto& v : r.violations)
        c.witness += "; violation (" + v.p.str() + "," + v.q.str() + ") " + v.kind + " " + v.root;
    return c;
}

}  // namespace cuboid

#endif  // CUBOID_SWEEP_HPP
