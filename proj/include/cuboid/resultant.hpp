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

#ifndef CUBOID_RESULTANT_HPP
#define CUBOID_RESULTANT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "cuboid/multipoly.hpp"

// Two independent routes to the resultant of a polynomial against a trace
// quadratic X^2 - T*X + 1:
//
//   * the norm route reduces f modulo the quadratic to A*X + B and returns
//     the product f(x1)*f(x2) = A^2 + A*B*T + B^2 (x1*x2 = 1, x1 + x2 = T);
//   * the Sylvester route takes the determinant of the Sylvester matrix by
//     fraction-free (Bareiss) elimination over the remaining variables.
//
// Convention: Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a), i.e. the
// determinant of the Sylvester matrix with f's rows on top. With the
// quadratic as first operand the two routes agree exactly; swapping the
// operands multiplies by (-1)^(deg f * deg g).

namespace cuboid {

/// The monic quadratic v^2 - trace*v + 1.
inline MultiPoly trace_quadratic(Var v, const MultiPoly& trace) {
    return var(v) * var(v) - trace * var(v) + MultiPoly(1);
}

struct LinearRemainder {
    MultiPoly a;  // coefficient of v
    MultiPoly b;  // constant part
};

/// f == a*v + b modulo v^2 - trace*v + 1, with a and b free of v.
inline LinearRemainder reduce_mod_monic_quadratic(const MultiPoly& f, Var v, const MultiPoly& trace) {
    const auto coeffs = f.coefficients_in(v);
    // v^k == pk*v + qk, via v^(k+1) = pk*(trace*v - 1) + qk*v.
    MultiPoly pk(0), qk(1);
    LinearRemainder out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) {
            out.a += coeffs[k] * pk;
            out.b += coeffs[k] * qk;
        }
        MultiPoly next_p = pk * trace + qk;
        qk = -pk;
        pk = std::move(next_p);
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const auto w = static_cast<Var>(i);
        if (w == v) continue;
        if (f.declares(w) || trace.declares(w)) {
            out.a.declare(w);
            out.b.declare(w);
        }
    }
    return out;
}

/// Res(v^2 - trace*v + 1, f) in closed form: A^2 + A*B*trace + B^2.
inline MultiPoly quadratic_norm_resultant(const MultiPoly& f, Var v, const MultiPoly& trace) {
    const auto [a, b] = reduce_mod_monic_quadratic(f, v, trace);
    return a * a + a * b * trace + b * b;
}

/// Determinant of a square matrix over the polynomial ring, by Bareiss
/// fraction-free elimination with row pivoting. Every division is exact.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    bool negate = false;
    MultiPoly previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return MultiPoly(0);
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        const bool unit_divisor = previous.is_constant();
        const Rational inv = unit_divisor ? Rational(1) / previous.constant_value() : Rational(1);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = unit_divisor ? cross.scaled(inv) : divexact(cross, previous);
            }
            m[i][k] = MultiPoly(0);
        }
        previous = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester matrix of f and g with respect to v (f's rows first).
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f, const MultiPoly& g, Var v) {
    const auto fc = f.coefficients_in(v);
    const auto gc = g.coefficients_in(v);
    const std::size_t m = fc.size() - 1;
    const std::size_t n = gc.size() - 1;
    const std::size_t size = m + n;
    std::vector<std::vector<MultiPoly>> mat(size, std::vector<MultiPoly>(size));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= m; ++k) mat[row][row + k] = fc[m - k];
    }
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t k = 0; k <= n; ++k) mat[n + row][row + k] = gc[n - k];
    }
    return mat;
}

/// Res_v(f, g) as the Sylvester determinant. When both degrees in v are 0
/// the result is 1; when exactly one is 0 the determinant already reduces
/// to the constant operand raised to the other degree.
inline MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("sylvester_resultant of the zero polynomial");
    MultiPoly det = bareiss_determinant(sylvester_matrix(f, g, v));
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const auto w = static_cast<Var>(i);
        if (w != v && (f.declares(w) || g.declares(w))) det.declare(w);
    }
    return det;
}

/// (-1)^(deg_v f * deg_v g): Res(g, f) = sign * Res(f, g).
inline int swap_sign(const MultiPoly& f, const MultiPoly& g, Var v) {
    return ((f.degree(v) * g.degree(v)) % 2 == 0) ? 1 : -1;
}

}  // namespace cuboid

#endif  // CUBOID_RESULTANT_HPP
