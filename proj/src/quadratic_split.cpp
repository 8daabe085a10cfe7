/*
   Copyright 2026 The quatfact authors

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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <set>

#include "quatfact/errors.hpp"
#include "quatfact/ratpoly.hpp"

namespace quatfact {

namespace {

long long denominator_bound() {
    if (const char* env = std::getenv("QUATFACT_DENOM_BOUND")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 1000000;
}

/// Yun square-free decomposition of a monic polynomial: returns the pairwise
/// coprime square-free parts with their exponents.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly df = f.derivative();
    RatPoly a = rpoly_gcd(f, df);
    RatPoly b = exact_div(f, a);
    RatPoly c = exact_div(df, a);
    RatPoly d = c - b.derivative();
    int i = 1;
    while (!b.is_one()) {
        RatPoly ai = rpoly_gcd(b, d);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - b.derivative();
        if (ai.degree() >= 1) out.emplace_back(ai.monic(), i);
        ++i;
    }
    return out;
}

/// Durand-Kerner simultaneous iteration on a monic polynomial. Purely a
/// candidate generator; results are only ever used after exact verification.
template <class Real>
std::vector<std::complex<Real>> durand_kerner(const std::vector<Real>& monic, int max_iter,
                                              Real tol) {
    using C = std::complex<Real>;
    const int n = static_cast<int>(monic.size()) - 1;
    std::vector<C> roots(size_t(n));
    C seed(Real(0.4), Real(0.9));
    C p(1, 0);
    for (int i = 0; i < n; ++i) {
        p *= seed;
        roots[size_t(i)] = p;
    }
    auto eval = [&](C z) {
        C acc(0, 0);
        for (size_t i = monic.size(); i-- > 0;) acc = acc * z + C(monic[i], 0);
        return acc;
    };
    for (int iter = 0; iter < max_iter; ++iter) {
        Real worst = 0;
        for (int i = 0; i < n; ++i) {
            C denom(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= roots[size_t(i)] - roots[size_t(j)];
            if (denom == C(0, 0)) {
                roots[size_t(i)] += C(Real(1e-4), Real(2e-4));
                worst = Real(1);
                continue;
            }
            C delta = eval(roots[size_t(i)]) / denom;
            roots[size_t(i)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < tol) break;
    }
    return roots;
}

/// Nearest rational with denominator below the bound, via continued fractions.
std::optional<Rational> reconstruct_rational(double x, long long bound) {
    if (!std::isfinite(x)) return std::nullopt;
    bool neg = x < 0;
    double v = neg ? -x : x;
    if (v > 9e15) return std::nullopt;
    long long p0 = 1, q0 = 0;  // previous convergent
    long long p1 = 0, q1 = 1;
    double rem = v;
    for (int step = 0; step < 64; ++step) {
        double fa = std::floor(rem);
        if (fa > 9e15) return std::nullopt;
        long long a = static_cast<long long>(fa);
        long long p2 = a * p0 + p1;
        long long q2 = a * q0 + q1;
        if (q2 > bound || p2 < 0 || q2 < 0) break;
        p1 = p0; q1 = q0; p0 = p2; q0 = q2;
        double frac = rem - fa;
        if (q0 > 0 && std::abs(v - double(p0) / double(q0)) < 1e-12 * std::max(1.0, v)) break;
        if (frac < 1e-15) break;
        rem = 1.0 / frac;
    }
    if (q0 == 0) return std::nullopt;
    Rational r(p0, q0);
    return neg ? -r : r;
}

struct QuadKey {
    Rational p, q;  // t^2 + p t + q
    bool operator<(const QuadKey& o) const {
        if (p != o.p) return p < o.p;
        return q < o.q;
    }
};

/// One numeric pass over a square-free monic part: propose quadratics, keep
/// the ones that divide exactly.
template <class Real>
void harvest_quadratics(const RatPoly& part, RatPoly& remaining,
                        std::map<QuadKey, int>& found, int exponent, long long bound,
                        int max_iter, Real tol) {
    std::vector<Real> monic;
    monic.reserve(part.coeffs().size());
    for (const auto& c : part.coeffs()) monic.push_back(static_cast<Real>(c.to_double()));
    auto roots = durand_kerner<Real>(monic, max_iter, tol);
    std::set<QuadKey> candidates;
    for (const auto& z : roots) {
        double re = static_cast<double>(z.real());
        double n2 = static_cast<double>(z.real() * z.real() + z.imag() * z.imag());
        auto pc = reconstruct_rational(-2.0 * re, bound);
        auto qc = reconstruct_rational(n2, bound);
        if (!pc || !qc) continue;
        // a norm quadratic of a non-real linear factor has negative discriminant
        if ((*pc * *pc - Rational(4) * *qc).sign() >= 0) continue;
        candidates.insert(QuadKey{*pc, *qc});
    }
    for (const auto& cand : candidates) {
        RatPoly m(part.var(), {cand.q, cand.p, Rational(1)});
        while (remaining.degree() >= 2) {
            auto [quo, rem] = remaining.divmod(m);
            if (!rem.is_zero()) break;
            remaining = quo;
            found[cand] += exponent;
        }
    }
}

}  // namespace

QuadraticFactorization quadratic_split(const RatPoly& p) {
    if (p.is_zero()) throw Error("quadratic_split of the zero polynomial");
    QuadraticFactorization result;
    result.unit = p.leading();
    RatPoly w = p.monic();
    if (w.is_constant()) return result;
    if (w.degree() % 2 != 0)
        throw NotQuadraticallySplit("odd degree polynomial cannot split into quadratics");

    const long long bound = denominator_bound();
    std::map<QuadKey, int> found;
    for (const auto& [part, exponent] : squarefree_decomposition(w)) {
        if (part.degree() % 2 != 0)
            throw NotQuadraticallySplit("odd-degree square-free part cannot split into quadratics");
        RatPoly remaining = part;
        harvest_quadratics<double>(part, remaining, found, exponent, bound, 400, 1e-13);
        if (!remaining.is_one())
            harvest_quadratics<long double>(part, remaining, found, exponent, bound, 1200,
                                            1e-17L);
        if (!remaining.is_one())
            throw NotQuadraticallySplit(
                "polynomial has an irreducible factor that is not a rational quadratic with "
                "negative discriminant");
    }
    for (const auto& [key, mult] : found)
        result.factors.push_back(
            {RatPoly(p.var(), {key.q, key.p, Rational(1)}), mult});
    std::sort(result.factors.begin(), result.factors.end(),
              [](const QuadraticFactor& a, const QuadraticFactor& b) {
                  return a.quadratic < b.quadratic;
              });
    if (result.expand(p.var()) != p)
        throw InternalInconsistency("quadratic factorization failed re-expansion check");
    return result;
}

}  // namespace quatfact
