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

#include "quatfact/qpoly.hpp"

#include <algorithm>
#include <ostream>

#include "quatfact/errors.hpp"

namespace quatfact {

QPoly QPoly::from_real(const RatPoly& p) {
    std::vector<Quat> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(quat_w(c));
    return QPoly(std::move(v));
}

QPoly QPoly::from_components(const RatPoly& w, const RatPoly& x, const RatPoly& y,
                             const RatPoly& z) {
    int n = std::max(std::max(w.degree(), x.degree()), std::max(y.degree(), z.degree()));
    std::vector<Quat> v;
    v.reserve(size_t(n + 1));
    for (int i = 0; i <= n; ++i) v.emplace_back(w.coeff(i), x.coeff(i), y.coeff(i), z.coeff(i));
    return QPoly(std::move(v));
}

const Quat& QPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly QPoly::component(int idx) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& q : c_) {
        switch (idx) {
            case 0: v.push_back(q.w()); break;
            case 1: v.push_back(q.x()); break;
            case 2: v.push_back(q.y()); break;
            case 3: v.push_back(q.z()); break;
            default: throw Error("component index out of range");
        }
    }
    return {Var::t, std::move(v)};
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Quat> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Quat> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] - o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (c_.empty() || o.c_.empty()) return QPoly();
    std::vector<Quat> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
    std::vector<Quat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return QPoly(std::move(v));
}

QPoly QPoly::scale_left(const Quat& a) const {
    std::vector<Quat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(a * c);
    return QPoly(std::move(v));
}

QPoly QPoly::scale_right(const Quat& a) const {
    std::vector<Quat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * a);
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const RatPoly& real) const { return (*this) * QPoly::from_real(real); }

QPoly QPoly::conj() const {
    std::vector<Quat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.conj());
    return QPoly(std::move(v));
}

RatPoly QPoly::norm() const {
    QPoly n = (*this) * conj();
    std::vector<Rational> v;
    v.reserve(n.c_.size());
    for (const auto& c : n.c_) {
        if (!c.x().is_zero() || !c.y().is_zero() || !c.z().is_zero())
            throw InternalInconsistency("norm polynomial has a non-real coefficient");
        v.push_back(c.w());
    }
    return {Var::t, std::move(v)};
}

Quat QPoly::eval_right(const Quat& h) const {
    Quat acc;
    Quat power = quat_w(1);
    for (const auto& c : c_) {
        acc = acc + c * power;
        power = power * h;
    }
    return acc;
}

ExtQuaternion QPoly::evaluate_ext(const QuadExt& alpha) const {
    const QuadModulus& mod = alpha.modulus();
    auto lift = [&](const Rational& r) { return QuadExt::embed(r, mod); };
    QuadExt zero = lift(0);
    ExtQuaternion acc(zero, zero, zero, zero);
    QuadExt power = lift(1);
    for (const auto& c : c_) {
        ExtQuaternion term(lift(c.w()) * power, lift(c.x()) * power, lift(c.y()) * power,
                           lift(c.z()) * power);
        acc = acc + term;
        power = power * alpha;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Quat& q) {
    if (q.is_zero()) return os << "0";
    bool first = true;
    auto emit = [&](const Rational& c, const char* unit) {
        if (c.is_zero()) return;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (unit[0] == '\0') {
            os << a;
        } else {
            if (!a.is_one()) os << a << "*";
            os << unit;
        }
    };
    emit(q.w(), "");
    emit(q.x(), "i");
    emit(q.y(), "j");
    emit(q.z(), "k");
    return os;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Quat c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (i > 0) {
            os << "*t";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

std::pair<RatPoly, QPoly> real_content(const QPoly& q) {
    if (q.is_zero()) throw Error("real content of zero polynomial");
    RatPoly g = RatPoly::zero(Var::t);
    for (int i = 0; i < 4; ++i) g = rpoly_gcd(g, q.component(i));
    if (g.is_one()) return {g, q};
    QPoly rest = QPoly::from_components(exact_div(q.component(0), g), exact_div(q.component(1), g),
                                        exact_div(q.component(2), g), exact_div(q.component(3), g));
    return {g, rest};
}

std::pair<QPoly, QPoly> div_rem_real(const QPoly& q, const RatPoly& m) {
    if (m.is_zero() || !m.is_monic() || m.degree() < 1)
        throw Error("divisor must be monic of positive degree");
    std::vector<Quat> rem = q.coeffs();
    size_t msz = size_t(m.degree()) + 1;
    std::vector<Quat> quo(rem.size() >= msz ? rem.size() - msz + 1 : 0);
    while (rem.size() >= msz && !rem.empty()) {
        Quat c = rem.back();
        size_t shift = rem.size() - msz;
        quo[shift] = c;
        for (size_t i = 0; i < msz; ++i) rem[shift + i] = rem[shift + i] - c * m.coeff(int(i));
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

Quat linear_right_factor(const QPoly& q, const RatPoly& m) {
    if (m.degree() != 2 || !m.is_monic()) throw Error("norm factor must be a monic quadratic");
    auto [quot, rem] = div_rem_real(q, m);
    (void)quot;
    if (rem.is_zero())
        throw MDividesQ("quadratic divides the polynomial; right factor not unique");
    if (rem.degree() < 1 || rem.coeff(1).is_zero())
        throw NoRightFactor("no linear right factor with the requested norm");
    Quat h = -(rem.coeff(1).inverse() * rem.coeff(0));
    // the construction promises norm m and exact right division; verify both
    if (QPoly::linear(h).norm() != m)
        throw NoRightFactor("candidate right factor has the wrong norm");
    if (!q.eval_right(h).is_zero())
        throw NoRightFactor("no linear right factor with the requested norm");
    return h;
}

QPoly right_div_linear(const QPoly& q, const Quat& h) {
    if (q.is_zero()) throw NotARightFactor("zero polynomial has no factorization");
    if (!q.eval_right(h).is_zero()) throw NotARightFactor("not a right zero of the polynomial");
    size_t n = q.coeffs().size() - 1;
    std::vector<Quat> out(n);
    // synthetic division against (t - h): c_{n-1} = q_n, c_{i-1} = q_i + c_i h
    for (size_t i = n; i-- > 0;) {
        out[i] = q.coeff(int(i + 1)) + (i + 1 < n ? out[i + 1] * h : Quat());
    }
    return QPoly(std::move(out));
}

QPoly UnivariateFactorization::expand() const {
    QPoly acc = QPoly::constant(prefactor) * real_content.expand(Var::t);
    for (const auto& r : roots) acc = acc * QPoly::linear(r);
    return acc;
}

UnivariateFactorization factor_univariate(const QPoly& q, const std::vector<RatPoly>& order) {
    if (q.is_zero()) throw Error("factorization of the zero polynomial");
    auto [g, core] = real_content(q);
    Quat lead = core.leading();
    QPoly monic = core.scale_left(lead.inverse());
    UnivariateFactorization out;
    out.prefactor = lead;
    out.real_content = quadratic_split(g);

    auto split = quadratic_split(monic.norm());
    std::vector<RatPoly> expected = split.flatten();
    std::vector<RatPoly> given = order;
    std::sort(given.begin(), given.end());
    std::sort(expected.begin(), expected.end());
    if (given != expected)
        throw Error("factor order is not a permutation of the norm quadratics");

    out.roots.assign(order.size(), Quat());
    QPoly rest = monic;
    for (size_t i = order.size(); i-- > 0;) {
        Quat h = linear_right_factor(rest, order[i]);
        rest = right_div_linear(rest, h);
        out.roots[i] = h;
    }
    if (out.expand() != q) throw InternalInconsistency("univariate factorization failed re-expansion");
    return out;
}

std::vector<std::vector<RatPoly>> multiset_permutations(std::vector<RatPoly> items) {
    std::sort(items.begin(), items.end());
    std::vector<std::vector<RatPoly>> out;
    do {
        out.push_back(items);
    } while (std::next_permutation(items.begin(), items.end()));
    return out;
}

std::vector<UnivariateFactorization> all_univariate_factorizations(const QPoly& q) {
    if (q.is_zero()) throw Error("factorization of the zero polynomial");
    auto [g, core] = real_content(q);
    (void)g;
    QPoly monic = core.scale_left(core.leading().inverse());
    auto split = quadratic_split(monic.norm());
    std::vector<UnivariateFactorization> out;
    std::vector<std::vector<Quat>> seen;
    for (const auto& order : multiset_permutations(split.flatten())) {
        UnivariateFactorization f = factor_univariate(q, order);
        if (std::find(seen.begin(), seen.end(), f.roots) == seen.end()) {
            seen.push_back(f.roots);
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const UnivariateFactorization& a, const UnivariateFactorization& b) {
                  return std::lexicographical_compare(a.roots.begin(), a.roots.end(),
                                                      b.roots.begin(), b.roots.end(), quat_less);
              });
    return out;
}

Quat factor_real_quadratic(const RatPoly& m) {
    if (m.degree() != 2 || !m.is_monic()) throw Error("expected a monic quadratic");
    Rational p = m.coeff(1), q = m.coeff(0);
    Rational disc = p * p - Rational(4) * q;
    if (disc.sign() >= 0) throw Error("quadratic is not irreducible over the reals");
    auto s = Rational::exact_sqrt(q - p * p * Rational(1, 4));
    if (!s)
        throw NotRationallyEmbeddable(
            "quadratic has no splitting with rational quaternion coefficients");
    return {-p * Rational(1, 2), *s, 0, 0};
}

std::optional<int> multiplicity_of_quadratic(const QPoly& h, const RatPoly& m) {
    if (m.degree() != 2 || !m.is_monic()) throw Error("expected a monic quadratic");
    if (h.is_zero()) return std::nullopt;
    int mu = 0;
    QPoly cur = h;
    while (true) {
        auto [quot, rem] = div_rem_real(cur, m);
        if (!rem.is_zero()) return mu;
        cur = quot;
        ++mu;
    }
}

}  // namespace quatfact
