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

#include "quatfact/ratpoly.hpp"

#include <algorithm>
#include <ostream>

#include "quatfact/errors.hpp"

namespace quatfact {

namespace {

void require_same_var(const RatPoly& f, const RatPoly& g) {
    if (f.var() != g.var()) throw Error("polynomials in different variables");
}

}  // namespace

RatPoly RatPoly::monomial(Var var, Rational c, int deg) {
    std::vector<Rational> v(size_t(deg) + 1, Rational(0));
    v.back() = std::move(c);
    return {var, std::move(v)};
}

const Rational& RatPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    require_same_var(*this, o);
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return {var_, std::move(v)};
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    require_same_var(*this, o);
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return {var_, std::move(v)};
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    require_same_var(*this, o);
    if (c_.empty() || o.c_.empty()) return RatPoly(var_);
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return {var_, std::move(v)};
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return {var_, std::move(v)};
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return {var_, std::move(v)};
}

bool RatPoly::operator<(const RatPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return *this;
    return (*this) * c_.back().inverse();
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly(var_);
    std::vector<Rational> v;
    v.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(long(i)));
    return {var_, std::move(v)};
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QuadExt RatPoly::evaluate_ext(const QuadExt& x) const {
    QuadExt acc = QuadExt::embed(0, x.modulus());
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + QuadExt::embed(c_[i], x.modulus());
    return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& g) const {
    require_same_var(*this, g);
    if (g.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(rem.size() >= g.c_.size() ? rem.size() - g.c_.size() + 1 : 0,
                              Rational(0));
    Rational lead_inv = g.c_.back().inverse();
    while (rem.size() >= g.c_.size() && !rem.empty()) {
        Rational c = rem.back() * lead_inv;
        size_t shift = rem.size() - g.c_.size();
        quo[shift] = c;
        for (size_t i = 0; i < g.c_.size(); ++i) rem[shift + i] -= c * g.c_[i];
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    return {RatPoly(var_, std::move(quo)), RatPoly(var_, std::move(rem))};
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (i == 0) {
            os << a;
        } else {
            if (!a.is_one()) os << a << "*";
            os << var_name(p.var());
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

RatPoly rpoly_gcd(const RatPoly& f, const RatPoly& g) {
    require_same_var(f, g);
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatPoly exact_div(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw Error("exact division by zero polynomial");
    auto [q, r] = f.divmod(g);
    if (!r.is_zero()) throw NotDivisible("polynomial division leaves a remainder");
    return q;
}

RatPoly QuadraticFactorization::expand(Var var) const {
    RatPoly acc = RatPoly::constant(var, unit);
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) acc = acc * f.quadratic;
    return acc;
}

std::vector<RatPoly> QuadraticFactorization::flatten() const {
    std::vector<RatPoly> out;
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.quadratic);
    return out;
}

int QuadraticFactorization::total_multiplicity() const {
    int n = 0;
    for (const auto& f : factors) n += f.multiplicity;
    return n;
}

}  // namespace quatfact
