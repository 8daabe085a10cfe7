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

#pragma once

#include <iosfwd>

#include "quatfact/errors.hpp"
#include "quatfact/rational.hpp"

namespace quatfact {

/// Defining polynomial of a quadratic extension of the rationals: the
/// generator alpha satisfies alpha^2 + p*alpha + q = 0. Irreducible over the
/// rationals iff p^2 - 4q is not a rational square.
struct QuadModulus {
    Rational p;
    Rational q;

    bool operator==(const QuadModulus& o) const { return p == o.p && q == o.q; }
    bool operator!=(const QuadModulus& o) const { return !(*this == o); }

    bool is_irreducible() const {
        return !Rational::exact_sqrt(p * p - Rational(4) * q).has_value();
    }
};

/// Element a + b*alpha of the quadratic extension Q(alpha). Values carry their
/// modulus; combining elements of different extensions is an error, never a
/// coercion.
class QuadExt {
public:
    QuadExt(Rational a, Rational b, QuadModulus mod)
        : a_(std::move(a)), b_(std::move(b)), mod_(std::move(mod)) {}

    static QuadExt embed(Rational r, const QuadModulus& mod) { return {std::move(r), Rational(0), mod}; }
    static QuadExt root(const QuadModulus& mod) { return {Rational(0), Rational(1), mod}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const QuadModulus& modulus() const { return mod_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt operator+(const QuadExt& o) const {
        check(o);
        return {a_ + o.a_, b_ + o.b_, mod_};
    }
    QuadExt operator-(const QuadExt& o) const {
        check(o);
        return {a_ - o.a_, b_ - o.b_, mod_};
    }
    QuadExt operator-() const { return {-a_, -b_, mod_}; }
    QuadExt operator*(const QuadExt& o) const {
        check(o);
        // (a1 + b1 a)(a2 + b2 a) with a^2 = -p a - q
        Rational bb = b_ * o.b_;
        return {a_ * o.a_ - mod_.q * bb, a_ * o.b_ + b_ * o.a_ - mod_.p * bb, mod_};
    }

    bool operator==(const QuadExt& o) const { return mod_ == o.mod_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    /// The nontrivial automorphism of Q(alpha): alpha maps to the other root
    /// -p - alpha of the modulus. Fixes the rationals; an involution.
    QuadExt conj_root() const { return {a_ - mod_.p * b_, -b_, mod_}; }

    /// Field norm N(x) = x * conj_root(x), always rational. Zero only for the
    /// zero element when the modulus is irreducible.
    Rational field_norm() const { return a_ * a_ - mod_.p * a_ * b_ + mod_.q * b_ * b_; }

    QuadExt inverse() const {
        Rational n = field_norm();
        if (n.is_zero()) throw Error("inverse of zero extension element");
        Rational ni = n.inverse();
        QuadExt c = conj_root();
        return {c.a_ * ni, c.b_ * ni, mod_};
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

private:
    void check(const QuadExt& o) const {
        if (mod_ != o.mod_) throw ModulusMismatch("mixing quadratic extensions with different moduli");
    }

    Rational a_;
    Rational b_;
    QuadModulus mod_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// The automorphism as a free function, matching the naming used throughout.
inline QuadExt ext_conj_root(const QuadExt& x) { return x.conj_root(); }

}  // namespace quatfact
