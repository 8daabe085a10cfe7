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

#include "quatfact/rational.hpp"

#include <ostream>

#include "quatfact/errors.hpp"

namespace quatfact {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw Error("malformed rational literal '" + text + "'");
    if (v.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

std::optional<Rational> Rational::exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    const mpz_class& num = x.v_.get_num();
    const mpz_class& den = x.v_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

}  // namespace quatfact
