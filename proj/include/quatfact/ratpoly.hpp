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
#include <utility>
#include <vector>

#include "quatfact/quadext.hpp"
#include "quatfact/rational.hpp"

namespace quatfact {

enum class Var { t, s };

inline char var_name(Var v) { return v == Var::t ? 't' : 's'; }

/// Univariate polynomial with rational coefficients, stored lowest degree
/// first with no trailing zeros. The zero polynomial has an empty coefficient
/// sequence and degree -1.
class RatPoly {
public:
    explicit RatPoly(Var var) : var_(var) {}
    RatPoly(Var var, std::vector<Rational> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

    static RatPoly zero(Var var) { return RatPoly(var); }
    static RatPoly constant(Var var, Rational c) { return {var, {std::move(c)}}; }
    static RatPoly one(Var var) { return constant(var, 1); }
    /// c * x^deg
    static RatPoly monomial(Var var, Rational c, int deg);

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[size_t(i)] : Rational(0);
    }
    const Rational& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const Rational& s) const;

    bool operator==(const RatPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }
    /// Lexicographic on (degree, coefficients); deterministic-output helper.
    bool operator<(const RatPoly& o) const;

    RatPoly monic() const;
    RatPoly derivative() const;

    Rational evaluate(const Rational& x) const;
    QuadExt evaluate_ext(const QuadExt& x) const;

    /// Euclidean division: *this = q * g + r with deg r < deg g.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& g) const;

    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Var var_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

/// Monic greatest common divisor; gcd(0, 0) = 0 by convention.
RatPoly rpoly_gcd(const RatPoly& f, const RatPoly& g);

/// Quotient f / g when the division is exact; throws NotDivisible otherwise.
RatPoly exact_div(const RatPoly& f, const RatPoly& g);

struct QuadraticFactor {
    RatPoly quadratic;  // monic, irreducible, negative discriminant
    int multiplicity;
};

/// Exact factorization unit * prod(quadratic^multiplicity), verified by
/// re-expansion. Factors are kept in a fixed canonical order (coefficient
/// lexicographic).
struct QuadraticFactorization {
    Rational unit;
    std::vector<QuadraticFactor> factors;

    RatPoly expand(Var var) const;
    /// The quadratics repeated per multiplicity, canonical order.
    std::vector<RatPoly> flatten() const;
    int total_multiplicity() const;
};

/// Factor a nonzero rational polynomial into monic irreducible quadratics with
/// negative discriminant (times a rational unit). Throws NotQuadraticallySplit
/// when an irreducible factor of any other shape is present, including
/// rational linear factors and odd-degree parts.
///
/// Candidates come from a floating-point root finder plus rational
/// reconstruction; exact trial division is the only source of truth, so the
/// numeric stage affects completeness but never soundness. The reconstruction
/// denominator bound defaults to 10^6 and can be overridden with the
/// QUATFACT_DENOM_BOUND environment variable.
QuadraticFactorization quadratic_split(const RatPoly& p);

}  // namespace quatfact
