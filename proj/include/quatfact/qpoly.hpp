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
#include <optional>
#include <utility>
#include <vector>

#include "quatfact/quaternion.hpp"
#include "quatfact/ratpoly.hpp"

namespace quatfact {

/// Univariate polynomial in t with rational quaternion coefficients, the
/// indeterminate central. Stored lowest degree first, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Quat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly constant(Quat q) { return QPoly({std::move(q)}); }
    static QPoly one() { return constant(quat_w(1)); }
    /// t - h
    static QPoly linear(const Quat& h) { return QPoly({-h, quat_w(1)}); }
    /// Lift a real polynomial into quaternion coefficients.
    static QPoly from_real(const RatPoly& p);
    /// Reassemble from the four real component polynomials (all in t).
    static QPoly from_components(const RatPoly& w, const RatPoly& x, const RatPoly& y,
                                 const RatPoly& z);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Quat>& coeffs() const { return c_; }
    Quat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[size_t(i)] : Quat();
    }
    const Quat& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == quat_w(1); }

    /// Real component polynomial: 0 -> w, 1 -> x, 2 -> y, 3 -> z.
    RatPoly component(int idx) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;

    /// a * this and this * a; distinct operations, coefficients do not commute.
    QPoly scale_left(const Quat& a) const;
    QPoly scale_right(const Quat& a) const;
    QPoly operator*(const RatPoly& real) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly conj() const;
    /// Norm polynomial P * conj(P); always real.
    RatPoly norm() const;

    /// Right evaluation sum c_i h^i; zero iff (t - h) is a right factor.
    Quat eval_right(const Quat& h) const;

    /// Evaluation over a quadratic extension (t is central, so this is a ring
    /// homomorphism).
    ExtQuaternion evaluate_ext(const QuadExt& alpha) const;

    friend std::ostream& operator<<(std::ostream& os, const QPoly& p);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Quat> c_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Monic gcd g of the four component polynomials together with the
/// content-free part: q = g * rest.
std::pair<RatPoly, QPoly> real_content(const QPoly& q);

/// Division by a real monic polynomial: q = quot * m + rem, deg rem < deg m.
std::pair<QPoly, QPoly> div_rem_real(const QPoly& q, const RatPoly& m);

/// The unique monic linear right factor of q whose norm is the irreducible
/// quadratic m. Requires m | norm(q) and m does not divide q itself; throws
/// MDividesQ when it does (the right factor is then not unique) and
/// NoRightFactor when none exists.
Quat linear_right_factor(const QPoly& q, const RatPoly& m);

/// Quotient q / (t - h) on the right; throws NotARightFactor.
QPoly right_div_linear(const QPoly& q, const Quat& h);

/// q = prefactor * real_content * (t - roots[0]) * ... * (t - roots.back())
struct UnivariateFactorization {
    Quat prefactor;
    QuadraticFactorization real_content;
    std::vector<Quat> roots;

    QPoly expand() const;
};

/// Extract linear factors right to left following `order`, whose last entry is
/// the norm of the rightmost factor. `order` must be a permutation (with
/// multiplicity) of the norm quadratics of the content-free part.
UnivariateFactorization factor_univariate(const QPoly& q, const std::vector<RatPoly>& order);

/// One factorization per distinct ordering of the norm-quadratic multiset,
/// deduplicated by root sequence and sorted canonically. At most n! entries.
std::vector<UnivariateFactorization> all_univariate_factorizations(const QPoly& q);

/// Canonical quaternion root of a monic irreducible real quadratic
/// m = (t - conj(h))(t - h), embedding into the i-axis: h = -p/2 + sqrt(q - p^2/4) i.
/// Throws NotRationallyEmbeddable when that square root is irrational.
Quat factor_real_quadratic(const RatPoly& m);

/// Largest mu with m^mu dividing every component of h; nullopt means infinite
/// (h is the zero polynomial).
std::optional<int> multiplicity_of_quadratic(const QPoly& h, const RatPoly& m);

/// Distinct permutations of a multiset of quadratics, in stable order.
std::vector<std::vector<RatPoly>> multiset_permutations(std::vector<RatPoly> items);

}  // namespace quatfact
