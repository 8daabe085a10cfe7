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

#include <ostream>

#include "quatfact/errors.hpp"
#include "quatfact/quadext.hpp"
#include "quatfact/rational.hpp"

namespace quatfact {

/// Quaternion w + x i + y j + z k over an exact scalar ring S (the rationals,
/// or a quadratic extension of them). Immutable value type; multiplication
/// follows i^2 = j^2 = k^2 = ijk = -1.
///
/// Over the rationals the norm vanishes only at zero. Over a quadratic
/// extension nonzero elements of zero norm exist (zero divisors); inverse()
/// reports them via ZeroNorm.
template <class S>
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(S w, S x, S y, S z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    const S& w() const { return w_; }
    const S& x() const { return x_; }
    const S& y() const { return y_; }
    const S& z() const { return z_; }

    bool is_zero() const { return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero(); }

    Quaternion operator+(const Quaternion& o) const {
        return {w_ + o.w_, x_ + o.x_, y_ + o.y_, z_ + o.z_};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {w_ - o.w_, x_ - o.x_, y_ - o.y_, z_ - o.z_};
    }
    Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }

    Quaternion operator*(const Quaternion& o) const {
        return {w_ * o.w_ - x_ * o.x_ - y_ * o.y_ - z_ * o.z_,
                w_ * o.x_ + x_ * o.w_ + y_ * o.z_ - z_ * o.y_,
                w_ * o.y_ - x_ * o.z_ + y_ * o.w_ + z_ * o.x_,
                w_ * o.z_ + x_ * o.y_ - y_ * o.x_ + z_ * o.w_};
    }

    /// Central scalar multiple; left and right agree.
    Quaternion operator*(const S& s) const { return {w_ * s, x_ * s, y_ * s, z_ * s}; }

    bool operator==(const Quaternion& o) const {
        return w_ == o.w_ && x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    Quaternion conj() const { return {w_, -x_, -y_, -z_}; }

    S norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

    Quaternion inverse() const {
        S n = norm();
        if (n.is_zero()) throw ZeroNorm("quaternion with zero norm has no inverse");
        S ni = n.inverse();
        return conj() * ni;
    }

    bool commutes_with(const Quaternion& o) const { return (*this) * o == o * (*this); }

private:
    S w_{}, x_{}, y_{}, z_{};
};

using Quat = Quaternion<Rational>;
using ExtQuaternion = Quaternion<QuadExt>;

inline Quat quat_w(Rational r) { return {std::move(r), 0, 0, 0}; }
inline Quat quat_i(Rational r = 1) { return {0, std::move(r), 0, 0}; }
inline Quat quat_j(Rational r = 1) { return {0, 0, std::move(r), 0}; }
inline Quat quat_k(Rational r = 1) { return {0, 0, 0, std::move(r)}; }

/// Componentwise total order; used only to make enumeration output
/// deterministic, no algebraic meaning.
inline bool quat_less(const Quat& a, const Quat& b) {
    if (a.w() != b.w()) return a.w() < b.w();
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
}

std::ostream& operator<<(std::ostream& os, const Quat& q);

}  // namespace quatfact
