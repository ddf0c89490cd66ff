#pragma once

// Exact trigonometric polynomials sum_m a_m cos(m phi) + sum_m b_m sin(m phi)
// over the rationals, with product-to-sum multiplication, differentiation and
// the plain L^2(0, 2pi) inner product.  Backbone of the exact series engine
// and of the closed-form factorization of the monomial overlap matrix.

#include <map>
#include <utility>

#include "epath/model.hpp"
#include "epath/rational.hpp"

namespace epath {

class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly constant(Rational c) {
    TrigPoly t;
    t.add_cos(0, std::move(c));
    return t;
  }

  static TrigPoly cosine(long m, Rational c = Rational(1)) {
    TrigPoly t;
    t.add_cos(m, std::move(c));
    return t;
  }

  static TrigPoly sine(long m, Rational c = Rational(1)) {
    TrigPoly t;
    t.add_sin(m, std::move(c));
    return t;
  }

  // cos^m expanded into harmonics (binomial power reduction).
  static TrigPoly cosine_power(long m) {
    TrigPoly t = constant(Rational(1));
    for (long i = 0; i < m; ++i) t = t * cosine(1);
    return t;
  }

  // Exact harmonic expansion of the monomial basis member k of the class.
  static TrigPoly basis_member(const SymmetryClass& c, long k) {
    const BasisShape shape = basis_shape(c, k);
    TrigPoly t = cosine_power(shape.cos_power);
    if (shape.sin_factor) t = t * sine(1);
    return t;
  }

  Rational cos_coefficient(long m) const {
    const auto it = cos_.find(m);
    return it == cos_.end() ? Rational(0) : it->second;
  }

  Rational sin_coefficient(long m) const {
    const auto it = sin_.find(m);
    return it == sin_.end() ? Rational(0) : it->second;
  }

  long degree() const {
    long d = 0;
    if (!cos_.empty()) d = std::max(d, cos_.rbegin()->first);
    if (!sin_.empty()) d = std::max(d, sin_.rbegin()->first);
    return d;
  }

  bool is_zero() const { return cos_.empty() && sin_.empty(); }

  TrigPoly operator+(const TrigPoly& o) const {
    TrigPoly t = *this;
    for (const auto& [m, v] : o.cos_) t.add_cos(m, v);
    for (const auto& [m, v] : o.sin_) t.add_sin(m, v);
    return t;
  }

  TrigPoly operator-(const TrigPoly& o) const { return *this + o.scaled(Rational(-1)); }

  TrigPoly scaled(const Rational& c) const {
    TrigPoly t;
    if (c == 0) return t;
    for (const auto& [m, v] : cos_) t.cos_.emplace(m, v * c);
    for (const auto& [m, v] : sin_) t.sin_.emplace(m, v * c);
    return t;
  }

  TrigPoly operator*(const TrigPoly& o) const {
    TrigPoly t;
    const Rational half(1, 2);
    for (const auto& [m1, v1] : cos_) {
      for (const auto& [m2, v2] : o.cos_) {  // cos a cos b
        const Rational h = v1 * v2 * half;
        t.add_cos(m1 - m2, h);
        t.add_cos(m1 + m2, h);
      }
      for (const auto& [m2, v2] : o.sin_) {  // cos a sin b
        const Rational h = v1 * v2 * half;
        t.add_sin(m2 - m1, h);
        t.add_sin(m2 + m1, h);
      }
    }
    for (const auto& [m1, v1] : sin_) {
      for (const auto& [m2, v2] : o.cos_) {  // sin a cos b
        const Rational h = v1 * v2 * half;
        t.add_sin(m1 - m2, h);
        t.add_sin(m1 + m2, h);
      }
      for (const auto& [m2, v2] : o.sin_) {  // sin a sin b
        const Rational h = v1 * v2 * half;
        t.add_cos(m1 - m2, h);
        t.add_cos(m1 + m2, -h);
      }
    }
    return t;
  }

  TrigPoly derivative() const {
    TrigPoly t;
    for (const auto& [m, v] : cos_)
      if (m > 0) t.add_sin(m, -v * m);
    for (const auto& [m, v] : sin_) t.add_cos(m, v * m);
    return t;
  }

  // int_0^{2pi} f g dphi divided by pi: 2 a0 a0' + sum_{m>0} (a_m a_m' + b_m b_m').
  Rational inner_over_pi(const TrigPoly& o) const {
    Rational r = 2 * cos_coefficient(0) * o.cos_coefficient(0);
    for (const auto& [m, v] : cos_)
      if (m > 0) r += v * o.cos_coefficient(m);
    for (const auto& [m, v] : sin_) r += v * o.sin_coefficient(m);
    return r;
  }

 private:
  void add_cos(long m, const Rational& v) {
    if (v == 0) return;
    if (m < 0) m = -m;  // cos(-m) = cos(m)
    auto [it, inserted] = cos_.try_emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) cos_.erase(it);
    }
  }

  void add_sin(long m, Rational v) {
    if (v == 0 || m == 0) return;
    if (m < 0) {  // sin(-m) = -sin(m)
      m = -m;
      v = -v;
    }
    auto [it, inserted] = sin_.try_emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) sin_.erase(it);
    }
  }

  std::map<long, Rational> cos_;  // m >= 0
  std::map<long, Rational> sin_;  // m >= 1
};

}  // namespace epath
