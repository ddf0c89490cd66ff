#pragma once

// Dimensionless models for a particle on an elliptical path.
//
// Both Hamiltonians act as H psi = -(c2 psi'' + c1 psi') on 2pi-periodic
// functions, with metric factor g(phi) = 1 + xi cos^2(phi) and
// xi = (b^2 - a^2)/a^2 > -1.  Model "PathNonHermitian" has c1 = -g'/(2g^2),
// model "PathHermitian" has c1 = -g'/g^2; c2 = 1/g for both.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace epath {

enum class ModelKind { PathNonHermitian, PathHermitian };

inline const char* model_token(ModelKind m) {
  return m == ModelKind::PathNonHermitian ? "m1" : "m2";
}

// xi = -1 is a singular point of the metric; values at or below it are rejected.
inline constexpr double xi_lower_guard = -1.0 + 1e-12;

template <class Real>
void require_valid_xi(const Real& xi) {
  if (!(xi > Real(xi_lower_guard)))
    throw std::domain_error("xi must exceed -1 (metric must stay positive)");
}

struct Deformation {
  double xi;
  explicit Deformation(double value) : xi(value) { require_valid_xi(value); }
};

// g(phi) = 1 + xi cos^2(phi); even in phi and pi-periodic.
template <class Real>
Real metric(const Real& phi, const Real& xi) {
  require_valid_xi(xi);
  using std::cos;
  const Real c = cos(phi);
  return Real(1) + xi * c * c;
}

// g'(phi) = -xi sin(2 phi).
template <class Real>
Real metric_derivative(const Real& phi, const Real& xi) {
  require_valid_xi(xi);
  using std::sin;
  return -xi * sin(Real(2) * phi);
}

// Coefficients of H psi = -(c2 psi'' + c1 psi').  drift_weight is 1 for
// PathNonHermitian and 2 for PathHermitian, so c1 = -drift_weight * g'/(2g^2);
// the difference of the two operators is -(g'/(2g^2)) d/dphi.
template <class Real>
struct CoefficientPair {
  Real xi;
  Real drift_weight;

  Real c2(const Real& phi) const { return Real(1) / metric(phi, xi); }

  Real c1(const Real& phi) const {
    const Real g = metric(phi, xi);
    return -drift_weight * metric_derivative(phi, xi) / (Real(2) * g * g);
  }

  // Partial derivatives in xi at fixed phi, used by the Hellmann-Feynman check.
  Real c2_xi(const Real& phi) const {
    using std::cos;
    const Real c = cos(phi);
    const Real g = metric(phi, xi);
    return -c * c / (g * g);
  }

  Real c1_xi(const Real& phi) const {
    using std::cos;
    using std::sin;
    const Real c = cos(phi);
    const Real s2 = sin(Real(2) * phi);
    const Real g = metric(phi, xi);
    return drift_weight * s2 * (Real(1) / (Real(2) * g * g) - xi * c * c / (g * g * g));
  }
};

template <class Real>
CoefficientPair<Real> coefficient_functions(ModelKind model, const Real& xi) {
  require_valid_xi(xi);
  return {xi, model == ModelKind::PathNonHermitian ? Real(1) : Real(2)};
}

// Joint parity under phi -> -phi (reflection) and phi -> phi + pi (half turn).
struct SymmetryClass {
  int reflection_parity;
  int translation_parity;

  friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

inline constexpr SymmetryClass class_pp{+1, +1};
inline constexpr SymmetryClass class_pm{+1, -1};
inline constexpr SymmetryClass class_mp{-1, +1};
inline constexpr SymmetryClass class_mm{-1, -1};

inline constexpr std::array<SymmetryClass, 4> all_classes{class_pp, class_pm,
                                                          class_mp, class_mm};

// Deterministic ordering (+,+) < (+,-) < (-,+) < (-,-), used for tie-breaks.
inline int class_rank(const SymmetryClass& c) {
  return (c.reflection_parity < 0 ? 2 : 0) + (c.translation_parity < 0 ? 1 : 0);
}

inline const char* class_token(const SymmetryClass& c) {
  static constexpr std::array<const char*, 4> tokens{"pp", "pm", "mp", "mm"};
  return tokens[static_cast<std::size_t>(class_rank(c))];
}

inline const char* class_signs(const SymmetryClass& c) {
  static constexpr std::array<const char*, 4> signs{"(+,+)", "(+,-)", "(-,+)", "(-,-)"};
  return signs[static_cast<std::size_t>(class_rank(c))];
}

inline SymmetryClass class_from_token(const std::string& token) {
  for (const auto& c : all_classes)
    if (token == class_token(c)) return c;
  throw std::invalid_argument("unknown symmetry class token: " + token);
}

// Irrep labels of D2 and C2v for each class.
struct GroupLabels {
  const char* d2;
  const char* c2v;
};

inline GroupLabels group_labels(const SymmetryClass& c) {
  static constexpr std::array<GroupLabels, 4> table{
      GroupLabels{"A", "A1"},   // (+,+)
      GroupLabels{"B2", "B1"},  // (+,-)
      GroupLabels{"B1", "A2"},  // (-,+)
      GroupLabels{"B3", "B2"},  // (-,-)
  };
  return table[static_cast<std::size_t>(class_rank(c))];
}

// k-th member of the class basis family as a shape (cos power, sin factor):
// (+,+): cos^{2k}, (+,-): cos^{2k+1}, (-,+): sin cos^{2k+1}, (-,-): sin cos^{2k}.
struct BasisShape {
  long cos_power;
  bool sin_factor;
};

inline BasisShape basis_shape(const SymmetryClass& c, long k) {
  if (k < 0) throw std::invalid_argument("basis index must be non-negative");
  const bool odd = c.translation_parity < 0;  // odd cos power iff antiperiodic under half turn
  const bool sin_factor = c.reflection_parity < 0;
  const long m = sin_factor ? (2 * k + (odd ? 0 : 1)) : (2 * k + (odd ? 1 : 0));
  return {m, sin_factor};
}

// Basis function with exact analytic derivatives.  For f = cos^m:
//   f'  = -m sin cos^{m-1},  f'' = m(m-1) cos^{m-2} - m^2 cos^m.
// For f = sin cos^m:
//   f'  = (m+1) cos^{m+1} - m cos^{m-1},
//   f'' = -sin ((m+1)^2 cos^m - m(m-1) cos^{m-2}).
template <class Real>
struct BasisFunction {
  BasisShape shape;

  Real value(const Real& phi) const {
    using std::cos;
    using std::sin;
    const Real p = pow_int(cos(phi), shape.cos_power);
    return shape.sin_factor ? sin(phi) * p : p;
  }

  Real derivative(const Real& phi) const {
    using std::cos;
    using std::sin;
    const long m = shape.cos_power;
    const Real c = cos(phi);
    if (!shape.sin_factor) {
      if (m == 0) return Real(0);
      return -Real(m) * sin(phi) * pow_int(c, m - 1);
    }
    Real r = Real(m + 1) * pow_int(c, m + 1);
    if (m >= 1) r -= Real(m) * pow_int(c, m - 1);
    return r;
  }

  Real second_derivative(const Real& phi) const {
    using std::cos;
    using std::sin;
    const long m = shape.cos_power;
    const Real c = cos(phi);
    if (!shape.sin_factor) {
      Real r = -Real(m) * Real(m) * pow_int(c, m);
      if (m >= 2) r += Real(m) * Real(m - 1) * pow_int(c, m - 2);
      return r;
    }
    Real t = Real(m + 1) * Real(m + 1) * pow_int(c, m);
    if (m >= 2) t -= Real(m) * Real(m - 1) * pow_int(c, m - 2);
    return -sin(phi) * t;
  }

 private:
  static Real pow_int(const Real& base, long e) {
    Real r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
  }
};

template <class Real = double>
BasisFunction<Real> basis_function(const SymmetryClass& c, long k) {
  return BasisFunction<Real>{basis_shape(c, k)};
}

// Fourier indices n whose xi = 0 eigenfunctions lie in the class:
// (+,+): 0,2,4,...  (+,-): 1,3,5,...  (-,+): 2,4,6,...  (-,-): 1,3,5,...
inline long class_fourier_index(const SymmetryClass& c, long k) {
  if (k < 0) throw std::invalid_argument("level index must be non-negative");
  if (c.reflection_parity > 0)
    return c.translation_parity > 0 ? 2 * k : 2 * k + 1;
  return c.translation_parity > 0 ? 2 * k + 2 : 2 * k + 1;
}

inline std::vector<long> unperturbed_levels(const SymmetryClass& c, long count) {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  std::vector<long> n(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) n[static_cast<std::size_t>(k)] = class_fourier_index(c, k);
  return n;
}

inline bool class_contains_level(const SymmetryClass& c, long n) {
  if (n < 0) return false;
  if (c.reflection_parity > 0)
    return c.translation_parity > 0 ? n % 2 == 0 : n % 2 == 1;
  return c.translation_parity > 0 ? (n % 2 == 0 && n >= 2) : n % 2 == 1;
}

// Position of the unperturbed level n within the class ordering, the inverse
// of class_fourier_index.
inline long class_level_slot(const SymmetryClass& c, long n) {
  if (!class_contains_level(c, n))
    throw std::invalid_argument("level does not belong to the symmetry class");
  if (c.reflection_parity > 0) return c.translation_parity > 0 ? n / 2 : (n - 1) / 2;
  return c.translation_parity > 0 ? (n - 2) / 2 : (n - 1) / 2;
}

// The two classes sharing the unperturbed level n^2 (n >= 1); n = 0 lives in
// (+,+) alone and both slots return it.
inline std::pair<SymmetryClass, SymmetryClass> classes_sharing(long n) {
  if (n < 0) throw std::invalid_argument("level must be non-negative");
  if (n == 0) return {class_pp, class_pp};
  return n % 2 == 1 ? std::pair{class_pm, class_mm} : std::pair{class_pp, class_mp};
}

// Physical ellipse and its reduction to (xi, energy scale = hbar^2 / (2 m a^2)).
struct PhysicalEllipse {
  double a;
  double b;
  double mass;
};

struct Nondimensional {
  double xi;
  double energy_scale;
};

inline Nondimensional nondimensionalize(const PhysicalEllipse& e) {
  if (!(e.a > 0) || !(e.b > 0) || !(e.mass > 0))
    throw std::domain_error("semi-axes and mass must be positive");
  constexpr double hbar = 1.054571817e-34;  // J s
  const double xi = (e.b * e.b - e.a * e.a) / (e.a * e.a);
  return {xi, hbar * hbar / (2.0 * e.mass * e.a * e.a)};
}

}  // namespace epath
