#pragma once

// Periodic trapezoid quadrature on [0, 2pi).  Equally spaced nodes integrate
// trigonometric polynomials of degree < M exactly and converge spectrally on
// smooth periodic integrands.

#include <cmath>
#include <stdexcept>

#include "epath/model.hpp"

namespace epath {

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Real>
Real pi_value() {
  using std::acos;
  static const Real value = acos(Real(-1));
  return value;
}

// Nodes phi_j = 2 pi j / M with uniform weight 2 pi / M.
struct QuadratureRule {
  int node_count;

  explicit QuadratureRule(int m) : node_count(m) {
    if (m < 16 || m % 2 != 0)
      throw std::invalid_argument("quadrature rule needs an even node count >= 16");
  }
};

// Resolution floor for an N-dimensional basis block: the integrands have trig
// degree <= 4N + 4 plus a spectrally decaying rational factor.
inline QuadratureRule auto_rule(int basis_size) {
  if (basis_size < 1) throw std::invalid_argument("basis size must be positive");
  return QuadratureRule(std::max(64, 8 * basis_size + 32));
}

template <class Real, class F>
Real integrate(const QuadratureRule& rule, F&& f) {
  const Real two_pi = Real(2) * pi_value<Real>();
  const Real step = two_pi / Real(rule.node_count);
  Real sum(0);
  for (int j = 0; j < rule.node_count; ++j) sum += f(step * Real(j));
  return sum * step;
}

// int_0^{2pi} cos^m(phi) (1 + xi cos^2 phi)^{-p} dphi by adaptive doubling of
// the periodic rule until two successive levels agree to 1e-13 relative.
template <class Real = double>
Real trig_rational_integral(long m, int p, const Real& xi) {
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("cosine power must be even and non-negative");
  if (p != 1 && p != 2) throw std::invalid_argument("metric power must be 1 or 2");
  require_valid_xi(xi);

  using std::abs;
  using std::cos;
  const auto integrand = [&](const Real& phi) {
    const Real c = cos(phi);
    Real num(1);
    for (long i = 0; i < m; ++i) num *= c;
    const Real g = Real(1) + xi * c * c;
    return p == 1 ? num / g : num / (g * g);
  };

  int nodes = std::max<long>(64, m + 16);
  if (nodes % 2 != 0) ++nodes;
  Real previous = integrate<Real>(QuadratureRule(nodes), integrand);
  while (nodes <= (1 << 15)) {
    nodes *= 2;
    const Real current = integrate<Real>(QuadratureRule(nodes), integrand);
    const Real scale = abs(current) > Real(1) ? abs(current) : Real(1);
    if (abs(current - previous) <= Real(1e-13) * scale) return current;
    previous = current;
  }
  throw NonConvergence("trig_rational_integral: no 1e-13 agreement by M = 65536");
}

}  // namespace epath
