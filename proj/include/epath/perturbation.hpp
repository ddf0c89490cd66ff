#pragma once

// Exact Rayleigh-Schrodinger machinery for small deformations.  Expanding
// H = -(c2 d^2 + c1 d) in powers of xi gives, with theta the drift weight,
//   H^(0) = -d^2,
//   H^(k) = (-1)^k ( -cos^{2k} d^2 + theta k sin cos^{2k-1} d ),  k >= 1,
// all of which map the harmonic family of a symmetry class into itself.  With
// the diagonal harmonic Gram the recursion stays inside the rationals, so the
// series coefficients come out exact.

#include <optional>
#include <stdexcept>
#include <vector>

#include "epath/model.hpp"
#include "epath/rational.hpp"
#include "epath/trigpoly.hpp"

namespace epath {

// Harmonic member with index n of the class family.
inline TrigPoly harmonic_member(const SymmetryClass& c, long n) {
  return c.reflection_parity > 0 ? TrigPoly::cosine(n) : TrigPoly::sine(n);
}

struct OperatorSeries {
  ModelKind model;
  SymmetryClass symmetry;
  std::vector<long> indices;   // harmonic indices retained, ascending
  std::vector<Rational> gram;  // <v_i, v_i> / pi, 2 for the constant else 1
  // matrices[k][i][j] = <v_i, H^(k) v_j> / pi
  std::vector<std::vector<std::vector<Rational>>> matrices;
};

inline OperatorSeries expand_operator(ModelKind model, const SymmetryClass& c, long order,
                                      long max_index) {
  if (order < 0) throw std::invalid_argument("expansion order must be non-negative");
  if (max_index < class_fourier_index(c, 0))
    throw std::invalid_argument("index cutoff excludes the whole class family");

  OperatorSeries op{model, c, {}, {}, {}};
  for (long k = 0; class_fourier_index(c, k) <= max_index; ++k)
    op.indices.push_back(class_fourier_index(c, k));
  const std::size_t m = op.indices.size();

  std::vector<TrigPoly> v(m), dv(m);
  op.gram.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    v[i] = harmonic_member(c, op.indices[i]);
    dv[i] = v[i].derivative();
    op.gram.push_back(Rational(op.indices[i] == 0 ? 2 : 1));
  }

  const long theta = model == ModelKind::PathNonHermitian ? 1 : 2;
  op.matrices.resize(static_cast<std::size_t>(order) + 1);
  for (long k = 0; k <= order; ++k) {
    const Rational sign(k % 2 == 0 ? 1 : -1);
    const TrigPoly cos_even = TrigPoly::cosine_power(2 * k);
    TrigPoly drift;  // theta k sin cos^{2k-1}
    if (k >= 1)
      drift = (TrigPoly::sine(1) * TrigPoly::cosine_power(2 * k - 1)).scaled(Rational(theta * k));

    auto& hk = op.matrices[static_cast<std::size_t>(k)];
    hk.assign(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) {
      const Rational nj2(op.indices[j] * op.indices[j]);
      // -cos^{2k} v_j'' = n_j^2 cos^{2k} v_j
      TrigPoly w = (cos_even * v[j]).scaled(nj2);
      if (k >= 1) w = w + drift * dv[j];
      w = w.scaled(sign);
      for (std::size_t i = 0; i < m; ++i) hk[i][j] = v[i].inner_over_pi(w);
    }
  }
  return op;
}

struct RationalSeries {
  ModelKind model;
  SymmetryClass symmetry;
  long level;                          // harmonic index n of the unperturbed state
  std::vector<Rational> coefficients;  // E^(0) .. E^(order)
};

inline RationalSeries eigenvalue_series(const OperatorSeries& op, long n, long order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (static_cast<long>(op.matrices.size()) <= order)
    throw std::invalid_argument("operator expansion is shorter than the requested order");
  const std::size_t m = op.indices.size();
  std::size_t p = m;
  for (std::size_t i = 0; i < m; ++i)
    if (op.indices[i] == n) p = i;
  if (p == m) throw std::invalid_argument("level is not among the retained harmonics");

  std::vector<std::vector<Rational>> state(static_cast<std::size_t>(order) + 1,
                                           std::vector<Rational>(m, Rational(0)));
  state[0][p] = Rational(1);
  std::vector<Rational> energy(static_cast<std::size_t>(order) + 1, Rational(0));
  energy[0] = Rational(n * n);

  for (long j = 1; j <= order; ++j) {
    std::vector<Rational> rhs(m, Rational(0));
    for (long k = 1; k <= j; ++k) {
      const auto& hk = op.matrices[static_cast<std::size_t>(k)];
      const auto& cv = state[static_cast<std::size_t>(j - k)];
      for (std::size_t i = 0; i < m; ++i) {
        Rational acc(0);
        for (std::size_t q = 0; q < m; ++q)
          if (cv[q] != 0) acc += hk[i][q] * cv[q];
        rhs[i] += acc;
      }
    }
    energy[static_cast<std::size_t>(j)] = rhs[p] / op.gram[p];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == p) continue;
      Rational s = -rhs[i];
      for (long k = 1; k < j; ++k)
        s += energy[static_cast<std::size_t>(k)] * op.gram[i] *
             state[static_cast<std::size_t>(j - k)][i];
      const Rational gap(op.indices[i] * op.indices[i] - n * n);
      state[static_cast<std::size_t>(j)][i] = s / (op.gram[i] * gap);
    }
  }
  return RationalSeries{op.model, op.symmetry, n, std::move(energy)};
}

// Couplings reach at most 2k harmonics per order, so this cutoff saturates the
// coefficients through the requested order.
inline long series_cutoff(long n, long order) { return n + 2 * order + 2; }

inline RationalSeries eigenvalue_series(ModelKind model, const SymmetryClass& c, long n,
                                        long order) {
  if (!class_contains_level(c, n))
    throw std::invalid_argument("level does not belong to the symmetry class");
  return eigenvalue_series(expand_operator(model, c, order, series_cutoff(n, order)), n, order);
}

inline Rational evaluate_series(const RationalSeries& s, const Rational& xi,
                                long max_order = -1) {
  if (s.coefficients.empty()) throw std::invalid_argument("empty series");
  long top = max_order < 0 ? static_cast<long>(s.coefficients.size()) - 1 : max_order;
  if (top < 0 || top >= static_cast<long>(s.coefficients.size()))
    throw std::invalid_argument("evaluation order exceeds the stored coefficients");
  Rational r = s.coefficients[static_cast<std::size_t>(top)];
  for (long j = top - 1; j >= 0; --j) r = r * xi + s.coefficients[static_cast<std::size_t>(j)];
  return r;
}

// First-order estimate shared by every level pair: n^2 (1 - xi/2).
inline double first_order_energy(long n, double xi) {
  if (n < 0) throw std::invalid_argument("level must be non-negative");
  require_valid_xi(xi);
  return static_cast<double>(n * n) * (1.0 - xi / 2.0);
}

// Resummed estimate n^2 / sqrt(1 + xi), exact for the non-Hermitian model's
// scaling law at first order and a bounded approximant for large xi.
inline double improved_energy(long n, double xi) {
  if (n < 0) throw std::invalid_argument("level must be non-negative");
  require_valid_xi(xi);
  return static_cast<double>(n * n) / std::sqrt(1.0 + xi);
}

// Lowest order at which the two classes sharing level n^2 disagree, or nullopt
// if the series coincide through the requested order.
inline std::optional<long> splitting_order(ModelKind model, long n, long order) {
  if (n < 1) throw std::invalid_argument("only n >= 1 levels are doubly degenerate");
  const auto [ca, cb] = classes_sharing(n);
  const RationalSeries sa = eigenvalue_series(model, ca, n, order);
  const RationalSeries sb = eigenvalue_series(model, cb, n, order);
  for (long j = 0; j <= order; ++j)
    if (sa.coefficients[static_cast<std::size_t>(j)] !=
        sb.coefficients[static_cast<std::size_t>(j)])
      return j;
  return std::nullopt;
}

}  // namespace epath
