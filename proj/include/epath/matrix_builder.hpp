#pragma once

// Rayleigh-Ritz matrices per symmetry class.  Two representations of the same
// span: the monomial family cos^m (sin cos^m) and the harmonic family cos(n),
// sin(n).  The monomial overlap matrix is exact but grows ill-conditioned like
// 4^-N, so the solver works in the harmonic family, whose Gram matrix is the
// constant diagonal pi * diag(2, 1, 1, ...).  The exact change of basis T is
// upper triangular, which makes the two generalized problems congruent:
// det(H - W S) = det(T)^2 det(Hhat - W D).

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "epath/model.hpp"
#include "epath/quadrature.hpp"
#include "epath/rational.hpp"
#include "epath/trigpoly.hpp"

namespace epath {

template <class Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using RationalMatrix = std::vector<std::vector<Rational>>;

// Overlap of monomial members i and j divided by pi, exact.
inline Rational overlap_over_pi(const SymmetryClass& c, long i, long j) {
  return TrigPoly::basis_member(c, i).inner_over_pi(TrigPoly::basis_member(c, j));
}

template <class Real = double>
Real overlap_element(const SymmetryClass& c, long i, long j) {
  return rational_cast<Real>(overlap_over_pi(c, i, j)) * pi_value<Real>();
}

template <class Real = double>
Matrix<Real> overlap_matrix(const SymmetryClass& c, long size) {
  if (size < 1) throw std::invalid_argument("basis size must be positive");
  Matrix<Real> s(size, size);
  for (long i = 0; i < size; ++i)
    for (long j = i; j < size; ++j) s(i, j) = s(j, i) = overlap_element<Real>(c, i, j);
  return s;
}

// H_ij = int u_i (-c2 u_j'' - c1 u_j') dphi on the monomial members.
template <class Real = double>
Real hamiltonian_element(ModelKind model, const SymmetryClass& c, const Real& xi,
                         long i, long j, const QuadratureRule& rule) {
  const CoefficientPair<Real> coeff = coefficient_functions(model, xi);
  const BasisFunction<Real> ui = basis_function<Real>(c, i);
  const BasisFunction<Real> uj = basis_function<Real>(c, j);
  return integrate<Real>(rule, [&](const Real& phi) {
    return ui.value(phi) *
           (-coeff.c2(phi) * uj.second_derivative(phi) - coeff.c1(phi) * uj.derivative(phi));
  });
}

template <class Real = double>
struct RitzSystem {
  ModelKind model;
  SymmetryClass symmetry;
  Real xi;
  long size;
  Matrix<Real> h_matrix;
  Matrix<Real> s_matrix;
  QuadratureRule rule;
};

template <class Real = double>
RitzSystem<Real> build_system(ModelKind model, const SymmetryClass& c, const Real& xi,
                              long size, const QuadratureRule& rule) {
  if (size < 1) throw std::invalid_argument("basis size must be positive");
  require_valid_xi(xi);
  RitzSystem<Real> sys{model, c, xi, size, Matrix<Real>(size, size),
                       overlap_matrix<Real>(c, size), rule};
  for (long i = 0; i < size; ++i)
    for (long j = 0; j < size; ++j)
      sys.h_matrix(i, j) = hamiltonian_element<Real>(model, c, xi, i, j, rule);
  return sys;
}

template <class Real = double>
RitzSystem<Real> build_system(ModelKind model, const SymmetryClass& c, const Real& xi,
                              long size) {
  return build_system<Real>(model, c, xi, size, auto_rule(static_cast<int>(size)));
}

// Gram diagonal of the harmonic members: pi * (2 for the constant, 1 otherwise).
template <class Real = double>
Vector<Real> trig_gram_diagonal(const SymmetryClass& c, long size) {
  if (size < 1) throw std::invalid_argument("basis size must be positive");
  Vector<Real> d(size);
  for (long k = 0; k < size; ++k)
    d(k) = pi_value<Real>() * (class_fourier_index(c, k) == 0 ? Real(2) : Real(1));
  return d;
}

// Hamiltonian (or its xi derivative) on the harmonic members of the class.
// Entry (i, k) = int v_i (-c2 v_k'' - c1 v_k') dphi with v_k'' = -n_k^2 v_k.
template <class Real = double>
Matrix<Real> trig_hamiltonian(ModelKind model, const SymmetryClass& c, const Real& xi,
                              long size, const QuadratureRule& rule,
                              bool xi_derivative = false) {
  if (size < 1) throw std::invalid_argument("basis size must be positive");
  const CoefficientPair<Real> coeff = coefficient_functions(model, xi);
  const bool sine = c.reflection_parity < 0;
  const int m = rule.node_count;
  const Real step = Real(2) * pi_value<Real>() / Real(m);

  std::vector<Real> a(m), b(m);
  for (int j = 0; j < m; ++j) {
    const Real phi = step * Real(j);
    a[j] = -(xi_derivative ? coeff.c2_xi(phi) : coeff.c2(phi));
    b[j] = -(xi_derivative ? coeff.c1_xi(phi) : coeff.c1(phi));
  }

  std::vector<std::vector<Real>> val(size), dval(size);
  for (long r = 0; r < size; ++r) {
    const Real n = Real(class_fourier_index(c, r));
    val[r].resize(m);
    dval[r].resize(m);
    using std::cos;
    using std::sin;
    for (int j = 0; j < m; ++j) {
      const Real arg = n * step * Real(j);
      if (sine) {
        val[r][j] = sin(arg);
        dval[r][j] = n * cos(arg);
      } else {
        val[r][j] = cos(arg);
        dval[r][j] = -n * sin(arg);
      }
    }
  }

  Matrix<Real> h(size, size);
  for (long i = 0; i < size; ++i) {
    for (long k = 0; k < size; ++k) {
      const Real nk = Real(class_fourier_index(c, k));
      const Real nk2 = nk * nk;
      Real sum(0);
      for (int j = 0; j < m; ++j)
        sum += val[i][j] * (b[j] * dval[k][j] - a[j] * nk2 * val[k][j]);
      h(i, k) = sum * step;
    }
  }
  return h;
}

// Column k of T holds the harmonic coefficients of monomial member k; the
// matrix is upper triangular with positive diagonal.
inline RationalMatrix change_of_basis(const SymmetryClass& c, long size) {
  if (size < 1) throw std::invalid_argument("basis size must be positive");
  const bool sine = c.reflection_parity < 0;
  RationalMatrix t(size, std::vector<Rational>(size, Rational(0)));
  for (long k = 0; k < size; ++k) {
    const TrigPoly u = TrigPoly::basis_member(c, k);
    for (long r = 0; r <= k; ++r) {
      const long n = class_fourier_index(c, r);
      t[r][k] = sine ? u.sin_coefficient(n) : u.cos_coefficient(n);
    }
  }
  return t;
}

inline RationalMatrix change_of_basis_inverse(const SymmetryClass& c, long size) {
  const RationalMatrix t = change_of_basis(c, size);
  RationalMatrix inv(size, std::vector<Rational>(size, Rational(0)));
  for (long col = 0; col < size; ++col) {
    for (long r = col; r >= 0; --r) {
      Rational s = r == col ? Rational(1) : Rational(0);
      for (long q = r + 1; q <= col; ++q) s -= t[r][q] * inv[q][col];
      inv[r][col] = s / t[r][r];
    }
  }
  return inv;
}

// 1-norm condition number of the monomial overlap matrix, computed from the
// exact factorization S = T^t D T (the pi factors cancel).
inline double overlap_condition(const SymmetryClass& c, long size) {
  const RationalMatrix t = change_of_basis(c, size);
  const RationalMatrix tinv = change_of_basis_inverse(c, size);
  const auto weight = [&](long r) { return Rational(class_fourier_index(c, r) == 0 ? 2 : 1); };

  Rational norm_s(0), norm_sinv(0);
  for (long j = 0; j < size; ++j) {
    Rational col_s(0), col_sinv(0);
    for (long i = 0; i < size; ++i) {
      Rational sij(0), vij(0);
      for (long r = 0; r < size; ++r) {
        sij += t[r][i] * weight(r) * t[r][j];
        vij += tinv[i][r] * tinv[j][r] / weight(r);
      }
      col_s += sij < 0 ? -sij : sij;
      col_sinv += vij < 0 ? -vij : vij;
    }
    if (col_s > norm_s) norm_s = col_s;
    if (col_sinv > norm_sinv) norm_sinv = col_sinv;
  }
  return rational_cast<double>(norm_s * norm_sinv);
}

}  // namespace epath
